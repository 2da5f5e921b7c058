"""Certificates: a predicate value together with the data that justifies it."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

SCHEMA = 1


@dataclass
class Certificate:
    predicate: str
    value: bool
    witness: Any = None

    def __bool__(self):
        return bool(self.value)

    def as_dict(self) -> dict:
        return {"predicate": self.predicate, "value": bool(self.value), "witness": jsonable(self.witness)}


def jsonable(x):
    """Convert sets, tuples and nested certificates into plain JSON values."""
    if isinstance(x, Certificate):
        return x.as_dict()
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (frozenset, set)):
        return sorted(jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "as_dict"):
        return x.as_dict()
    return x
