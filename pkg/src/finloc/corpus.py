"""The shipped fixture corpus: every distributive lattice with at most five
elements, the Boolean cube, and the named Scott domains."""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .textio import parse_domain, parse_lattice

LATTICES = ("one", "c2", "c3", "c4", "m2", "c5", "m2_top", "m2_bot", "cube")
DOMAINS = ("one", "c2", "flat2", "flat3", "m2")


def _read(name: str) -> str:
    return resources.files("finloc").joinpath("corpus", name).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def lattice(name: str):
    return parse_lattice(_read(f"{name}.lat"))


@lru_cache(maxsize=None)
def domain(name: str):
    return parse_domain(_read(f"{name}.dom"))


def lattices(max_size: int | None = None) -> dict:
    out = {n: lattice(n) for n in LATTICES}
    if max_size is not None:
        out = {n: L for n, L in out.items() if L.n <= max_size}
    return out


# every finite distributive lattice is a frame
frames = lattices


def domains() -> dict:
    return {n: domain(n) for n in DOMAINS}
