"""Global candidate budget shared by every enumerator."""
from contextlib import contextmanager
from contextvars import ContextVar

from .errors import CapExceeded

DEFAULT_CAP = 10**7
# subset enumerations (way-below, ideals, up-sets) are additionally bounded by 2^20
SUBSET_CAP = 2**20

_cap = ContextVar("finloc_cap", default=DEFAULT_CAP)


def get_cap():
    return _cap.get()


@contextmanager
def cap_limit(cap):
    token = _cap.set(cap)
    try:
        yield cap
    finally:
        _cap.reset(token)


def resolve(cap):
    return get_cap() if cap is None else cap


def check(needed, cap=None):
    cap = resolve(cap)
    if needed > cap:
        raise CapExceeded(needed, cap)


def check_subsets(n, cap=None):
    """Guard for enumerations over all subsets of an ``n``-element carrier."""
    limit = min(resolve(cap), SUBSET_CAP)
    if 2**n > limit:
        raise CapExceeded(2**n, limit)


class Budget:
    """Counts search nodes for pruned backtracking enumerators."""

    def __init__(self, cap=None):
        self.cap = resolve(cap)
        self.used = 0

    def tick(self):
        self.used += 1
        if self.used > self.cap:
            raise CapExceeded(self.used, self.cap)
