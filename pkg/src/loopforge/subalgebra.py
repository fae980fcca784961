"""Subloops, nuclei, centrum and center, and their Smarandache cuts.

Subsets are represented as sorted tuples of elements.  The six nuclear
sets of a loop L:

    left nucleus    {a : (a*x)*y = a*(x*y) for all x, y}
    right nucleus   {a : y*(x*a) = (y*x)*a for all x, y}
    middle nucleus  {a : (y*a)*x = y*(a*x) for all x, y}
    nucleus         intersection of the three
    centrum         {a : a*x = x*a for all x}
    center          nucleus intersect centrum

The Smarandache variant of each is its intersection with a designated
associative subgroup of the loop.
"""

from itertools import combinations

import numpy as np

from .tables import CayleyTable, identity_of, is_latin

NUCLEUS_KINDS = ("left", "right", "middle", "full", "centrum", "center")

# exhaustive power-set scan is guaranteed complete up to this order;
# larger tables fall back to closures of at most two generators
_POWERSET_LIMIT = 6


def induced_table(t: CayleyTable, subset) -> CayleyTable:
    """Subtable on *subset*, re-indexed by position in the sorted subset."""
    sub = tuple(sorted(subset))
    if not sub:
        raise ValueError("empty subset has no induced table")
    index = {v: i for i, v in enumerate(sub)}
    if len(index) != len(subset):
        raise ValueError("subset has repeated elements")
    block = t.cells[np.ix_(sub, sub)]
    if not np.isin(block, sub).all():
        raise ValueError(f"subset {sub} is not closed under the operation")
    relabeled = np.vectorize(index.__getitem__, otypes=[np.int64])(block)
    return CayleyTable(relabeled, name=(f"{t.name}|{sub}" if t.name else None))


def is_closed(t: CayleyTable, subset) -> bool:
    sub = tuple(sorted(subset))
    return bool(np.isin(t.cells[np.ix_(sub, sub)], sub).all())


def _closure(t, seed):
    members = set(seed)
    frontier = list(members)
    while frontier:
        fresh = set()
        ms = sorted(members)
        for a in frontier:
            for b in ms:
                for v in (t.mul(a, b), t.mul(b, a)):
                    if v not in members:
                        fresh.add(v)
        members |= fresh
        frontier = sorted(fresh)
    return tuple(sorted(members))


def subloops(t: CayleyTable) -> list:
    """All subsets containing the identity that are closed under the
    operation, sorted by size then lexicographically.

    Closure on a finite Latin table forces the induced table to be Latin,
    so every returned subset is a subloop.  Includes the singleton {e} and
    the whole set.  Complete by power-set scan up to order 6; above that,
    closures of all generator sets of size at most two are returned.
    """
    if not is_latin(t):
        raise ValueError("subloops requires a Latin table")
    e = identity_of(t)
    if e is None:
        raise ValueError("subloops requires a two-sided identity")
    n = t.order
    found = set()
    if n <= _POWERSET_LIMIT:
        others = [x for x in range(n) if x != e]
        for r in range(len(others) + 1):
            for extra in combinations(others, r):
                cand = tuple(sorted((e,) + extra))
                if is_closed(t, cand):
                    found.add(cand)
    else:
        found.add((e,))
        for x in range(n):
            found.add(_closure(t, {e, x}))
            for y in range(x + 1, n):
                found.add(_closure(t, {e, x, y}))
    return sorted(found, key=lambda s: (len(s), s))


def nucleus(t: CayleyTable, kind: str) -> tuple:
    """The nuclear set of the given kind, as a sorted tuple of elements."""
    if kind not in NUCLEUS_KINDS:
        raise ValueError(f"kind must be one of {', '.join(NUCLEUS_KINDS)}, got {kind!r}")
    if not is_latin(t):
        raise ValueError("nucleus requires a Latin table")
    c = t.cells
    n = t.order

    def left_ok(a):
        return np.array_equal(c[c[a], :], c[a, c])

    def right_ok(a):
        return np.array_equal(c[:, c[:, a]], c[:, a][c])

    def middle_ok(a):
        return np.array_equal(c[c[:, a], :], c[:, c[a, :]])

    def centrum_ok(a):
        return np.array_equal(c[a, :], c[:, a])

    tests = {
        "left": (left_ok,),
        "right": (right_ok,),
        "middle": (middle_ok,),
        "full": (left_ok, right_ok, middle_ok),
        "centrum": (centrum_ok,),
        "center": (left_ok, right_ok, middle_ok, centrum_ok),
    }[kind]
    return tuple(a for a in range(n) if all(test(a) for test in tests))


def is_s_subsemigroup(t: CayleyTable, subset) -> bool:
    """True iff *subset* is a nontrivial associative closed subset (and
    contains the identity when the ambient table has one)."""
    sub = tuple(sorted(set(subset)))
    if len(sub) < 2 or any(not 0 <= v < t.order for v in sub):
        return False
    if not is_closed(t, sub):
        return False
    e = identity_of(t)
    if e is not None and e not in sub:
        return False
    ind = induced_table(t, sub)
    k = ind.order
    cc = ind.cells
    return all(np.array_equal(cc[cc[x], :], cc[x, cc]) for x in range(k))


def require_s_subsemigroup(t: CayleyTable, subset):
    if not is_s_subsemigroup(t, subset):
        raise ValueError(
            f"{tuple(sorted(subset))} is not an S-subsemigroup: need a nontrivial "
            "closed associative subset containing the identity"
        )


def smarandache_nucleus(t: CayleyTable, g, kind: str) -> tuple:
    """Nuclear set of the given kind intersected with the S-subgroup *g*."""
    require_s_subsemigroup(t, g)
    inside = set(g)
    return tuple(a for a in nucleus(t, kind) if a in inside)
