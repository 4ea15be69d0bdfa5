"""T-paths with respect to a dissection, their weights and expansion sums.

A T-path from ``a`` to ``b`` is a vertex tuple ``(a, ..., b)`` whose steps
are pairwise different diagonals, none crossing the dissection, and whose
even-numbered steps (2nd, 4th, ...) are dissection diagonals crossing
``{a, b}`` at points that advance strictly from ``a`` towards ``b``.

:func:`is_tpath` checks those conditions literally.  :func:`enumerate_tpaths`
is a separate depth-first search; each is used as the other's oracle.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .polygon import InvalidInput, crosses, crossing_comparator, diag
from .semifield import sf_sum

__all__ = [
    "Not",
    "is_tpath",
    "enumerate_tpaths",
    "tpaths_with_prefix",
    "tpath_weight",
    "tpath_sum",
    "reverse",
]


class Not(NamedTuple):
    """Prefix constraint "this position is not ``vertex``"."""

    vertex: int


def _check_ends(p, a, b):
    p.check_vertex(a)
    p.check_vertex(b)
    if a == b:
        raise InvalidInput(f"T-paths need distinct end points, got {a} twice")


def is_tpath(p, d, seq, a, b):
    _check_ends(p, a, b)
    seq = tuple(seq)
    for v in seq:
        p.check_vertex(v)
    if len(seq) < 2 or seq[0] != a or seq[-1] != b:
        return False
    if any(u == v for u, v in zip(seq, seq[1:])):
        return False
    steps = [diag(u, v) for u, v in zip(seq, seq[1:])]
    # (i)
    if len(set(steps)) != len(steps):
        return False
    # (ii)
    for s in steps:
        for e in d.diagonals:
            if crosses(p, s, e):
                return False
    # (iii): steps[1], steps[3], ... are the even-numbered steps
    base = (a, b)
    even = steps[1::2]
    for s in even:
        if s not in d.diagonals or not crosses(p, base, s):
            return False
    for s, t in zip(even, even[1:]):
        if crossing_comparator(p, base, s, t) >= 0:
            return False
    return True


def enumerate_tpaths(p, d, a, b):
    """All T-paths from ``a`` to ``b``, sorted lexicographically."""
    _check_ends(p, a, b)
    return list(_enumerate(p, d, a, b))


@lru_cache(maxsize=4096)
def _free_steps(p, d):
    """``free[u][v]``: is ``{u, v}`` a diagonal crossing no member of ``d``."""
    n = p.n
    return tuple(tuple(v != u and not any(crosses(p, (u, v), e) for e in d.diagonals)
                       for v in range(n)) for u in range(n))


@lru_cache(maxsize=65536)
def _enumerate(p, d, a, b):
    base = (a, b)
    crossing = d.crossing(diag(a, b))
    n = p.n
    free = _free_steps(p, d)
    out = []

    def extend(path, used, last_even):
        u = path[-1]
        # odd step: ends the path at b, or lands on a vertex that starts
        # a later even step
        for v in range(n):
            if not free[u][v] or diag(u, v) in used:
                continue
            if v == b:
                out.append(tuple(path) + (b,))
                continue
            for e in crossing:
                if v not in e or e in used:
                    continue
                if last_even is not None and crossing_comparator(p, base, last_even, e) >= 0:
                    continue
                w = e[0] if e[1] == v else e[1]
                s = diag(u, v)
                if s == e:
                    continue
                extend(path + [v, w], used | {s, e}, e)

    extend([a], frozenset(), None)
    for path in out:
        assert len(path) % 2 == 0, path
    return tuple(sorted(out))


def tpaths_with_prefix(p, d, a, b, prefix=()):
    """T-paths whose leading entries match ``prefix``.

    Prefix entries are vertices (equality) or :class:`Not` (inequality).
    """
    def ok(path):
        if len(path) < len(prefix):
            return False
        for c, v in zip(prefix, path):
            if isinstance(c, Not):
                if v == c.vertex:
                    return False
            elif v != c:
                return False
        return True

    return [pi for pi in enumerate_tpaths(p, d, a, b) if ok(pi)]


def tpath_weight(f, path):
    """Odd-step values multiplied, divided by the product of even-step values."""
    num = den = None
    for i, (u, v) in enumerate(zip(path, path[1:])):
        x = f(u, v)
        if i % 2 == 0:
            num = x if num is None else num * x
        else:
            den = x if den is None else den * x
    return num if den is None else num / den


def tpath_sum(f, d, a, b):
    return sf_sum(tpath_weight(f, pi) for pi in enumerate_tpaths(f.polygon, d, a, b))


def reverse(path):
    return tuple(reversed(path))
