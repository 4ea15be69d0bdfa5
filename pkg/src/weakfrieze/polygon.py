"""Polygons as cyclic vertex orders, diagonals, crossings and dissections.

Vertices of an n-gon are the labels ``0..n-1`` in anticlockwise order.  A
diagonal is stored as a sorted pair ``(i, j)`` with ``i < j``; edges are
diagonals too.  Everything here is combinatorial; no coordinates are used.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "InvalidInput",
    "Polygon",
    "Dissection",
    "diag",
    "crosses",
    "validate_dissection",
    "cells",
    "crossing_comparator",
    "arc",
    "ears",
    "dissections",
    "triangulations",
]


class InvalidInput(ValueError):
    """Malformed polygon, diagonal or dissection input."""


def diag(a, b):
    """Normalized diagonal ``{a, b}``."""
    if a == b:
        raise InvalidInput(f"a diagonal needs two distinct end points, got {a}, {b}")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Polygon:
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 3:
            raise InvalidInput(f"a polygon needs n >= 3 vertices, got {self.n!r}")

    @property
    def vertices(self):
        return range(self.n)

    def succ(self, v):
        return (v + 1) % self.n

    def pred(self, v):
        return (v - 1) % self.n

    def check_vertex(self, v):
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidInput(f"vertex {v!r} out of range for a {self.n}-gon")
        return v

    def check_diagonal(self, d):
        a, b = d
        self.check_vertex(a)
        self.check_vertex(b)
        return diag(a, b)

    def is_edge(self, d):
        a, b = self.check_diagonal(d)
        return b - a == 1 or (a == 0 and b == self.n - 1)

    def diagonals(self):
        """All n(n-1)/2 diagonals, edges included, in sorted order."""
        return list(combinations(range(self.n), 2))

    def edges(self):
        return [diag(i, (i + 1) % self.n) for i in range(self.n)]

    def internal_diagonals(self):
        return [d for d in self.diagonals() if not self.is_edge(d)]


@dataclass(frozen=True)
class Dissection:
    """A validated set of pairwise non-crossing internal diagonals.

    Build with :func:`validate_dissection`; the constructor does not check.
    """

    polygon: Polygon
    diagonals: frozenset

    def __iter__(self):
        return iter(sorted(self.diagonals))

    def __len__(self):
        return len(self.diagonals)

    def __contains__(self, d):
        return d in self.diagonals

    def sorted(self):
        return sorted(self.diagonals)

    def crossing(self, d):
        """Members of the dissection that cross ``d``."""
        return [e for e in sorted(self.diagonals) if crosses(self.polygon, d, e)]


def crosses(p, d1, d2):
    """True iff the end points of ``d1`` and ``d2`` are distinct and interleave."""
    a, b = d1
    c, e = d2
    n = p.n
    for v in (a, b, c, e):
        if v.__class__ is not int or not 0 <= v < n:
            p.check_vertex(v)
    if a == b or c == e:
        raise InvalidInput(f"degenerate diagonal in {d1!r}, {d2!r}")
    if a > b:
        a, b = b, a
    if a == c or a == e or b == c or b == e:
        return False
    return (a < c < b) != (a < e < b)


def validate_dissection(p, ds):
    """Check ``ds`` and return a :class:`Dissection`.

    Raises :class:`InvalidInput` naming the first offending member or pair.
    Duplicates are rejected rather than merged.
    """
    seen = []
    for raw in ds:
        try:
            a, b = raw
        except (TypeError, ValueError):
            raise InvalidInput(f"malformed diagonal {raw!r}") from None
        d = p.check_diagonal((a, b))
        if p.is_edge(d):
            raise InvalidInput(f"{list(d)} is an edge, not an internal diagonal")
        if d in seen:
            raise InvalidInput(f"duplicate diagonal {list(d)}")
        for e in seen:
            if crosses(p, d, e):
                raise InvalidInput(f"diagonals {list(e)} and {list(d)} cross")
        seen.append(d)
    return Dissection(p, frozenset(seen))


def arc(n, a, b, *, closed=True):
    """Vertices met walking anticlockwise from ``a`` to ``b``."""
    out = []
    v = a
    while True:
        out.append(v)
        if v == b:
            break
        v = (v + 1) % n
    return out if closed else out[1:-1]


def cells(p, d):
    """The ``len(d) + 1`` subpolygons cut out by the dissection.

    Each cell is a tuple of labels in ambient cyclic order starting at its
    smallest label; the list is sorted.
    """
    pieces = [tuple(p.vertices)]
    for a, b in d.sorted():
        for k, cell in enumerate(pieces):
            if a in cell and b in cell:
                # contiguous in the cell's cyclic order iff it's an edge of the cell
                i, j = cell.index(a), cell.index(b)
                if j - i in (1, len(cell) - 1):
                    continue
                pieces[k] = cell[i:j + 1]
                pieces.append(tuple(sorted(cell[j:] + cell[:i + 1])))
                break
        else:  # pragma: no cover - validated dissections always split
            raise InvalidInput(f"diagonal {[a, b]} does not split any cell")
    return sorted(pieces)


def crossing_comparator(p, base, e1, e2):
    """Order the crossing points of ``e1`` and ``e2`` along ``base``.

    ``base`` is an ordered pair ``(alpha, beta)``; the direction is from
    ``alpha`` to ``beta``.  Returns -1 if ``e1`` crosses closer to ``alpha``,
    1 if farther, 0 if ``e1 == e2``.  Both diagonals must cross ``base`` and
    must not cross each other.
    """
    alpha, beta = base
    k1 = _crossing_key(p, alpha, beta, e1)
    k2 = _crossing_key(p, alpha, beta, e2)
    if diag(*e1) == diag(*e2):
        return 0
    if crosses(p, e1, e2):
        raise ValueError(f"{list(e1)} and {list(e2)} cross each other")
    return -1 if k1 < k2 else 1


def _crossing_key(p, alpha, beta, e):
    if not crosses(p, (alpha, beta), e):
        raise ValueError(f"{list(e)} does not cross {[alpha, beta]}")
    n = p.n
    span = (beta - alpha) % n
    u, v = e
    pu, pv = (u - alpha) % n, (v - alpha) % n
    # near end in the open arc alpha->beta, far end in beta->alpha
    near, far = (pu, pv) if pu < span else (pv, pu)
    return (near, -far)


def ears(p, d):
    """Yield ``(zeta, eta)`` for every ear of the dissection.

    The ear is the cell on the anticlockwise arc from ``zeta`` to ``eta``;
    no member of ``d`` has an end point strictly inside that arc.
    """
    endpoints = {v for e in d.diagonals for v in e}
    for a, b in d.sorted():
        for zeta, eta in ((a, b), (b, a)):
            inner = arc(p.n, zeta, eta, closed=False)
            if not endpoints.intersection(inner):
                yield zeta, eta


def dissections(p, max_size=None):
    """Every dissection of ``p`` (optionally with at most ``max_size`` members)."""
    internal = p.internal_diagonals()
    limit = len(internal) if max_size is None else max_size

    def rec(start, chosen):
        yield Dissection(p, frozenset(chosen))
        if len(chosen) == limit:
            return
        for t in range(start, len(internal)):
            e = internal[t]
            if all(not crosses(p, e, c) for c in chosen):
                yield from rec(t + 1, chosen + [e])

    yield from rec(0, [])


def triangulations(p):
    """Every triangulation of ``p``, i.e. every dissection with n-3 members."""

    def rec(cell):
        if len(cell) <= 3:
            yield []
            return
        first, last = cell[0], cell[-1]
        # the triangle on edge (first, last) has apex cell[k]
        for k in range(1, len(cell) - 1):
            apex = cell[k]
            left, right = cell[:k + 1], cell[k:]
            extra = []
            if k > 1:
                extra.append(diag(first, apex))
            if k < len(cell) - 2:
                extra.append(diag(apex, last))
            for lt in rec(left):
                for rt in rec(right):
                    yield extra + lt + rt

    for tri in rec(tuple(p.vertices)):
        yield Dissection(p, frozenset(tri))
