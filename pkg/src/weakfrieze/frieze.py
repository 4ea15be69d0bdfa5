"""Diagonal-valued maps, Ptolemy checks and gluing of weak friezes.

A :class:`DiagonalMap` assigns a semifield value to every diagonal of a
polygon (edges included).  A map is a *frieze* when the Ptolemy relation

    f(a,b) f(c,d) = f(a,c) f(b,d) + f(a,d) f(b,c)

holds for every crossing pair ``{a,b}``, ``{c,d}``, and a *weak frieze* with
respect to a dissection ``D`` when it holds whenever ``{c,d}`` is in ``D``.

Gluing (:func:`glue_pair`, :func:`glue_many`) builds the unique weak frieze
that restricts to given pieces on the cells of a dissection.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from types import MappingProxyType

from .polygon import (
    InvalidInput, Polygon, Dissection, cells, crosses, diag,
    validate_dissection,
)
from .semifield import RATIONAL, semifield_of
from .tpath import tpath_sum

__all__ = [
    "GluingError",
    "DiagonalMap",
    "ptolemy_holds",
    "ptolemy_witness",
    "is_frieze",
    "is_weak_frieze",
    "trivial_map",
    "cell_values",
    "glue_pair",
    "glue_many",
    "propagate",
    "cc_frieze",
    "satisfies_tpath_formula",
    "tpath_formula_witness",
    "TheoremAReport",
    "verify_theorem_a",
]


class GluingError(ValueError):
    """The pieces handed to a gluing violate its hypotheses."""


def _norm_values(values, semifield):
    out = {}
    for (a, b), x in values.items():
        key = diag(a, b)
        if key in out:
            raise InvalidInput(f"diagonal {list(key)} given twice")
        x = semifield.coerce(x)
        out[key] = x
    return out


class DiagonalMap:
    """A total map ``diag(P) -> K``.

    ``values`` maps diagonals (pairs in either order) to semifield values
    or to things the semifield can coerce (ints, ``"p/q"`` strings).  The
    semifield defaults to the one the first value belongs to, or rational.
    """

    __slots__ = ("polygon", "semifield", "_values")

    def __init__(self, polygon, values, semifield=None):
        if isinstance(polygon, int):
            polygon = Polygon(polygon)
        if semifield is None:
            first = next(iter(values.values()), None)
            try:
                semifield = semifield_of(first)
            except TypeError:
                semifield = RATIONAL
        vals = _norm_values(values, semifield)
        expected = set(polygon.diagonals())
        missing = expected - vals.keys()
        extra = vals.keys() - expected
        if missing or extra:
            raise InvalidInput(
                f"a map on a {polygon.n}-gon needs exactly its {len(expected)} diagonals;"
                f" missing {sorted(missing)[:5]}, unexpected {sorted(extra)[:5]}")
        object.__setattr__(self, "polygon", polygon)
        object.__setattr__(self, "semifield", semifield)
        object.__setattr__(self, "_values", MappingProxyType(vals))

    def __setattr__(self, name, value):
        raise AttributeError("DiagonalMap is immutable")

    def __call__(self, a, b):
        return self._values[diag(a, b)]

    def __getitem__(self, d):
        return self._values[diag(*d)]

    @property
    def values(self):
        return self._values

    def items(self):
        return sorted(self._values.items())

    def restrict(self, vertices):
        """Values on the diagonals among ``vertices``."""
        return {d: self._values[d] for d in combinations(sorted(vertices), 2)}

    def replace(self, updates):
        vals = dict(self._values)
        for d, x in updates.items():
            key = diag(*d)
            if key not in vals:
                raise InvalidInput(f"{list(key)} is not a diagonal of the polygon")
            vals[key] = self.semifield.coerce(x)
        return DiagonalMap(self.polygon, vals, self.semifield)

    def __eq__(self, other):
        if not isinstance(other, DiagonalMap):
            return NotImplemented
        return (self.polygon == other.polygon and self.semifield is other.semifield
                and dict(self._values) == dict(other._values))

    def __hash__(self):
        return hash((self.polygon, self.semifield.name, frozenset(self._values.items())))

    def __repr__(self):
        return f"DiagonalMap(n={self.polygon.n}, semifield={self.semifield.name})"


def ptolemy_holds(f, d1, d2):
    p = f.polygon
    if not crosses(p, d1, d2):
        raise ValueError(f"{list(d1)} and {list(d2)} do not cross")
    a, b = d1
    c, d = d2
    return f(a, b) * f(c, d) == f(a, c) * f(b, d) + f(a, d) * f(b, c)


def ptolemy_witness(f, dissection=None):
    """First crossing pair (in sorted order) where the Ptolemy relation fails.

    With a dissection, only pairs whose second member lies in it are tried.
    Returns ``None`` when there is no failure.
    """
    p = f.polygon
    diagonals = p.diagonals()
    seconds = diagonals if dissection is None else dissection.sorted()
    for d1 in diagonals:
        for d2 in seconds:
            if crosses(p, d1, d2) and not ptolemy_holds(f, d1, d2):
                return d1, d2
    return None


def is_frieze(f):
    return ptolemy_witness(f) is None


def is_weak_frieze(f, d):
    return ptolemy_witness(f, d) is None


def trivial_map(p, semifield=RATIONAL):
    if isinstance(p, int):
        p = Polygon(p)
    one = semifield.one()
    return DiagonalMap(p, {d: one for d in p.diagonals()}, semifield)


def cell_values(f, cell):
    """Restriction of a map (or plain dict) to the diagonals of a cell."""
    get = f.__getitem__
    return {d: get(d) for d in combinations(sorted(cell), 2)}


def _split_arcs(order, zeta, eta):
    """Open arcs ``zeta -> eta`` and ``eta -> zeta`` of a cyclic order."""
    k = len(order)
    i, j = order.index(zeta), order.index(eta)
    u1 = [order[(i + t) % k] for t in range(1, (j - i) % k)]
    u2 = [order[(j + t) % k] for t in range(1, (i - j) % k)]
    return u1, u2


def _glue(v1, f1, v2, f2, shared):
    """Glue value dicts on vertex sets ``v1`` and ``v2`` sharing ``shared``.

    Vertex sets are labels in a common cyclic order (sorted ints).  Returns
    the merged vertex tuple and the merged value dict.
    """
    zeta, eta = shared
    s1, s2 = set(v1), set(v2)
    if s1 & s2 != {zeta, eta}:
        raise GluingError(
            f"pieces on {sorted(s1)} and {sorted(s2)} must meet exactly in {list(shared)}")
    union = tuple(sorted(s1 | s2))
    u1, u2 = _split_arcs(union, zeta, eta)
    if set(u1) == s2 - s1:
        u1, u2 = u2, u1
    if set(u1) != s1 - s2 or set(u2) != s2 - s1:
        raise GluingError(
            f"{list(shared)} does not separate {sorted(s1)} from {sorted(s2)}")
    key = diag(zeta, eta)
    x = f1[key]
    if x != f2[key]:
        raise GluingError(
            f"pieces disagree on shared diagonal {list(key)}: {f1[key]} vs {f2[key]}")
    # the two pieces must agree wherever they overlap, i.e. on {zeta, eta}
    out = dict(f1)
    out.update(f2)
    xinv = x.inv()
    for a in u1:
        for b in u2:
            out[diag(a, b)] = xinv * (f1[diag(zeta, a)] * f2[diag(eta, b)]
                                      + f2[diag(zeta, b)] * f1[diag(eta, a)])
    return union, out


def _piece_dict(piece, semifield):
    if isinstance(piece, DiagonalMap):
        return dict(piece.values)
    return _norm_values(piece, semifield)


def _vertices_of(values):
    vs = set()
    for a, b in values:
        vs.update((a, b))
    return tuple(sorted(vs))


def _check_complete(vertices, values):
    need = set(combinations(vertices, 2))
    if set(values) != need:
        missing = sorted(need - set(values))
        extra = sorted(set(values) - need)
        raise GluingError(
            f"piece on {list(vertices)} must value exactly its diagonals;"
            f" missing {missing[:5]}, unexpected {extra[:5]}")


def _semifield_for(pieces):
    for piece in pieces:
        if isinstance(piece, DiagonalMap):
            return piece.semifield
        for x in piece.values():
            try:
                return semifield_of(x)
            except TypeError:
                break
    return RATIONAL


def glue_pair(p, shared, f1, f2, semifield=None):
    """Glue two pieces along ``shared`` into a map on all of ``p``.

    ``f1`` and ``f2`` are value dicts (or maps) on the diagonals of the two
    subpolygons that ``shared`` cuts ``p`` into.  Cross diagonals get
    ``x^-1 [f1(zeta,a) f2(eta,b) + f2(zeta,b) f1(eta,a)]`` where ``x`` is the
    common value on ``shared``.
    """
    if isinstance(p, int):
        p = Polygon(p)
    semifield = semifield or _semifield_for([f1, f2])
    shared = p.check_diagonal(shared)
    if p.is_edge(shared):
        raise GluingError(f"{list(shared)} is an edge and cannot split the polygon")
    v1_vals = _piece_dict(f1, semifield)
    v2_vals = _piece_dict(f2, semifield)
    v1, v2 = _vertices_of(v1_vals), _vertices_of(v2_vals)
    _check_complete(v1, v1_vals)
    _check_complete(v2, v2_vals)
    union, out = _glue(v1, v1_vals, v2, v2_vals, shared)
    if union != tuple(p.vertices):
        raise GluingError(f"pieces cover {list(union)}, not all of the {p.n}-gon")
    return DiagonalMap(p, out, semifield)


def glue_many(p, d, pieces, order=None, semifield=None):
    """The unique weak frieze w.r.t. ``d`` restricting to the given pieces.

    ``pieces`` holds one value dict (or map) per cell of ``d``, in any order;
    each is matched to the cell whose diagonals it values.  Gluing folds over
    the members of ``d`` in sorted order unless ``order`` is given.
    """
    if isinstance(p, int):
        p = Polygon(p)
    if not isinstance(d, Dissection):
        d = validate_dissection(p, d)
    semifield = semifield or _semifield_for(pieces)
    by_cell = {}
    for piece in pieces:
        vals = _piece_dict(piece, semifield)
        vs = _vertices_of(vals)
        _check_complete(vs, vals)
        if vs in by_cell:
            raise GluingError(f"two pieces given for cell {list(vs)}")
        by_cell[vs] = vals
    expected = cells(p, d)
    if set(by_cell) != set(expected):
        missing = [list(c) for c in expected if c not in by_cell]
        extra = [list(c) for c in by_cell if c not in expected]
        raise GluingError(f"pieces do not match the cells: missing {missing}, unexpected {extra}")

    current = dict(by_cell)
    folds = d.sorted() if order is None else [p.check_diagonal(e) for e in order]
    if sorted(folds) != d.sorted():
        raise InvalidInput("gluing order must list each dissection diagonal once")
    for e in folds:
        holders = [vs for vs in current if e[0] in vs and e[1] in vs]
        if len(holders) != 2:  # pragma: no cover - cells of a dissection
            raise GluingError(f"{list(e)} is not shared by exactly two pieces")
        va, vb = holders
        union, vals = _glue(va, current.pop(va), vb, current.pop(vb), e)
        current[union] = vals
    (vals,) = current.values()
    return DiagonalMap(p, vals, semifield)


def propagate(p, d, known, semifield=None):
    """Fill in every diagonal from ``known`` using Ptolemy with members of ``d``.

    Independent of the gluing table: an unknown ``{a,b}`` is solved from
    ``f(a,b) = f(c,e)^-1 [f(a,c) f(b,e) + f(a,e) f(b,c)]`` for any ``{c,e}``
    in ``d`` crossing it whose four side values are known.  Every applicable
    ``{c,e}`` must give the same value.
    """
    if isinstance(p, int):
        p = Polygon(p)
    semifield = semifield or _semifield_for([known])
    vals = _norm_values(known, semifield)
    todo = [x for x in p.diagonals() if x not in vals]
    while todo:
        progress = []
        for a, b in todo:
            candidates = set()
            for c, e in d.sorted():
                if not crosses(p, (a, b), (c, e)):
                    continue
                sides = [diag(a, c), diag(b, e), diag(a, e), diag(b, c)]
                if all(s in vals for s in sides):
                    fac, fbe, fae, fbc = (vals[s] for s in sides)
                    candidates.add(vals[(c, e)].inv() * (fac * fbe + fae * fbc))
            if len(candidates) > 1:
                raise GluingError(f"Ptolemy relations disagree on {[a, b]}: {candidates}")
            if candidates:
                progress.append(((a, b), candidates.pop()))
        if not progress:
            raise GluingError(f"cannot determine {[list(x) for x in todo[:5]]}")
        for key, x in progress:
            vals[key] = x
        todo = [x for x in todo if x not in vals]
    return DiagonalMap(p, vals, semifield)


def cc_frieze(p, triangulation, semifield=RATIONAL):
    """Glue trivial maps on the triangles of a triangulation."""
    if isinstance(p, int):
        p = Polygon(p)
    if not isinstance(triangulation, Dissection):
        triangulation = validate_dissection(p, triangulation)
    if len(triangulation) != p.n - 3:
        raise InvalidInput(
            f"a triangulation of a {p.n}-gon has {p.n - 3} diagonals, got {len(triangulation)}")
    one = semifield.one()
    pieces = [{x: one for x in combinations(cell, 2)} for cell in cells(p, triangulation)]
    return glue_many(p, triangulation, pieces, semifield=semifield)


def tpath_formula_witness(f, d):
    """First ordered pair ``(a, b)`` where the T-path formula fails, or None."""
    n = f.polygon.n
    for a in range(n):
        for b in range(n):
            if a != b and f(a, b) != tpath_sum(f, d, a, b):
                return a, b
    return None


def satisfies_tpath_formula(f, d):
    return tpath_formula_witness(f, d) is None


@dataclass(frozen=True)
class TheoremAReport:
    weak: bool
    tpath: bool

    @property
    def agree(self):
        return self.weak == self.tpath

    def as_dict(self):
        return {"weak": self.weak, "tpath": self.tpath, "agree": self.agree}


def verify_theorem_a(f, d):
    """Compute the weak-frieze and T-path-formula predicates independently."""
    return TheoremAReport(weak=is_weak_frieze(f, d), tpath=satisfies_tpath_formula(f, d))

