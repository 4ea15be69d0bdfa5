"""Seeded random instances: dissections, cell pieces, perturbations.

Random frieze pieces come from Plücker coordinates: for increasing
rationals ``t`` and positive weights ``w`` the values
``w_i w_j (t_j - t_i)`` satisfy every Ptolemy relation, independently of
the gluing code.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
import random

from .frieze import glue_many
from .polygon import Dissection, Polygon, cells, crosses
from .semifield import RATIONAL, TROPICAL, PositiveRational, TropicalInt

__all__ = [
    "VALUE_SET",
    "random_dissection",
    "random_rational",
    "random_piece",
    "plucker_piece",
    "random_instance",
    "perturb_value",
    "interior_diagonals",
]

VALUE_SET = (PositiveRational(1), PositiveRational(2), PositiveRational(1, 2))


def random_dissection(p, rng, size=None, max_size=None):
    """A random dissection; ``size`` members if possible, else maximal."""
    internal = p.internal_diagonals()
    rng.shuffle(internal)
    limit = p.n - 3
    if max_size is not None:
        limit = min(limit, max_size)
    target = rng.randint(0, limit) if size is None else min(size, limit)
    chosen = []
    for e in internal:
        if len(chosen) >= target:
            break
        if all(not crosses(p, e, c) for c in chosen):
            chosen.append(e)
    return Dissection(p, frozenset(chosen))


def random_rational(rng, hi=9):
    return PositiveRational(rng.randint(1, hi), rng.randint(1, hi))


def _draw(rng, semifield, values):
    if values is not None:
        return rng.choice(values)
    if semifield is TROPICAL:
        return TropicalInt(rng.randint(-5, 5))
    return random_rational(rng)


def random_piece(cell, rng, semifield=RATIONAL, values=None, fixed=None):
    """Arbitrary values on the diagonals of ``cell``, honouring ``fixed``."""
    fixed = fixed or {}
    return {e: fixed[e] if e in fixed else _draw(rng, semifield, values)
            for e in combinations(cell, 2)}


def plucker_piece(cell, rng, fixed_edge=None):
    """A random frieze on ``cell`` (rational semifield).

    With ``fixed_edge=(e, x)`` the weights are rescaled so the piece takes
    value ``x`` on the diagonal ``e``.
    """
    t = sorted(rng.sample(range(1, 40), len(cell)))
    w = [Fraction(rng.randint(1, 6), rng.randint(1, 6)) for _ in cell]
    pos = {v: k for k, v in enumerate(cell)}
    if fixed_edge is not None:
        (a, b), x = fixed_edge
        i, j = sorted((pos[a], pos[b]))
        current = w[i] * w[j] * (t[j] - t[i])
        # scaling w_i alone scales every value touching vertex i
        w[i] *= x.as_fraction() / current
    out = {}
    for a, b in combinations(cell, 2):
        i, j = pos[a], pos[b]
        out[(a, b)] = PositiveRational(w[i] * w[j] * (t[j] - t[i]))
    return out


def _dual_tree_order(d, cell_list):
    """Cells in BFS order over the dual tree, each with its parent diagonal."""
    order = [(cell_list[0], None)]
    seen = {cell_list[0]}
    k = 0
    while k < len(order):
        cell = order[k][0]
        for other in cell_list:
            if other in seen:
                continue
            shared = set(cell) & set(other)
            if len(shared) == 2 and tuple(sorted(shared)) in d.diagonals:
                seen.add(other)
                order.append((other, tuple(sorted(shared))))
        k += 1
    return order


def random_instance(p, d, rng, semifield=RATIONAL, values=None, frieze_pieces=False):
    """Pieces on the cells of ``d`` that agree on shared diagonals, and their gluing.

    Returns ``(pieces, glued_map)``.  With ``frieze_pieces`` every piece is
    a Plücker frieze (rational semifield only).
    """
    cell_list = cells(p, d)
    if frieze_pieces:
        fixed = {}
        pieces = []
        for cell, parent in _dual_tree_order(d, cell_list):
            pin = None if parent is None else (parent, fixed[parent])
            piece = plucker_piece(cell, rng, pin)
            for e in d.diagonals:
                if e in piece:
                    fixed.setdefault(e, piece[e])
            pieces.append(piece)
    else:
        fixed = {e: _draw(rng, semifield, values) for e in d.sorted()}
        pieces = [random_piece(cell, rng, semifield, values, fixed) for cell in cell_list]
    return pieces, glue_many(p, d, pieces, semifield=semifield)


def perturb_value(x):
    """A value guaranteed to differ from ``x``."""
    if isinstance(x, TropicalInt):
        return TropicalInt(x.value + 1)
    return x * PositiveRational(2)


def interior_diagonals(p, d, cell):
    """Diagonals of ``cell`` that are neither polygon edges nor in ``d``."""
    return [e for e in combinations(cell, 2) if not p.is_edge(e) and e not in d.diagonals]
