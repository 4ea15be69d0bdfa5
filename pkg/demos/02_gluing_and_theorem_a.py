"""Gluing arbitrary cell data, and when the T-path formula holds.

Values on the cells of a dissection can be anything; gluing extends them
to the unique map that satisfies Ptolemy at every crossing with the
dissection (a weak frieze).  Such maps are exactly the ones that satisfy
the T-path formula, which this script checks in both directions.
"""

import random

from weakfrieze import (
    Polygon, cells, crosses, glue_many, is_frieze, propagate, verify_theorem_a,
)
from weakfrieze.generate import perturb_value, random_dissection, random_instance

rng = random.Random(3)

# %% random pieces on a random dissection of an octagon
p = Polygon(8)
d = random_dissection(p, rng, size=3)
print("dissection:", d.sorted())
print("cells:", cells(p, d))
pieces, f = random_instance(p, d, rng)
for e in [(0, 4), (1, 5), (2, 6), (3, 7)]:
    print(f"f{e} = {f[e]}")

# %% the gluing does not depend on the order of the folds
print("reverse fold order agrees:", glue_many(p, d, pieces, order=d.sorted()[::-1]) == f)
# nor on the gluing table at all: Ptolemy propagation reaches the same map
known = {e: x for piece in pieces for e, x in piece.items()}
print("propagation agrees:", propagate(p, d, known) == f)

# %% weak frieze and T-path formula, computed independently
print("glued map:", verify_theorem_a(f, d).as_dict())
print("is a frieze:", is_frieze(f))

# %% break one value on a diagonal that crosses the dissection
cross = next(e for e in p.diagonals() if any(crosses(p, e, x) for x in d.diagonals))
g = f.replace({cross: perturb_value(f[cross])})
print(f"doubling f{cross}:", verify_theorem_a(g, d).as_dict())

# %% a small campaign
agree = 0
for k in range(100):
    q = Polygon(rng.randint(4, 9))
    dd = random_dissection(q, rng)
    _, h = random_instance(q, dd, rng)
    if k % 2:
        e = rng.choice(q.internal_diagonals())
        h = h.replace({e: perturb_value(h[e])})
    agree += verify_theorem_a(h, dd).agree
print(f"{agree}/100 instances agree")
