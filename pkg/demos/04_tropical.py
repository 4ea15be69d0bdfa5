"""The same constructions over the tropical semifield (max, +).

Integers with max as addition and + as multiplication have no subtraction
either, so gluing and T-paths work unchanged.  Sums over T-paths become a
maximum of (odd-step total minus even-step total).
"""

import random

from weakfrieze import (
    TROPICAL, Polygon, enumerate_tpaths, is_frieze, satisfies_tpath_formula,
    tpath_weight, trivial_map,
)
from weakfrieze.generate import random_dissection, random_instance

# %% the zero map plays the role of the all-ones map
print("zero map on a hexagon is a frieze:", is_frieze(trivial_map(6, TROPICAL)))

# %% glue random integer pieces
rng = random.Random(11)
p = Polygon(7)
d = random_dissection(p, rng, size=2)
pieces, f = random_instance(p, d, rng, semifield=TROPICAL)
print("dissection:", d.sorted())
a, b = next(e for e in p.internal_diagonals() if len(enumerate_tpaths(p, d, *e)) > 1)
for pi in enumerate_tpaths(p, d, a, b):
    print(" ", pi, "weight", tpath_weight(f, pi))
print(f"f({a},{b}) =", f(a, b), "(the largest weight)")
print("max-plus T-path formula holds everywhere:", satisfies_tpath_formula(f, d))
