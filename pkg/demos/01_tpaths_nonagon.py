"""T-paths on a dissected nonagon.

The nonagon is cut by the diagonals {1,6} and {2,5} into a hexagon, a
quadrilateral and a pentagon.  Every cell carries the all-ones map, and
gluing them gives a weak frieze whose value on {4,0} is 4.  The T-path
expansion explains that value: four paths, each of weight 1.

Pass a file name to also write the picture of the paths as SVG.
"""

import sys

from weakfrieze import (
    Polygon, cells, emit_svg, enumerate_tpaths, glue_many, is_tpath, tpath_sum,
    tpath_weight, validate_dissection,
)
from itertools import combinations

# %% the dissection and its cells
p = Polygon(9)
d = validate_dissection(p, [(1, 6), (2, 5)])
print("cells:", cells(p, d))

# %% glue trivial pieces
pieces = [{e: 1 for e in combinations(c, 2)} for c in cells(p, d)]
f = glue_many(p, d, pieces)
print("f(4,0) =", f(4, 0))

# %% the T-paths from 4 to 0
paths = enumerate_tpaths(p, d, 4, 0)
for pi in paths:
    print(" ", pi, "weight", tpath_weight(f, pi))
print("sum of weights:", tpath_sum(f, d, 4, 0))

# %% the definition, checked one sequence at a time
print("(4,5,2,6,1,0) is a T-path:", is_tpath(p, d, (4, 5, 2, 6, 1, 0), 4, 0))
# odd steps may not cross D, so jumping straight across fails
print("(4,1,6,0) is a T-path:", is_tpath(p, d, (4, 1, 6, 0), 4, 0))

# %% weights can be any positive rationals
g = f.replace({(2, 5): "3/2"})
print("f(2,5) = 3/2 gives weights", [str(tpath_weight(g, pi)) for pi in paths])

if len(sys.argv) > 1:
    with open(sys.argv[1], "w", encoding="utf-8") as fh:
        fh.write(emit_svg(p, d, f, paths=paths))
    print("wrote", sys.argv[1])
