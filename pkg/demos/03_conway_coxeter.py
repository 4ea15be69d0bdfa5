"""Integer friezes from triangulations.

Gluing all-ones triangles along a triangulation gives a frieze of positive
integers, and each value counts the T-paths between its endpoints.  The
pattern is printed the usual way, as a strip of rows.
"""

from collections import Counter

from weakfrieze import (
    Polygon, cc_frieze, check_unimodular, emit_text, enumerate_tpaths, is_frieze,
    render_pattern, triangulations, validate_dissection,
)

# %% the pentagon fan
p = Polygon(5)
fan = validate_dissection(p, [(0, 2), (0, 3)])
f = cc_frieze(p, fan)
print("f(1,3), f(2,4), f(1,4) =", f(1, 3), f(2, 4), f(1, 4))
print(emit_text(render_pattern(f), repeat=2))

# %% a zig-zag hexagon
p = Polygon(6)
t = validate_dissection(p, [(0, 2), (2, 5), (3, 5)])
f = cc_frieze(p, t)
print(emit_text(render_pattern(f), repeat=2))
print("frieze:", is_frieze(f), " unimodular:", check_unimodular(f))
print("f(1,4) =", f(1, 4), "and T-paths 1->4:", enumerate_tpaths(p, t, 1, 4))

# %% all heptagon triangulations
p = Polygon(7)
tallies = Counter()
for t in triangulations(p):
    f = cc_frieze(p, t)
    assert all(str(x) == str(len(enumerate_tpaths(p, t, *e))) for e, x in f.items())
    tallies[max(int(str(x)) for _, x in f.items())] += 1
print("largest entry over the 42 heptagon triangulations:", dict(sorted(tallies.items())))
