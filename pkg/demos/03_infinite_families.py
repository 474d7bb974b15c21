"""
Infinite families checked on windows
====================================

Graphs labeled onto all of Z (or onto [0, inf)) are described by a neighbor
rule.  We check the averaging condition label by label on a finite window.
"""

from weak_harmonic import families as fam
from weak_harmonic.correspondence import build, parse_collection

# the integer line with chords of span k at residue i, for each pair (i, k)
f = fam.pb([(0, 2), (1, 3), (3, 5)])
print("neighbors of 4:", f.neighbors(4))
rep = fam.verify_window(f, -200, 200)
print(f"window [-200, 200]: {rep.checked} labels checked, ok={rep.ok}")
print("different chord sets give different graphs:", fam.distinct_bases_distinct_graphs([(0, 2)], [(1, 2)]))

# layered copies of a finite graph, stacked with period n
g = build(parse_collection("01347;23456"))
cyl = fam.inner_cylinder(g)
print("cylinder over the 8-vertex example, neighbors of 11:", cyl.neighbors(11))
print("cylinder window ok:", fam.verify_window(cyl, -40, 40).ok)

# finite grids and their half-infinite versions
for k in (2, 3, 4):
    print(f"C^({k},3) has {fam.c_grid(k, 3).n} vertices; half-line window ok:",
          fam.verify_window(fam.c_grid_ray(k), 0, 100).ok)

# gluing at leaves: a path, then a half-line
glued = fam.coalesce(fam.path(4), fam.ray())
print("path glued to a ray, window ok:", fam.verify_window(glued, 0, 50).ok)

# two labels pin down the whole half grid: solve for x_{k+1}..x_{2k}
for k in (2, 5, 12):
    sol = fam.spanning_solution(k)
    print(f"k={k}: solution {[int(x) for x in sol]}")
