"""
Weak labelings and their neighborhood collections
==================================================

A labeling of the vertices by 0..n-1 is weak harmonic when every vertex with
two or more neighbors sits at the average of its neighbors.  Leaves are free.
"""

from weak_harmonic import build, check_axioms, extract, format_collection, parse_collection, verify_weak
from weak_harmonic.graphs import LabeledGraph, invert
from weak_harmonic.harmonic import laplacian_kernel_check

# an 8-vertex example: 3 and 4 are the only non-leaves
g = LabeledGraph(8, [(0, 3), (1, 3), (3, 4), (3, 7), (2, 4), (4, 5), (4, 6)])
report = verify_weak(g)
print("verified:", report.ok)
for c in report.checks:
    print(f"  vertex {c.vertex}: neighbor sum {c.lhs} = degree * label {c.rhs}")

# the same fact as a kernel condition on the Laplacian
print("label vector in reduced Laplacian kernel:", laplacian_kernel_check(g))

# closed neighborhoods of the non-leaves encode the whole graph
c = extract(g)
print("collection:", format_collection(c), "| compact:", format_collection(c, compact=True))
print("rebuilt equals original:", build(c) == g)

# reversing the labels gives another weak labeling
print("inverted:", format_collection(extract(invert(g)), compact=True))

# not every family of sets comes from a graph; the report says which rule breaks
for text in ["0,2,4;2,4,6", "0,1,2;2,3,4", "0,1,2;1,3,5"]:
    rep = check_axioms(parse_collection(text))
    print(f"{text:>14}: fails {rep.failed}")

# multiplicities turn the same story into one about multigraphs
m = build(parse_collection("0^6,1,2,3,4"))
print("multigraph:", m, "| vertex 1 degree", m.degree(1))
