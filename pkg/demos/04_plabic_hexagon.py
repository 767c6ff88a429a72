"""
The hexagon plabic graph
========================

Boundary measurement, trips, face labels and the twist for a reduced
graph of the top-dimensional cell of its positroid in G(3,6).
"""

from fractions import Fraction

from positroids import exact_linalg as el
from positroids import plabic as pl

G = pl.load_example("hexagon")
print("n, k, faces:", G.n, G.k, len(pl.faces(G)))
print("reduced:", pl.is_reduced(G))
print("trip permutation:", pl.trip_permutation(G))
print("face labels:", sorted("".join(map(str, I)) for I in pl.face_labels(G).values()))

x = {e: Fraction(i + 2) for i, e in enumerate(sorted(G.edges))}
w = pl.gauge_fix(G, x)
D = pl.boundary_measurement(G, w)
print(D.format())
M = el.pluecker_to_matrix(D)
print(el.format_matrix(pl.twist(M)))

# the twist composed with the reverse twist returns the same point
print(el.pluecker(pl.twist(pl.reverse_twist(M))).projectively_equal(D))

# face Pluecker coordinates of the twisted point
for I, v in sorted(pl.muller_speyer_composite(G, w).items()):
    print("".join(map(str, I)), v)
