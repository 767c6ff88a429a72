"""
Indexing positroid cells
========================

One cell of G(2,4), seen as a pair of permutations, a bounded affine
permutation, a Grassmann necklace and a decorated permutation.
"""

from positroids import affine_positroid as ap
from positroids import symfunc as sf
from positroids.perm_core import Permutation

u, w = Permutation.parse("2143"), Permutation.parse("3412")
f = ap.from_pair(u, w, 2)
print("window   ", ap.format_window(f.window))
print("necklace ", ap.format_necklace(ap.necklace_from_f(f)))
print("decorated", ap.decorated_from_f(f))
print("dimension", ap.positroid_dim(f))

# the cyclic rank matrix determines f
print(ap.cyclic_rank_matrix(f).format())
assert ap.f_from_cyclic_rank(ap.cyclic_rank_matrix(f)) == f

# cell counts: Bound(k, n) has one cell of dimension 0 per coordinate plane
for n in range(1, 6):
    cells = ap.all_bounded(n)
    print(n, len(cells), "cells")

# the cohomology class and the chain sum over k-Bruhat chains
print("class           ", sf.format_basis(sf.positroid_class(f)))
print("bergeron-sottile", sf.format_basis(sf.bergeron_sottile(u, w, 2).schur()))
print("duality holds   ", sf.duality_check(f))
