"""
Counting points of open Richardson varieties
============================================

R-polynomials from distinguished subwords, checked against a brute-force
count of flags over small prime fields, then the Marsh-Rietsch chart on
one Deodhar piece.
"""

from fractions import Fraction

from positroids import bott_samelson_deodhar as bsd
from positroids.exact_linalg import Field
from positroids.perm_core import Permutation, Word, all_permutations, bruhat_leq

w0 = Permutation.parse("321")
for u in all_permutations(3):
    if bruhat_leq(u, w0):
        R = bsd.r_polynomial(u, w0)
        counts = [bsd.count_open_richardson_bruteforce(u, w0, Field(q)) for q in (2, 3)]
        print(u, R, [R(2), R(3)], counts)

# distinguished subwords of s1 s2 s1 ending at the identity
word = Word(3, (1, 2, 1))
e = Permutation.identity(3)
for m in bsd.distinguished_masks(word, e):
    print(m, "weight", bsd.mask_weight(m))

# the positive chart on the big piece, and its inversion by chamber minors
mask = bsd.positive_mask(word, e)
t = [Fraction(2), Fraction(3), Fraction(5)]
chain = bsd.mr_parametrize(mask, t)
print(chain.final)
print("recovered", bsd.recover_equal_parameters(chain, mask))
