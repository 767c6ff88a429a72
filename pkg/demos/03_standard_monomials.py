"""
Standard monomials and Gelfand-Tsetlin patterns
===============================================

Two bases of the same weight space on the Richardson variety for
(1324, 4231): standard tableaux found by greedy minimal lifts, and GT
patterns passing the degeneration criteria.
"""

from positroids import gt_degen as gt
from positroids import tableaux_smt as smt
from positroids.perm_core import Permutation

u, w = Permutation.parse("1324"), Permutation.parse("4231")
lam, alpha = (3, 2, 1, 0), (2, 1, 2, 1)

for T in smt.ssyt(lam, alpha):
    print(smt.format_monomial(T.columns()), "standard" if smt.is_standard(T, u, w) else "-")

for g in gt.enumerate_gt(lam, gt.content_row_sums(alpha)):
    print(g, "nonzero" if gt.nonzero_in_richardson_strict(g, u, w) else "-")

print(smt.standard_count(lam, alpha, u, w), gt.richardson_gt_count(lam, alpha, u, w))

# with a repeated part the criteria alone keep one pattern too many
lam, alpha = (2, 1, 1, 0), (1, 1, 1, 1)
kept = [g for g in gt.enumerate_gt(lam, gt.content_row_sums(alpha))
        if gt.nonzero_in_schubert(g, u) and gt.nonzero_in_opposite(g, w)]
print(len(kept), "patterns kept,", smt.standard_count(lam, alpha, u, w), "standard monomials")
