"""
Completing a totally nonnegative subspace to a flag
===================================================
"""

import random

from positroids import exact_linalg as el
from positroids.cli import random_tnn_matrix

rng = random.Random(7)
M = random_tnn_matrix(5, 2, rng)
print(el.format_matrix(M))
print("tnn subspace:", el.is_tnn_subspace(M))

F = el.tnn_completion(M)
print(el.format_matrix(F.matrix))
print("tnn flag:", el.is_tnn_flag(F))

# the positroid cell of the plane
print(el.positroid_envelope(M))
