"""Arithmetic in the truncated Chow ring of a product of projective spaces.

On P^2 x P^2 the ring is Z[H1, H2] / (H1^3, H2^3). Classes are sparse maps
from exponent tuples to integers; products drop anything past the bounds.
"""

from alghyp import ChowClass, join_shift, zero_cycle_degree

N = (2, 2)
H1 = ChowClass.hyperplane(N, 0)
H2 = ChowClass.hyperplane(N, 1)

# a (1,1) divisor and its powers
h = H1 + H2
print("H        =", h)
print("H^2      =", h ** 2)
print("H^4      =", h ** 4)  # top degree: the degree of P^2 x P^2 is 6
print("deg H^4  =", zero_cycle_degree(h ** 4))
print("H1^3     =", H1 ** 3)  # truncated away

# products of linear forms give the class of a complete intersection
X = ChowClass.linear(N, (2, 1)) * ChowClass.linear(N, (1, 3))
print("[X]      =", X)
print("d_(1,1)  =", X.coefficient((1, 1)))

# lowering exponents: the class of a cone, then a join
c = ChowClass(N, {(2, 1): 3, (1, 2): 5})
print("c             =", c)
print("shift (1,0)   =", join_shift(c, (1, 0)))
print("shift (0,2)   =", join_shift(c, (0, 2)))
print("shift twice   =", join_shift(join_shift(c, (1, 0)), (0, 1)))

# text form round-trips
assert ChowClass.parse(str(X), N) == X
