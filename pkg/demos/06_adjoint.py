"""Cutting Y by an adjoint-type divisor.

Y is a complete intersection in P^n and L = O(1). The zero locus X of a
section of E' + (K_Y + (3 dim Y + 1) L) always passes the strict test.
"""

import itertools

from alghyp import AmbientSpace, SplitBundleSpec, check_adjoint_instance
from alghyp.criteria import adjoint_summand

for n in range(4, 7):
    amb = AmbientSpace.projective(n)
    for k in range(2, n - 1):
        for degs in itertools.product((1, 2, 3), repeat=k - 1):
            eprime = SplitBundleSpec.hypersurfaces(*degs)
            summand = adjoint_summand(amb, eprime, (1,))
            ok = check_adjoint_instance(amb, eprime, (1,))
            print(f"P^{n}, Y cut by {degs}: adjoint degree {summand[0]}, strict test {ok}")
