"""Complete intersections in P^n.

Only the degree sum matters: hyperbolic from 2n - k on, lines up to
2n - k - 2. The general classifier and the closed form agree everywhere.
"""

import itertools

from alghyp import AmbientSpace, SplitBundleSpec, build_instance, classify, classify_pn_ci

n, k = 6, 2
amb = AmbientSpace.projective(n)
print(f"P^{n}, k = {k}: hyperbolic from sum {2 * n - k}, lines up to sum {2 * n - k - 2}")
for degs in itertools.combinations_with_replacement(range(3, 7), k):
    v = classify(build_instance(amb, SplitBundleSpec.hypersurfaces(*degs)))
    w = classify_pn_ci(n, degs)
    eps = v.certificate.eps_text if v.certificate else "-"
    print(f"  {degs}  sum {sum(degs):2d}  {v.kind.value:<14} eps {eps:<6} closed form agrees: {v.kind == w.kind}")

# on the boundary eps is 1 / prod(d), coming from the top Chern number
v = classify(build_instance(amb, SplitBundleSpec.hypersurfaces(5, 5)))
print()
print("boundary case (5, 5):", v.certificate.eps_text, "witness", v.certificate.witnesses)
