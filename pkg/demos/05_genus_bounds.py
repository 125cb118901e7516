"""Lower bounds on the genus of curves.

A curve of H-degree e on a certified X has 2g - 2 >= eps * e. The bound is
assembled type by type; at the extremal type the scroll bound is used.
"""

from alghyp import AmbientSpace, CurveProfile, SplitBundleSpec, build_instance, classify, min_genus_bound
from alghyp.curves import genus_bound_table

inst = build_instance(AmbientSpace.projective(4), SplitBundleSpec.hypersurfaces(7))
eps = classify(inst).certificate.eps
print("septic threefold, eps =", eps)
for e in (1, 2, 7, 14):
    b = min_genus_bound(inst, CurveProfile((e,)))
    print(f"  degree {e:2d}: 2g-2 >= {b.two_g_minus_2_lb} (eps*e = {eps * e}), g >= {b.g_lb}, from {b.source}")

print()
inst = build_instance(AmbientSpace.product(2, 2), SplitBundleSpec(((5, 5),)))
prof = CurveProfile((1, 1))
print("P2xP2 O(5,5), curve of bidegree (1,1), per type:")
for s, basic, scroll in genus_bound_table(inst, prof):
    extra = f", scroll {scroll.two_g_minus_2_lb}" if scroll else ""
    print(f"  type {s}: basic {basic.two_g_minus_2_lb}{extra}")
print("  overall:", min_genus_bound(inst, prof).two_g_minus_2_lb)
