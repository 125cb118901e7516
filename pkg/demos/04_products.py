"""Hypersurfaces and complete intersections in P^2 x P^2 and P^3 x P^4.

With several factors each H_i gets its own threshold; at equality the
boundary test looks for a lambda with positive top Chern number.
"""

from alghyp import AmbientSpace, SplitBundleSpec, build_instance, check_uniform, classify

amb = AmbientSpace.product(2, 2)
for row in [(4, 5), (5, 5), (5, 6), (6, 6)]:
    inst = build_instance(amb, SplitBundleSpec((row,)))
    v = classify(inst)
    thresholds = [inst.strict_threshold(i) for i in range(inst.m)]
    print(f"P2xP2 O{row}: thresholds {thresholds}, {v.kind.value}", end="")
    if v.certificate:
        print(f", eps {v.certificate.eps_text} ({v.certificate.path})")
    else:
        print()

# uniform degrees: the simple corollary check
amb = AmbientSpace.product(3, 4)
for d in (8, 9):
    inst = build_instance(amb, SplitBundleSpec(((d - 4, d - 4), (4, 4))))
    print(f"P3xP4, summands of total degree {d} on each factor: uniform check {check_uniform(inst)}, {classify(inst).kind.value}")

# a mixed summand is not covered by the automatic section domination rule
inst = build_instance(AmbientSpace.product(3, 3), SplitBundleSpec(((9, 0), (0, 9))))
print("P3xP3 O(9,0)+O(0,9):", classify(inst).kind.value, "|", inst.warnings[0])
