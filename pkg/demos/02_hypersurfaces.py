"""Very general hypersurfaces in P^n.

For each n the degrees split into three bands: low degrees contain lines,
high degrees are certified hyperbolic with an explicit eps, and a thin band
in between is left undetermined. The literature table is printed alongside.
"""

from alghyp import AmbientSpace, SplitBundleSpec, build_instance, classify, known_hypersurface_status

for n in (3, 4, 5, 6):
    print(f"P^{n}")
    amb = AmbientSpace.projective(n)
    for d in range(2 * n - 4, 2 * n + 3):
        if d < 1:
            continue
        v = classify(build_instance(amb, SplitBundleSpec.hypersurfaces(d)))
        eps = v.certificate.eps_text if v.certificate else "-"
        known = known_hypersurface_status(n, d).value
        print(f"  d = {d:2d}  {v.kind.value:<14} eps = {eps:<5} known: {known}")

# the sextic threefold is the one open case; the criteria say why
v = classify(build_instance(AmbientSpace.projective(4), SplitBundleSpec.hypersurfaces(6)))
print()
print("sextic threefold:")
for note in v.reasons:
    print("  -", note.text)
