from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from alghyp.chowring import ChowClass
from alghyp.errors import InvalidInputError
from alghyp.model import (
    AmbientSpace,
    ChernData,
    SplitBundleSpec,
    build_instance,
    c1_split,
    ck_split,
    section_domination_auto,
)


def test_c1_split_examples():
    assert c1_split(SplitBundleSpec(((2,), (3,)))) == (5,)
    assert c1_split(SplitBundleSpec(((1, 1), (1, 1)))) == (2, 2)
    assert c1_split(SplitBundleSpec(((2, 0), (0, 3)))) == (2, 3)


def test_ck_split_examples():
    P5 = AmbientSpace.projective(5)
    assert ck_split(SplitBundleSpec(((2,), (3,))), P5).terms == {(2,): 6}
    PP = AmbientSpace.product(3, 3)
    assert ck_split(SplitBundleSpec(((1, 1), (1, 1))), PP).terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    P2 = AmbientSpace.projective(2)
    assert ck_split(SplitBundleSpec(((1,), (1,), (1,))), P2) == ChowClass.zero((2,))


def test_section_domination_auto_examples():
    assert section_domination_auto(SplitBundleSpec(((1, 1),)), AmbientSpace.product(2, 2))
    assert not section_domination_auto(SplitBundleSpec(((1, 0),)), AmbientSpace.product(2, 2))
    proper = AmbientSpace(N=(3, 3), D=4, a=(-3, -3))
    assert not section_domination_auto(SplitBundleSpec(((2, 2),)), proper)


def test_build_instance_examples():
    inst = build_instance(AmbientSpace.projective(4), SplitBundleSpec.hypersurfaces(7))
    assert inst.d == (7,) and inst.KX == (2,)
    assert dict(inst.chern.d_alpha) == {(1,): 7}
    assert inst.section_dominating

    inst = build_instance(AmbientSpace.product(2, 2), SplitBundleSpec(((5, 5),)))
    assert inst.d == (5, 5) and inst.KX == (2, 2)

    with pytest.raises(InvalidInputError):
        build_instance(AmbientSpace.projective(3), SplitBundleSpec.hypersurfaces(2, 2, 2))


def test_lines_purpose_allows_k_equal_D_minus_1():
    inst = build_instance(AmbientSpace.projective(4), SplitBundleSpec.hypersurfaces(1, 1, 1), purpose="lines")
    assert inst.k == 3
    with pytest.raises(InvalidInputError):
        build_instance(AmbientSpace.projective(4), SplitBundleSpec.hypersurfaces(1, 1, 1))


def test_unresolved_domination_warns():
    inst = build_instance(AmbientSpace.product(2, 2), SplitBundleSpec(((3, 0),)))
    assert not inst.section_dominating
    assert any("unresolved" in w for w in inst.warnings)
    forced = build_instance(AmbientSpace.product(2, 2), SplitBundleSpec(((3, 0),)), section_dominating=True)
    assert forced.section_dominating


def test_homogeneity_not_asserted_withholds_domination():
    amb = AmbientSpace(N=(4,), D=4, a=(-5,), full_product=True, homogeneous_asserted=False)
    inst = build_instance(amb, SplitBundleSpec.hypersurfaces(8))
    assert not inst.section_dominating


def test_ambient_validation():
    with pytest.raises(InvalidInputError):
        AmbientSpace(N=(2, 2), D=4, a=(-3,))
    with pytest.raises(InvalidInputError):
        AmbientSpace(N=(2, 2), D=5, a=(-3, -3))
    with pytest.raises(InvalidInputError):
        AmbientSpace(N=(2, 2), D=4, a=(-3, -2), full_product=True)
    with pytest.raises(InvalidInputError):
        AmbientSpace(N=(0,), D=1, a=(-1,))


def test_split_validation():
    with pytest.raises(InvalidInputError):
        SplitBundleSpec(((0, 0),))
    with pytest.raises(InvalidInputError):
        SplitBundleSpec(((1, -1),))
    with pytest.raises(InvalidInputError):
        SplitBundleSpec(((1, 1), (1,)))
    with pytest.raises(InvalidInputError):
        SplitBundleSpec(())


def test_chern_data_validation_and_lookup():
    cd = ChernData(2, (5, 5), {(1, 1): 4, (0, 2): 1})
    assert cd.coefficient((1, 1)) == 4
    assert cd.coefficient((2, 0)) == 0
    with pytest.raises(InvalidInputError):
        ChernData(2, (5, 5), {(1, 0): 4})
    with pytest.raises(InvalidInputError):
        build_instance(AmbientSpace.product(1, 3), ChernData(2, (5, 5), {(2, 0): 1}))


def test_explicit_chern_data_keeps_flag():
    amb = AmbientSpace(N=(3, 3), D=5, a=(-3, -3))
    inst = build_instance(amb, ChernData(2, (5, 5), {(1, 1): 4}, section_dominating=True))
    assert inst.section_dominating
    inst = build_instance(amb, ChernData(2, (5, 5), {(1, 1): 4}))
    assert not inst.section_dominating


# -- properties ----------------------------------------------------------------


@st.composite
def split_on_product(draw, kmax=4, mmax=3):
    m = draw(st.integers(1, mmax))
    N = tuple(draw(st.lists(st.integers(1, 4), min_size=m, max_size=m)))
    k = draw(st.integers(1, kmax))
    rows = draw(st.lists(st.lists(st.integers(0, 5), min_size=m, max_size=m).filter(any), min_size=k, max_size=k))
    return AmbientSpace.product(*N), SplitBundleSpec(tuple(map(tuple, rows)))


@settings(max_examples=80)
@given(split_on_product())
def test_ck_split_matches_symbolic_expansion(case):
    amb, spec = case
    xs = sympy.symbols(f"x1:{amb.m + 1}")
    poly = sympy.Poly(sympy.prod([sum(c * x for c, x in zip(row, xs)) for row in spec.rows]), *xs)
    expected = {
        alpha: int(c) for alpha, c in zip(poly.monoms(), poly.coeffs())
        if all(a <= n for a, n in zip(alpha, amb.N))
    }
    assert dict(ck_split(spec, amb).terms) == expected


@given(split_on_product(kmax=1))
def test_c1_matches_linear_term(case):
    amb, spec = case
    top = ck_split(spec, amb)
    for i in range(amb.m):
        e = tuple(1 if j == i else 0 for j in range(amb.m))
        assert top.coefficient(e) == c1_split(spec)[i]


@given(st.integers(1, 3), st.integers(1, 4), st.lists(st.integers(1, 4), min_size=2, max_size=3))
def test_uniform_ratio_is_k(k, delta, N):
    m = len(N)
    amb = AmbientSpace.product(*N)
    spec = SplitBundleSpec(tuple((delta + j,) * m for j in range(k)))
    top = ck_split(spec, amb)
    for r in range(m):
        base = tuple((k - 1) if j == r else 0 for j in range(m))
        pivot_idx = tuple(b + (1 if j == r else 0) for j, b in enumerate(base))
        if pivot_idx[r] > N[r]:
            continue
        for i in range(m):
            if i == r:
                continue
            other = tuple(b + (1 if j == i else 0) for j, b in enumerate(base))
            assert Fraction(top.coefficient(other), top.coefficient(pivot_idx)) == k


@given(split_on_product())
def test_build_instance_deterministic(case):
    amb, spec = case
    if spec.k > amb.D - 1:
        return
    one = build_instance(amb, spec, purpose="lines")
    two = build_instance(amb, spec, purpose="lines")
    assert one == two
    assert one.KX == tuple(a + d for a, d in zip(amb.a, one.d))
