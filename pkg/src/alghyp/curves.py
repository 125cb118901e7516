"""Curve types, genus lower bounds, and the scroll/join degree computation.

A curve ``C`` on ``X`` is described by its multidegree ``e`` (``e_i`` is the
degree of ``H_i`` on ``C``) and a type ``s`` with ``sum(s) <= D - k - 1``.
Two lower bounds on ``2g - 2`` are available:

* basic: ``sum_i (a_i + d_i - s_i) e_i``, valid for every type;
* scroll: for the extremal type ``(D - k - 1) e_r``, intersecting a
  ``lambda``-join of a surface scroll with ``X`` bounds the degree of the
  rank one quotient ``Q`` of the normal bundle from below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from operator import mul
from typing import NamedTuple, Sequence

from .chowring import ChowClass, MultiIndex, add_index, compositions, join_shift, sub_index, unit, within
from .criteria import check_boundary, check_strict, lambda_candidates
from .errors import ContractViolation, InvalidInputError, ModeError
from .model import AmbientSpace, VarietyInstance


@dataclass(frozen=True)
class CurveProfile:
    e: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "e", tuple(int(x) for x in self.e))
        if any(x < 0 for x in self.e):
            raise InvalidInputError(f"multidegree {self.e} has a negative entry")
        if not any(self.e):
            raise InvalidInputError("the all-zero multidegree is not a curve")

    @property
    def degree(self) -> int:
        """Degree against ``H = H1 + ... + Hm``."""
        return sum(self.e)


@dataclass(frozen=True)
class CurveType:
    s: tuple[int, ...]


@dataclass(frozen=True)
class ScrollSpec:
    r: int
    q: int | Fraction
    lam: MultiIndex


@dataclass(frozen=True)
class GenusBound:
    two_g_minus_2_lb: Fraction
    g_lb: int
    source: str = ""

    @classmethod
    def of(cls, value, source: str = "") -> GenusBound:
        value = Fraction(value)
        p, q = value.numerator, value.denominator
        # ceil((p/q + 2) / 2) without building more fractions
        return cls(value, -(-(p + 2 * q) // (2 * q)), source)


def enumerate_types(D: int, k: int, m: int) -> list[CurveType]:
    """All types with ``sum(s) <= D - k - 1``, ascending lex order."""
    if not 1 <= k <= D - 2:
        raise InvalidInputError(f"need 1 <= k <= D - 2, got k = {k}, D = {D}")
    if m < 1:
        raise InvalidInputError("need at least one factor")
    budget = D - k - 1
    out = [s for total in range(budget + 1) for s in compositions(total, m)]
    return [CurveType(s) for s in sorted(out)]


def _check_profile(inst: VarietyInstance, prof: CurveProfile) -> None:
    if len(prof.e) != inst.m:
        raise InvalidInputError(f"multidegree {prof.e} needs {inst.m} entries")


def genus_bound_basic(inst: VarietyInstance, prof: CurveProfile, t: CurveType) -> GenusBound:
    _check_profile(inst, prof)
    if len(t.s) != inst.m or min(t.s) < 0 or sum(t.s) > inst.D - inst.k - 1:
        raise InvalidInputError(f"type {t.s} is not admissible")
    value = sum((inst.KX[i] - t.s[i]) * prof.e[i] for i in range(inst.m))
    return GenusBound.of(value, f"type {t.s}")


def scroll_class(ambient: AmbientSpace, spec: ScrollSpec, prof: CurveProfile) -> ChowClass:
    """``(e_r + q) H^(N - 2e_r) + sum_{i != r} e_i H^(N - e_r - e_i)``."""
    if not ambient.full_product:
        raise ModeError("the scroll class is only computed on the full product")
    if not isinstance(spec.q, int):
        raise InvalidInputError("q is the degree of a line bundle and must be an integer")
    N, m, r = ambient.N, ambient.m, spec.r
    if len(prof.e) != m:
        raise InvalidInputError(f"multidegree {prof.e} needs {m} entries")
    if N[r] < 2:
        raise InvalidInputError(f"scrolls over a P^{N[r]} factor need N_r >= 2")
    er = unit(m, r)
    terms = {sub_index(sub_index(N, er), er): prof.e[r] + spec.q}
    for i in range(m):
        if i != r:
            terms[sub_index(sub_index(N, er), unit(m, i))] = prof.e[i]
    return ChowClass(N, terms)


def q_degree_bound(inst: VarietyInstance, r: int, lam: Sequence[int], prof: CurveProfile) -> Fraction:
    """Lower bound on ``deg c1(Q)`` from ``(lambda-join of S) . X . H_r >= C . H_r``."""
    _check_profile(inst, prof)
    m = inst.m
    pivot = inst.top(add_index(lam, unit(m, r)))
    if pivot <= 0:
        raise InvalidInputError(f"divisor d_(lambda+e_{r + 1}) = {pivot} must be positive")
    value = (Fraction(1, pivot) - 1) * prof.e[r]
    for i in range(m):
        if i != r:
            value -= Fraction(inst.top(add_index(lam, unit(m, i))), pivot) * prof.e[i]
    return value


class IntersectionCheck(NamedTuple):
    ring_value: int | None
    closed_form: int

    @property
    def comparable(self) -> bool:
        return self.ring_value is not None

    @property
    def agrees(self) -> bool:
        return self.ring_value == self.closed_form


def intersection_degree_check(inst: VarietyInstance, spec: ScrollSpec, prof: CurveProfile) -> IntersectionCheck:
    """``deg(((join S) X - C) H_r)`` computed in the ring and in closed form.

    The ring value is ``None`` when a scroll monomial shifted by ``lambda``
    leaves the ring, where truncation would drop a real contribution.
    """
    amb = inst.ambient
    if not amb.full_product:
        raise ModeError("ring-side intersection degrees need the full product")
    lam = tuple(spec.lam)
    if sum(lam) != inst.k - 1:
        raise InvalidInputError(f"|lambda| must be k - 1 = {inst.k - 1}")
    m, r, e = inst.m, spec.r, prof.e
    closed = inst.top(add_index(lam, unit(m, r))) * (e[r] + spec.q) - e[r]
    for i in range(m):
        if i != r:
            closed += inst.top(add_index(lam, unit(m, i))) * e[i]

    S = scroll_class(amb, spec, prof)
    for alpha in S:
        if not within(sub_index(alpha, lam), amb.N):
            return IntersectionCheck(None, closed)
    cycle = join_shift(S, lam) * inst.top_class * ChowClass.hyperplane(amb.N, r)
    return IntersectionCheck(amb.degree(cycle) - e[r], closed)


def genus_bound_boundary(inst: VarietyInstance, r: int, lam: Sequence[int], prof: CurveProfile) -> GenusBound:
    """Scroll bound for curves of type ``(D - k - 1) e_r``.

    ``2g - 2 = K_X . C + deg N`` with ``deg N = -(D - k - 2) e_r + deg Q``.
    """
    if not inst.k <= inst.D - 2:
        raise InvalidInputError("needs k <= D - 2")
    if sum(lam) != inst.k - 1:
        raise InvalidInputError(f"|lambda| must be k - 1 = {inst.k - 1}")
    q = q_degree_bound(inst, r, lam, prof)
    value = sum(inst.KX[i] * prof.e[i] for i in range(inst.m)) - (inst.D - inst.k - 2) * prof.e[r] + q
    return GenusBound.of(value, f"scroll r={r + 1} lambda={tuple(lam)}")


def _bound_data(inst: VarietyInstance):
    """Per-instance data reused across profiles, cached on the instance.

    Non-extremal types; and for each factor ``r`` the usable ``lambda`` with
    the scroll bound written as ``(sum_i nums_i e_i) / pivot``.
    """
    cached = inst.__dict__.get("_bound_data")
    if cached is None:
        cached = _compute_bound_data(inst)
        inst.__dict__["_bound_data"] = cached
    return cached


def _compute_bound_data(inst: VarietyInstance):
    budget = inst.D - inst.k - 1
    types = [t.s for t in enumerate_types(inst.D, inst.k, inst.m)]
    non_extremal = [(s, tuple(x - y for x, y in zip(inst.KX, s))) for s in types if max(s) <= budget - 1]
    usable = {}
    for r in range(inst.m):
        forms = []
        for lam in lambda_candidates(inst.m, inst.k - 1):
            pivot = inst.top(add_index(lam, unit(inst.m, r)))
            if pivot <= 0:
                continue
            nums = []
            for i in range(inst.m):
                if i == r:
                    nums.append((inst.KX[r] - budget) * pivot + 1)
                else:
                    nums.append(inst.KX[i] * pivot - inst.top(add_index(lam, unit(inst.m, i))))
            forms.append((lam, pivot, tuple(nums)))
        usable[r] = forms
    certified = check_strict(inst) or check_boundary(inst) is not None
    return non_extremal, usable, certified


def min_genus_bound(inst: VarietyInstance, prof: CurveProfile) -> GenusBound:
    """Best bound on ``2g - 2`` that holds whatever the type of ``C``.

    Minimum of the basic bound over types with every ``s_i <= D - k - 2``
    and, for each ``r``, the better of the basic and scroll bounds at the
    extremal type ``(D - k - 1) e_r``.
    """
    non_extremal, usable, certified = _bound_data(inst)
    e, KX = prof.e, inst.KX
    m = len(KX)
    if len(e) != m:
        raise InvalidInputError(f"multidegree {e} needs {m} entries")
    if not certified:
        raise ContractViolation("instance is not certified hyperbolic")
    budget = inst.ambient.D - inst.chern.k - 1

    # values kept as (numerator, positive denominator); compare by cross-multiplying
    best, source = None, None
    for s, coeffs in non_extremal:
        value = sum(map(mul, coeffs, e))
        if best is None or value < best[0]:
            best, source = (value, 1), ("type", s)
    for r in range(m):
        top = (sum(map(mul, KX, e)) - budget * e[r], 1)
        top_source = ("type", tuple(budget if i == r else 0 for i in range(m)))
        for lam, pivot, nums in usable[r]:
            num = sum(map(mul, nums, e))
            if num * top[1] > top[0] * pivot:
                top, top_source = (num, pivot), ("scroll", r, lam)
        if best is None or top[0] * best[1] < best[0] * top[1]:
            best, source = top, top_source
    if source[0] == "type":
        label = f"type {source[1]}"
    else:
        label = f"scroll r={source[1] + 1} lambda={source[2]}"
    value = Fraction(*best)
    p, q = value.numerator, value.denominator
    return GenusBound(value, -(-(p + 2 * q) // (2 * q)), label)


def usable_lambdas(inst: VarietyInstance, r: int) -> list[MultiIndex]:
    """Every ``lambda`` with ``|lambda| = k - 1`` and ``d_(lambda+e_r) > 0``."""
    return [lam for lam, _, _ in _bound_data(inst)[1][r]]


def genus_bound_table(inst: VarietyInstance, prof: CurveProfile) -> list[tuple[tuple[int, ...], GenusBound, GenusBound | None]]:
    """One row per admissible type: basic bound and, at extremal types, best scroll bound."""
    _check_profile(inst, prof)
    budget = inst.D - inst.k - 1
    rows = []
    for t in enumerate_types(inst.D, inst.k, inst.m):
        basic = genus_bound_basic(inst, prof, t)
        scroll = None
        if budget in t.s and sum(t.s) == budget:
            r = t.s.index(budget)
            bounds = [genus_bound_boundary(inst, r, lam, prof) for lam in usable_lambdas(inst, r)]
            if bounds:
                scroll = max(bounds, key=lambda b: b.two_g_minus_2_lb)
        rows.append((t.s, basic, scroll))
    return rows
