"""Decision procedures for algebraic hyperbolicity of ``X``.

Three numeric tests drive everything:

* strict: ``d_i > D - k - a_i - 1`` for every factor;
* boundary: ``d_i >= D - k - a_i - 1`` for every factor, and for each
  factor ``r`` a witness ``lambda`` with ``|lambda| = k - 1`` such that
  ``a_i + d_i - d_{lambda+e_i} / d_{lambda+e_r} > 0`` for all ``i != r``;
* lines: ``d_i <= D - k - a_i - 3`` for some factor, in which case ``X``
  contains lines.

Hyperbolic verdicts carry an :class:`EpsilonCertificate`, an explicit
rational ``eps`` with ``2g - 2 >= eps * deg_H(C)`` for every curve, where
``H = H1 + ... + Hm``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .chowring import MultiIndex, add_index, compositions, unit, within
from .errors import ContractViolation, InconsistentInputError, InvalidInputError, NotApplicable
from .model import (
    AmbientSpace,
    SplitBundleSpec,
    VarietyInstance,
    build_instance,
    c1_split,
)


class Kind(str, enum.Enum):
    HYPERBOLIC = "Hyperbolic"
    NOT_HYPERBOLIC = "NotHyperbolic"
    UNDETERMINED = "Undetermined"


class KnownStatus(str, enum.Enum):
    KNOWN_HYPERBOLIC = "KnownHyperbolic"
    KNOWN_NOT_HYPERBOLIC = "KnownNotHyperbolic"
    OPEN = "Open"


@dataclass(frozen=True)
class Note:
    """A structured remark attached to a verdict."""

    code: str
    text: str
    data: Mapping[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"code": self.code, "text": self.text, **({"data": dict(self.data)} if self.data else {})}


@dataclass(frozen=True)
class EpsilonCertificate:
    eps: Fraction
    path: str  # "strict" or "boundary"
    witnesses: Mapping[int, MultiIndex]
    coefficients: Mapping[str, tuple[Fraction, ...]]

    def __post_init__(self):
        lowest = min(min(v) for v in self.coefficients.values())
        if lowest != self.eps:
            raise ContractViolation(f"eps {self.eps} is not the minimum recorded coefficient {lowest}")
        if self.eps <= 0:
            raise ContractViolation(f"eps {self.eps} is not positive")

    @property
    def eps_text(self) -> str:
        return f"{self.eps.numerator}/{self.eps.denominator}"


@dataclass(frozen=True)
class Verdict:
    kind: Kind
    certificate: EpsilonCertificate | None = None
    witness_index: int | None = None
    reasons: tuple[Note, ...] = ()

    def __post_init__(self):
        if (self.kind is Kind.HYPERBOLIC) != (self.certificate is not None):
            raise ContractViolation("a certificate is present exactly for Hyperbolic verdicts")
        if (self.kind is Kind.NOT_HYPERBOLIC) != (self.witness_index is not None):
            raise ContractViolation("a witness index is present exactly for NotHyperbolic verdicts")

    @property
    def eps(self) -> Fraction | None:
        return self.certificate.eps if self.certificate else None


# -- the three tests -----------------------------------------------------------


def _hyperbolicity_gate(inst: VarietyInstance) -> list[Note]:
    notes = []
    if not 1 <= inst.k <= inst.D - 2:
        notes.append(Note("rank", f"hyperbolicity criteria need 1 <= k <= D - 2 = {inst.D - 2}, got k = {inst.k}"))
    if not inst.section_dominating:
        notes.append(Note("assumption unverified", "section domination of E by L1..Lm is not established"))
    return notes


def check_strict(inst: VarietyInstance) -> bool:
    """Every ``d_i`` strictly exceeds ``D - k - a_i - 1``."""
    if _hyperbolicity_gate(inst):
        return False
    return all(inst.d[i] > inst.strict_threshold(i) for i in range(inst.m))


def lambda_candidates(m: int, total: int) -> list[MultiIndex]:
    """Compositions of ``total`` into ``m`` parts, largest first entry first.

    For ``r = 0`` the first candidate is ``(k - 1) e_0``.
    """
    return sorted(compositions(total, m), reverse=True)


def lambda_qualifies(inst: VarietyInstance, r: int, lam: Sequence[int]) -> bool:
    """Whether ``lam`` witnesses the boundary condition for factor ``r``."""
    lam = tuple(lam)
    if len(lam) != inst.m or min(lam) < 0 or sum(lam) != inst.k - 1:
        return False
    pivot_idx = add_index(lam, unit(inst.m, r))
    if not within(pivot_idx, inst.ambient.N):
        return False
    pivot = inst.top(pivot_idx)
    if pivot <= 0:
        return False
    for i in range(inst.m):
        if i == r:
            continue
        ratio = Fraction(inst.top(add_index(lam, unit(inst.m, i))), pivot)
        if inst.KX[i] - ratio <= 0:
            return False
    return True


def _scan_lambdas(inst: VarietyInstance, r: int) -> tuple[MultiIndex | None, list[MultiIndex]]:
    negative = []
    for lam in lambda_candidates(inst.m, inst.k - 1):
        pivot_idx = add_index(lam, unit(inst.m, r))
        if within(pivot_idx, inst.ambient.N) and inst.top(pivot_idx) < 0:
            negative.append(lam)
            continue
        if lambda_qualifies(inst, r, lam):
            return lam, negative
    return None, negative


def lambda_search(inst: VarietyInstance, r: int) -> MultiIndex | None:
    """First qualifying ``lambda`` for factor ``r`` in :func:`lambda_candidates` order."""
    if inst.k < 1:
        raise InvalidInputError("rank must be at least 1")
    return _scan_lambdas(inst, r)[0]


def check_boundary(inst: VarietyInstance) -> dict[int, MultiIndex] | None:
    """Witness map ``r -> lambda`` when the boundary criterion holds."""
    if _hyperbolicity_gate(inst):
        return None
    if any(inst.d[i] < inst.strict_threshold(i) for i in range(inst.m)):
        return None
    witnesses = {}
    for r in range(inst.m):
        lam = lambda_search(inst, r)
        if lam is None:
            return None
        witnesses[r] = lam
    return witnesses


def check_lines(inst: VarietyInstance) -> int | None:
    """Smallest factor ``i`` with ``d_i <= D - k - a_i - 3``.

    Needs no section domination and allows ``k = D - 1``.
    """
    if not 1 <= inst.k <= inst.D - 1:
        return None
    for i in range(inst.m):
        if inst.d[i] <= inst.lines_threshold(i):
            return i
    return None


def lines_note(inst: VarietyInstance, i: int) -> Note:
    """Dimension count behind a lines witness: ``dim F_i(A)`` and the surplus."""
    fano_dim = inst.D - inst.a[i] - 3
    surplus = fano_dim - inst.d[i] - inst.k
    return Note(
        "lines",
        f"X contains H{i + 1}-lines: d_{i + 1} = {inst.d[i]} <= {inst.lines_threshold(i)}; "
        f"dim F_{i + 1}(A) = {fano_dim}, surplus {surplus}",
        {"factor": i + 1, "fano_dim": fano_dim, "surplus": surplus},
    )


# -- certificates --------------------------------------------------------------


def strict_coefficients(inst: VarietyInstance) -> tuple[Fraction, ...]:
    return tuple(Fraction(inst.KX[i] - (inst.D - inst.k - 1)) for i in range(inst.m))


def boundary_coefficients(inst: VarietyInstance, r: int, lam: Sequence[int]) -> tuple[Fraction, ...]:
    """Coefficients of ``e`` in the genus bound for curves of type ``(D-k-1) e_r``."""
    m = inst.m
    pivot = inst.top(add_index(lam, unit(m, r)))
    if pivot <= 0:
        raise InvalidInputError(f"divisor d_(lambda+e_{r + 1}) = {pivot} must be positive")
    out = []
    for i in range(m):
        if i == r:
            out.append(inst.KX[r] - (inst.D - inst.k - 1) + Fraction(1, pivot))
        else:
            out.append(inst.KX[i] - Fraction(inst.top(add_index(lam, unit(m, i))), pivot))
    return tuple(out)


def epsilon_certificate(inst: VarietyInstance, witnesses: Mapping[int, MultiIndex] | None = None) -> EpsilonCertificate:
    """Build ``eps`` from a passing strict check (no witnesses) or boundary check."""
    if witnesses is None:
        if not check_strict(inst):
            raise ContractViolation("strict criterion does not hold for this instance")
        coeffs = {"all types": strict_coefficients(inst)}
        return EpsilonCertificate(min(coeffs["all types"]), "strict", {}, coeffs)

    passed = check_boundary(inst)
    if passed is None:
        raise ContractViolation("boundary criterion does not hold for this instance")
    for r in range(inst.m):
        if r not in witnesses or not lambda_qualifies(inst, r, witnesses[r]):
            raise ContractViolation(f"no valid witness supplied for factor {r + 1}")
    # types with every s_i <= D-k-2 have all coefficients a_i + d_i - s_i >= 1
    coeffs = {"non-extremal types": (Fraction(1),) * inst.m}
    for r in range(inst.m):
        coeffs[f"extremal r={r + 1}"] = boundary_coefficients(inst, r, witnesses[r])
    eps = min(min(v) for v in coeffs.values())
    return EpsilonCertificate(eps, "boundary", dict(witnesses), coeffs)


# -- classification ------------------------------------------------------------


def _threshold_notes(inst: VarietyInstance) -> list[Note]:
    notes = []
    for i in range(inst.m):
        t = inst.strict_threshold(i)
        if inst.d[i] < t:
            notes.append(Note("below threshold", f"d_{i + 1} = {inst.d[i]} < {t} = D - k - a_{i + 1} - 1"))
        elif inst.d[i] == t:
            notes.append(Note("equality", f"d_{i + 1} = {t}: strict inequality fails, boundary criterion needed"))
    return notes


def classify(inst: VarietyInstance) -> Verdict:
    """Apply the lines test and both hyperbolicity tests.

    Undetermined means none of these criteria decides the instance; it says
    nothing about the actual geometry.
    """
    if not 1 <= inst.k <= inst.D - 1:
        raise InvalidInputError(f"rank k = {inst.k} admits no criterion on dim A = {inst.D}")
    line_factor = check_lines(inst)
    strict = check_strict(inst)
    witnesses = None if strict else check_boundary(inst)
    if line_factor is not None and (strict or witnesses is not None):
        raise InconsistentInputError("lines and hyperbolicity criteria both hold; the input data is inconsistent")

    if line_factor is not None:
        return Verdict(Kind.NOT_HYPERBOLIC, witness_index=line_factor, reasons=(lines_note(inst, line_factor),))
    if strict:
        return Verdict(Kind.HYPERBOLIC, certificate=epsilon_certificate(inst))
    if witnesses is not None:
        notes = [Note("boundary", "equality in some factor; boundary criterion holds",
                      {"witnesses": {r + 1: list(l) for r, l in witnesses.items()}})]
        return Verdict(Kind.HYPERBOLIC, certificate=epsilon_certificate(inst, witnesses), reasons=tuple(notes))

    notes = _hyperbolicity_gate(inst)
    if not notes:
        notes = _threshold_notes(inst)
        if all(inst.d[i] >= inst.strict_threshold(i) for i in range(inst.m)):
            for r in range(inst.m):
                lam, negative = _scan_lambdas(inst, r)
                for bad in negative:
                    notes.append(Note("negative divisor", f"lambda = {bad} skipped for r = {r + 1}: d_(lambda+e_r) < 0"))
                if lam is None:
                    notes.append(Note("no witness", f"no lambda with |lambda| = {inst.k - 1} works for r = {r + 1}"))
    notes.append(Note("scope", "Undetermined refers to these criteria only, not to the geometry of X"))
    return Verdict(Kind.UNDETERMINED, reasons=tuple(notes))


def check_uniform(inst: VarietyInstance) -> bool:
    """Uniform-degree corollary: ``d >= D - k - a_i - 1`` for all ``i`` and ``(D-1)/2 > k``.

    Requires a split bundle whose summands have equal degree on every factor.
    """
    if inst.split is None or not inst.split.is_uniform():
        raise NotApplicable("needs a split bundle with each summand of equal degree on all factors")
    d = inst.d[0]
    return all(d >= inst.strict_threshold(i) for i in range(inst.m)) and inst.D - 1 > 2 * inst.k


def classify_pn_ci(n: int, degrees: Sequence[int]) -> Verdict:
    """Complete intersection of hypersurfaces of the given degrees in ``P^n``.

    Works straight from the closed-form thresholds ``2n - k`` and
    ``2n - k - 2`` on ``sum(degrees)``, independently of :func:`classify`.
    """
    degrees = [int(x) for x in degrees]
    k = len(degrees)
    if k < 1 or any(x < 1 for x in degrees):
        raise InvalidInputError("need at least one positive degree")
    if k > n - 2:
        raise InvalidInputError(f"codimension k = {k} exceeds n - 2 = {n - 2}")
    total = sum(degrees)
    if total <= 2 * n - k - 2:
        i = 0
        fano_dim, surplus = 2 * n - 2, 2 * n - 2 - total - k
        return Verdict(Kind.NOT_HYPERBOLIC, witness_index=i, reasons=(
            Note("lines", f"sum of degrees {total} <= {2 * n - k - 2}", {"factor": 1, "fano_dim": fano_dim, "surplus": surplus}),))
    if total > 2 * n - k:
        eps = Fraction(total - 2 * n + k)
        cert = EpsilonCertificate(eps, "strict", {}, {"all types": (eps,)})
        return Verdict(Kind.HYPERBOLIC, certificate=cert)
    if total == 2 * n - k:
        product = 1
        for x in degrees:
            product *= x
        coeffs = {"non-extremal types": (Fraction(1),), "extremal r=1": (Fraction(1, product),)}
        cert = EpsilonCertificate(min(Fraction(1), Fraction(1, product)), "boundary", {0: (k - 1,)}, coeffs)
        return Verdict(Kind.HYPERBOLIC, certificate=cert)
    return Verdict(Kind.UNDETERMINED, reasons=(Note("band", f"sum of degrees {total} = 2n - k - 1"),))


def known_hypersurface_status(n: int, d: int) -> KnownStatus:
    """Literature status of a very general degree ``d`` hypersurface in ``P^n``."""
    if n < 3:
        raise InvalidInputError("tabulated only for n >= 3")
    if d < 1:
        raise InvalidInputError("degree must be positive")
    if n == 3:
        return KnownStatus.KNOWN_HYPERBOLIC if d >= 5 else KnownStatus.KNOWN_NOT_HYPERBOLIC
    if n == 4:
        if d >= 7:
            return KnownStatus.KNOWN_HYPERBOLIC
        return KnownStatus.OPEN if d == 6 else KnownStatus.KNOWN_NOT_HYPERBOLIC
    return KnownStatus.KNOWN_HYPERBOLIC if d >= 2 * n - 2 else KnownStatus.KNOWN_NOT_HYPERBOLIC


def contradicts_known(verdict: Verdict, status: KnownStatus) -> bool:
    return (verdict.kind is Kind.HYPERBOLIC and status is KnownStatus.KNOWN_NOT_HYPERBOLIC) or (
        verdict.kind is Kind.NOT_HYPERBOLIC and status is KnownStatus.KNOWN_HYPERBOLIC
    )


def adjoint_summand(ambient: AmbientSpace, eprime: SplitBundleSpec, b: Sequence[int]) -> tuple[int, ...]:
    """Degrees of the line bundle ``K_Y + (3 dim Y + 1) L`` with ``L = O(b)``.

    ``Y`` is the complete intersection cut out by ``eprime``.
    """
    dim_y = ambient.D - eprime.k
    dprime = c1_split(eprime)
    return tuple(ambient.a[i] + dprime[i] + (3 * dim_y + 1) * b[i] for i in range(ambient.m))


def check_adjoint_instance(
    ambient: AmbientSpace,
    eprime: SplitBundleSpec,
    b: Sequence[int],
    *,
    section_dominating: bool | None = None,
) -> bool:
    """Strict criterion for ``X`` cut out in ``Y`` by a member of ``|K_Y + (3 dim Y + 1) L|``.

    Raises :class:`NotApplicable` when the construction's hypotheses fail.
    """
    b = tuple(int(x) for x in b)
    k = eprime.k + 1
    if len(b) != ambient.m or eprime.m != ambient.m:
        raise NotApplicable("b and E' must have one entry per factor")
    if any(ai < -ambient.D - 1 for ai in ambient.a):
        raise NotApplicable(f"needs a_i >= -D - 1 = {-ambient.D - 1}, got a = {ambient.a}")
    if k > ambient.D - 2:
        raise NotApplicable(f"needs k = {k} <= D - 2 = {ambient.D - 2}")
    if any(x < 1 for x in b) or any(x < 1 for row in eprime.rows for x in row):
        raise NotApplicable("b and all degrees of E' must be positive")
    summand = adjoint_summand(ambient, eprime, b)
    if any(x <= 0 for x in summand):
        raise NotApplicable(f"adjoint class {summand} is not positive on every factor")
    bundle = SplitBundleSpec(eprime.rows + (summand,))
    inst = build_instance(ambient, bundle, section_dominating=section_dominating)
    if not inst.section_dominating:
        raise NotApplicable("section domination of E' + L is not established")
    return check_strict(inst)
