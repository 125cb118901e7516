"""Ambient varieties, bundle data, and assembled instances.

An instance is the package's view of the very general zero locus ``X`` of a
section of a rank ``k`` bundle on a homogeneous ``A`` inside a product of
projective spaces. Everything the criteria need is numeric: ``D``, the
canonical coefficients ``a``, the first Chern coefficients ``d`` and the top
Chern coefficients ``d_alpha``.

Factor indices are 0-based in the Python API; rendered text uses ``H1..Hm``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence, Union

from .chowring import ChowClass, MultiIndex, multi_index, norm, within
from .errors import InvalidInputError

# Assumptions that are recorded in every report and never checked.
STANDING_ASSUMPTIONS = (
    "the section of E is very general",
    "X is smooth and irreducible of codimension k in A",
)


@dataclass(frozen=True)
class AmbientSpace:
    """A homogeneous ``A`` of dimension ``D`` in ``P^N1 x ... x P^Nm``.

    ``a`` holds the coefficients of ``K_A = sum a_i H_i``. Use
    :meth:`product` for the full product, where ``D`` and ``a`` are forced.
    """

    N: tuple[int, ...]
    D: int
    a: tuple[int, ...]
    full_product: bool = False
    homogeneous_asserted: bool = True

    def __post_init__(self):
        object.__setattr__(self, "N", tuple(int(n) for n in self.N))
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if not self.N or any(n < 1 for n in self.N):
            raise InvalidInputError(f"factor dimensions {self.N} must be positive")
        if len(self.a) != len(self.N):
            raise InvalidInputError(f"a has length {len(self.a)} but there are {len(self.N)} factors")
        if not 1 <= self.D <= sum(self.N):
            raise InvalidInputError(f"dim A = {self.D} must lie in [1, {sum(self.N)}]")
        if self.full_product:
            if self.D != sum(self.N):
                raise InvalidInputError("the full product has D = N1 + ... + Nm")
            expected = tuple(-(n + 1) for n in self.N)
            if self.a != expected:
                raise InvalidInputError(f"the full product has a = {expected}, got {self.a}")

    @classmethod
    def product(cls, *N: int) -> AmbientSpace:
        """``P^N1 x ... x P^Nm`` itself."""
        if len(N) == 1 and not isinstance(N[0], int):
            N = tuple(N[0])
        return cls(N=tuple(N), D=sum(N), a=tuple(-(n + 1) for n in N), full_product=True)

    @classmethod
    def projective(cls, n: int) -> AmbientSpace:
        return cls.product(n)

    @property
    def m(self) -> int:
        return len(self.N)

    def degree(self, cls_: ChowClass) -> int:
        from .chowring import zero_cycle_degree

        return zero_cycle_degree(cls_, self.full_product)

    def describe(self) -> str:
        name = " x ".join(f"P^{n}" for n in self.N)
        if self.full_product:
            return name
        return f"A of dim {self.D} in {name} with K_A coefficients {list(self.a)}"


@dataclass(frozen=True)
class SplitBundleSpec:
    """Direct sum of line bundles ``O(d_{1,j}, ..., d_{m,j})``, one row per summand."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise InvalidInputError("a split bundle needs at least one summand")
        m = len(rows[0])
        if m < 1 or any(len(r) != m for r in rows):
            raise InvalidInputError("all summand rows must have the same positive length")
        for r in rows:
            if any(x < 0 for x in r):
                raise InvalidInputError(f"summand {r} has a negative degree")
            if not any(r):
                raise InvalidInputError("a summand cannot be the trivial bundle")

    @classmethod
    def hypersurfaces(cls, *degrees: int) -> SplitBundleSpec:
        """Complete intersection of hypersurfaces in a single ``P^n``."""
        return cls(tuple((d,) for d in degrees))

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0])

    def is_uniform(self) -> bool:
        """Each summand has the same degree on every factor."""
        return all(len(set(r)) == 1 for r in self.rows)


@dataclass(frozen=True)
class ChernData:
    """Explicit first and top Chern coefficients.

    ``section_dominating`` is ``None`` when left for the library to decide,
    otherwise the caller's assertion.
    """

    k: int
    d: tuple[int, ...]
    d_alpha: Mapping[MultiIndex, int]
    section_dominating: bool | None = None

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        if self.k < 1:
            raise InvalidInputError("rank must be at least 1")
        m = len(self.d)
        clean = {}
        for alpha, c in dict(self.d_alpha).items():
            alpha = multi_index(alpha, m)
            if norm(alpha) != self.k:
                raise InvalidInputError(f"top Chern exponent {alpha} does not have |alpha| = {self.k}")
            clean[alpha] = int(c)
        object.__setattr__(self, "d_alpha", tuple(sorted(clean.items())))

    @cached_property
    def _lookup(self) -> dict[MultiIndex, int]:
        return dict(self.d_alpha)

    def coefficient(self, alpha: Sequence[int]) -> int:
        return self._lookup.get(tuple(alpha), 0)


Bundle = Union[SplitBundleSpec, ChernData]


@dataclass(frozen=True)
class VarietyInstance:
    ambient: AmbientSpace
    chern: ChernData
    KX: tuple[int, ...]
    section_dominating: bool
    split: SplitBundleSpec | None = None
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.KX != tuple(a + d for a, d in zip(self.ambient.a, self.chern.d)):
            raise InvalidInputError("KX must equal a + d")

    @property
    def D(self) -> int:
        return self.ambient.D

    @property
    def k(self) -> int:
        return self.chern.k

    @property
    def m(self) -> int:
        return self.ambient.m

    @property
    def a(self) -> tuple[int, ...]:
        return self.ambient.a

    @property
    def d(self) -> tuple[int, ...]:
        return self.chern.d

    def top(self, alpha: Sequence[int]) -> int:
        """``d_alpha``; zero when ``alpha`` is absent or out of bounds."""
        alpha = tuple(alpha)
        if not within(alpha, self.ambient.N):
            return 0
        return self.chern.coefficient(alpha)

    @cached_property
    def top_class(self) -> ChowClass:
        """``[X] = c_k(E)`` as a class in the ambient product ring."""
        return ChowClass(self.ambient.N, dict(self.chern.d_alpha))

    def strict_threshold(self, i: int) -> int:
        """``D - k - a_i - 1``; hyperbolicity needs ``d_i`` at least this."""
        return self.D - self.k - self.a[i] - 1

    def lines_threshold(self, i: int) -> int:
        """``D - k - a_i - 3``; at or below this X contains lines."""
        return self.D - self.k - self.a[i] - 3


def c1_split(spec: SplitBundleSpec) -> tuple[int, ...]:
    """First Chern coefficients: column sums of the degree matrix."""
    return tuple(sum(col) for col in zip(*spec.rows))


def ck_split(spec: SplitBundleSpec, ambient: AmbientSpace) -> ChowClass:
    """Top Chern class ``prod_j (sum_i d_{i,j} H_i)``, truncated to the ambient bounds."""
    if spec.m != ambient.m:
        raise InvalidInputError(f"bundle has {spec.m} factor degrees but ambient has {ambient.m} factors")
    result = ChowClass.one(ambient.N)
    for row in spec.rows:
        result = result * ChowClass.linear(ambient.N, row)
    return result


def section_domination_auto(spec: SplitBundleSpec, ambient: AmbientSpace) -> bool:
    """Sufficient condition: every summand is strictly positive on the full product."""
    return ambient.full_product and all(x >= 1 for row in spec.rows for x in row)


def build_instance(
    ambient: AmbientSpace,
    bundle: Bundle,
    *,
    section_dominating: bool | None = None,
    purpose: str = "hyperbolicity",
) -> VarietyInstance:
    """Assemble the data consumed by the criteria.

    ``purpose`` sets the admissible rank: ``"hyperbolicity"`` needs
    ``k <= D - 2``, ``"lines"`` (non-hyperbolicity only) allows ``k = D - 1``.
    For a split bundle ``section_dominating`` overrides the automatic rule;
    for :class:`ChernData` the flag on the data is used unless overridden.
    """
    if purpose not in ("hyperbolicity", "lines"):
        raise InvalidInputError(f"unknown purpose {purpose!r}")
    split = None
    if isinstance(bundle, SplitBundleSpec):
        split = bundle
        top = ck_split(bundle, ambient)
        flag = section_dominating
        if flag is None and section_domination_auto(bundle, ambient):
            flag = True
        chern = ChernData(bundle.k, c1_split(bundle), top.terms, flag)
    elif isinstance(bundle, ChernData):
        chern = bundle
        if section_dominating is not None:
            chern = ChernData(bundle.k, bundle.d, dict(bundle.d_alpha), section_dominating)
        if len(chern.d) != ambient.m:
            raise InvalidInputError(f"c1 has {len(chern.d)} coefficients but ambient has {ambient.m} factors")
        for alpha, _ in chern.d_alpha:
            if not within(alpha, ambient.N):
                raise InvalidInputError(f"top Chern exponent {alpha} exceeds bounds {ambient.N}")
    else:
        raise InvalidInputError(f"unsupported bundle type {type(bundle).__name__}")

    k, D = chern.k, ambient.D
    top_k = D - 2 if purpose == "hyperbolicity" else D - 1
    if not 1 <= k <= top_k:
        raise InvalidInputError(f"rank k = {k} out of range [1, {top_k}] for {purpose} checks on dim A = {D}")

    warnings = []
    if chern.section_dominating is None:
        warnings.append("section domination unresolved: hyperbolicity checks withheld (assumption unverified)")
    elif chern.section_dominating is False:
        warnings.append("section domination asserted false: hyperbolicity checks withheld")
    if not ambient.homogeneous_asserted:
        warnings.append("homogeneity of A not asserted")
    KX = tuple(a + d for a, d in zip(ambient.a, chern.d))
    return VarietyInstance(
        ambient=ambient,
        chern=chern,
        KX=KX,
        section_dominating=chern.section_dominating is True and ambient.homogeneous_asserted,
        split=split,
        warnings=tuple(warnings),
    )
