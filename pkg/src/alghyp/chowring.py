"""Truncated multigraded Chow ring of a product of projective spaces.

The Chow ring of ``P^N1 x ... x P^Nm`` is ``Z[H1, ..., Hm] / (Hi^(Ni+1))``.
Classes are stored sparsely as ``{exponent tuple: nonzero int}`` and every
product is truncated term by term, so a class is always in canonical form.

>>> h1 = ChowClass.hyperplane((2, 2), 0)
>>> h2 = ChowClass.hyperplane((2, 2), 1)
>>> str((2 * h1 + h2) * (h1 + 3 * h2))
'2*H1^2*H2^0 + 7*H1^1*H2^1 + 3*H1^0*H2^2'
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvalidInputError, ModeError

MultiIndex = tuple[int, ...]


def multi_index(entries: Iterable[int], m: int | None = None) -> MultiIndex:
    """Validate and normalise an exponent vector."""
    alpha = tuple(int(x) for x in entries)
    if m is not None and len(alpha) != m:
        raise InvalidInputError(f"multi-index {alpha} must have length {m}")
    if any(x < 0 for x in alpha):
        raise InvalidInputError(f"multi-index {alpha} has a negative entry")
    return alpha


def norm(alpha: Sequence[int]) -> int:
    """``|alpha|``, the entry sum."""
    return sum(alpha)


def unit(m: int, i: int) -> MultiIndex:
    """The standard basis vector ``e_i`` (0-based ``i``)."""
    if not 0 <= i < m:
        raise InvalidInputError(f"factor index {i} out of range for m={m}")
    return tuple(1 if j == i else 0 for j in range(m))


def add_index(alpha: Sequence[int], beta: Sequence[int]) -> MultiIndex:
    return tuple(x + y for x, y in zip(alpha, beta))


def sub_index(alpha: Sequence[int], beta: Sequence[int]) -> MultiIndex:
    """Componentwise difference; entries may be negative."""
    return tuple(x - y for x, y in zip(alpha, beta))


def compositions(total: int, m: int) -> Iterator[MultiIndex]:
    """All ``alpha`` in ``Z_{>=0}^m`` with ``|alpha| == total``, ascending lex order."""
    if m == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, m - 1):
            yield (first,) + rest


def within(alpha: Sequence[int], bounds: Sequence[int]) -> bool:
    return all(0 <= x <= n for x, n in zip(alpha, bounds))


class ChowClass:
    """An immutable element of the truncated ring.

    ``bounds`` are the factor dimensions ``(N1, ..., Nm)``; ``terms`` maps
    exponent tuples to integer coefficients. Zero coefficients are dropped
    and exponents above a bound raise, so construct products with ``*``
    rather than by hand when truncation is wanted.
    """

    __slots__ = ("_bounds", "_terms", "_hash")

    def __init__(self, bounds: Sequence[int], terms: Mapping[Sequence[int], int] | None = None):
        bounds = tuple(int(n) for n in bounds)
        if not bounds or any(n < 1 for n in bounds):
            raise InvalidInputError(f"bounds {bounds} must be a nonempty tuple of positive integers")
        clean: dict[MultiIndex, int] = {}
        for alpha, c in (terms or {}).items():
            alpha = multi_index(alpha, len(bounds))
            if not within(alpha, bounds):
                raise InvalidInputError(f"exponent {alpha} exceeds bounds {bounds}")
            if not isinstance(c, int):
                raise InvalidInputError(f"coefficient {c!r} is not an integer")
            c = clean.get(alpha, 0) + c
            if c:
                clean[alpha] = c
            else:
                clean.pop(alpha, None)
        self._bounds = bounds
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, bounds: Sequence[int]) -> ChowClass:
        return cls(bounds)

    @classmethod
    def one(cls, bounds: Sequence[int]) -> ChowClass:
        return cls(bounds, {(0,) * len(bounds): 1})

    @classmethod
    def monomial(cls, bounds: Sequence[int], alpha: Sequence[int], coeff: int = 1) -> ChowClass:
        """``coeff * H^alpha``, or zero if some exponent is out of range.

        Negative exponents also give zero, matching the convention that
        ``H^beta = 0`` whenever some ``beta_i < 0``.
        """
        alpha = tuple(alpha)
        if len(alpha) != len(bounds):
            raise InvalidInputError(f"exponent {alpha} has wrong length for bounds {tuple(bounds)}")
        if not within(alpha, bounds):
            return cls(bounds)
        return cls(bounds, {alpha: coeff})

    @classmethod
    def hyperplane(cls, bounds: Sequence[int], i: int) -> ChowClass:
        return cls.monomial(bounds, unit(len(bounds), i))

    @classmethod
    def linear(cls, bounds: Sequence[int], coeffs: Sequence[int]) -> ChowClass:
        """``sum_i coeffs[i] * H_i``."""
        m = len(bounds)
        if len(coeffs) != m:
            raise InvalidInputError(f"need {m} linear coefficients, got {len(coeffs)}")
        return cls(bounds, {unit(m, i): int(c) for i, c in enumerate(coeffs) if c})

    # -- accessors ----------------------------------------------------------

    @property
    def bounds(self) -> tuple[int, ...]:
        return self._bounds

    @property
    def m(self) -> int:
        return len(self._bounds)

    @property
    def terms(self) -> Mapping[MultiIndex, int]:
        """Read-only view of the canonical term map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, alpha: Sequence[int]) -> int:
        """The coefficient of ``H^alpha`` (0 when absent)."""
        alpha = multi_index(alpha, self.m)
        if not within(alpha, self._bounds):
            raise InvalidInputError(f"exponent {alpha} exceeds bounds {self._bounds}")
        return self._terms.get(alpha, 0)

    __getitem__ = coefficient

    def top_degree(self) -> int:
        """Coefficient of ``H^N``, the point class."""
        return self._terms.get(self._bounds, 0)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: ChowClass) -> None:
        if not isinstance(other, ChowClass):
            raise InvalidInputError(f"expected ChowClass, got {type(other).__name__}")
        if other._bounds != self._bounds:
            raise InvalidInputError(f"bounds mismatch: {self._bounds} vs {other._bounds}")

    def __add__(self, other: ChowClass) -> ChowClass:
        if isinstance(other, int):
            other = other * ChowClass.one(self._bounds)
        self._check(other)
        out = dict(self._terms)
        for alpha, c in other._terms.items():
            out[alpha] = out.get(alpha, 0) + c
        return ChowClass(self._bounds, out)

    __radd__ = __add__

    def __neg__(self) -> ChowClass:
        return ChowClass(self._bounds, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other: ChowClass) -> ChowClass:
        return self + (-other)

    def __rsub__(self, other) -> ChowClass:
        return (-self) + other

    def __mul__(self, other) -> ChowClass:
        if isinstance(other, int):
            return ChowClass(self._bounds, {a: c * other for a, c in self._terms.items()})
        self._check(other)
        bounds = self._bounds
        out: dict[MultiIndex, int] = {}
        for alpha, c in self._terms.items():
            for beta, d in other._terms.items():
                gamma = tuple(x + y for x, y in zip(alpha, beta))
                # truncate eagerly: H_i^(N_i+1) = 0
                if any(g > n for g, n in zip(gamma, bounds)):
                    continue
                out[gamma] = out.get(gamma, 0) + c * d
        return ChowClass(bounds, out)

    def __rmul__(self, other) -> ChowClass:
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int) -> ChowClass:
        if not isinstance(e, int) or e < 0:
            raise InvalidInputError("exponent must be a nonnegative integer")
        result = ChowClass.one(self._bounds)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self._bounds == other._bounds and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._bounds, tuple(self._terms.items())))
        return self._hash

    # -- text form ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for alpha, c in self._terms.items():
            parts.append("*".join([str(c)] + [f"H{i + 1}^{x}" for i, x in enumerate(alpha)]))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ChowClass({self._bounds}, {str(self)!r})"

    @classmethod
    def parse(cls, text: str, bounds: Sequence[int]) -> ChowClass:
        """Inverse of ``str``; accepts exactly the rendered grammar."""
        text = text.strip()
        bounds = tuple(bounds)
        if text == "0":
            return cls(bounds)
        terms: dict[MultiIndex, int] = {}
        for chunk in text.split(" + "):
            fields = chunk.split("*")
            if len(fields) != len(bounds) + 1:
                raise InvalidInputError(f"malformed term {chunk!r}")
            try:
                c = int(fields[0])
            except ValueError:
                raise InvalidInputError(f"malformed coefficient in {chunk!r}") from None
            alpha = []
            for i, f in enumerate(fields[1:]):
                match = re.fullmatch(r"H(\d+)\^(\d+)", f)
                if match is None or int(match.group(1)) != i + 1:
                    raise InvalidInputError(f"malformed factor {f!r} in {chunk!r}")
                alpha.append(int(match.group(2)))
            alpha = tuple(alpha)
            if alpha in terms:
                raise InvalidInputError(f"repeated exponent {alpha}")
            terms[alpha] = c
        return cls(bounds, terms)


def join_shift(a: ChowClass, lam: Sequence[int]) -> ChowClass:
    """Class of the ``lambda``-join: ``b_alpha H^alpha -> b_alpha H^(alpha - lambda)``.

    Terms whose shifted exponent has a negative entry vanish. Shifting by
    ``e_i`` is the cone over the i-th factor.
    """
    lam = multi_index(lam, a.m)
    out = {}
    for alpha, c in a.items():
        beta = sub_index(alpha, lam)
        if min(beta) >= 0:
            out[beta] = c
    return ChowClass(a.bounds, out)


def zero_cycle_degree(a: ChowClass, full_product: bool = True) -> int:
    """Degree of a zero-cycle: the ``H^N`` coefficient.

    Only meaningful on the full product; on a proper subvariety the point
    class is not a monomial we track.
    """
    if not full_product:
        raise ModeError("zero-cycle degrees are only available on the full product")
    return a.top_degree()
