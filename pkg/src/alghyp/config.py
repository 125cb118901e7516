"""Run configuration: a small sectioned ``key = value`` format.

Grammar (one entry per line, ``#`` starts a comment)::

    [ambient]
    N = [3, 4]                # factor dimensions
    full_product = true       # D and a are then implied
    D = 7                     # required unless full_product
    a = [-4, -5]              # K_A coefficients, required unless full_product
    homogeneous = true        # assertion, default true

    [bundle]
    split = [[2, 2], [3, 3]]  # one row per line-bundle summand
    # ... or explicit Chern data instead of split:
    k = 2
    c1 = [5, 5]
    ck = [[[2, 0], 0], [[1, 1], 4], [[0, 2], 1]]   # [alpha, d_alpha] pairs
    section_dominating = auto # auto | true | false

    [curve]
    e = [1, 1]                # multidegree of a curve

    [atlas]
    n = [3, 8]                # inclusive range of P^n
    k = [1, 6]                # inclusive range, clipped to k <= n - 2
    d_max_per_n = 2           # degree cap 2n; or d_max = 10 for a fixed cap

Values are JSON literals (integers, ``true``/``false``, nested arrays) except
the bare word ``auto``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Any

from .errors import ParseError
from .model import AmbientSpace, ChernData, SplitBundleSpec

_INT, _BOOL, _INTS, _ROWS, _PAIRS, _FLAG, _RANGE = "int", "bool", "ints", "rows", "pairs", "flag", "range"

SCHEMA: dict[str, dict[str, str]] = {
    "ambient": {"N": _INTS, "full_product": _BOOL, "D": _INT, "a": _INTS, "homogeneous": _BOOL},
    "bundle": {"split": _ROWS, "k": _INT, "c1": _INTS, "ck": _PAIRS, "section_dominating": _FLAG},
    "curve": {"e": _INTS},
    "atlas": {"n": _RANGE, "k": _RANGE, "d_max": _INT, "d_max_per_n": _INT},
}
# canonical key order for rendering and for the dataclass fields below
ORDER = {name: list(keys) for name, keys in SCHEMA.items()}


@dataclass(frozen=True)
class AmbientConfig:
    N: tuple[int, ...]
    full_product: bool = False
    D: int | None = None
    a: tuple[int, ...] | None = None
    homogeneous: bool = True


@dataclass(frozen=True)
class BundleConfig:
    split: tuple[tuple[int, ...], ...] | None = None
    k: int | None = None
    c1: tuple[int, ...] | None = None
    ck: tuple[tuple[tuple[int, ...], int], ...] | None = None
    section_dominating: bool | None = None


@dataclass(frozen=True)
class CurveConfig:
    e: tuple[int, ...]


@dataclass(frozen=True)
class AtlasConfig:
    n: tuple[int, int]
    k: tuple[int, int]
    d_max: int | None = None
    d_max_per_n: int | None = None

    def cap(self, n: int) -> int:
        return self.d_max if self.d_max is not None else self.d_max_per_n * n


@dataclass(frozen=True)
class RunConfig:
    ambient: AmbientConfig | None = None
    bundle: BundleConfig | None = None
    curve: CurveConfig | None = None
    atlas: AtlasConfig | None = None

    def ambient_space(self) -> AmbientSpace:
        if self.ambient is None:
            raise ParseError("missing [ambient] section")
        amb = self.ambient
        if amb.full_product:
            N = amb.N
            return AmbientSpace(
                N=N,
                D=amb.D if amb.D is not None else sum(N),
                a=amb.a if amb.a is not None else tuple(-(n + 1) for n in N),
                full_product=True,
                homogeneous_asserted=amb.homogeneous,
            )
        return AmbientSpace(N=amb.N, D=amb.D, a=amb.a, full_product=False, homogeneous_asserted=amb.homogeneous)

    def bundle_spec(self) -> SplitBundleSpec | ChernData:
        if self.bundle is None:
            raise ParseError("missing [bundle] section")
        b = self.bundle
        if b.split is not None:
            return SplitBundleSpec(b.split)
        return ChernData(b.k, b.c1, {alpha: c for alpha, c in b.ck}, b.section_dominating)


# -- parsing -------------------------------------------------------------------

_SECTION = re.compile(r"\[\s*([A-Za-z_]\w*)\s*\]")
_ENTRY = re.compile(r"([A-Za-z_]\w*)\s*=\s*(.+)")


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _coerce(kind: str, raw: str, line: int, key: str) -> Any:
    if kind == _FLAG:
        mapping = {"auto": None, "true": True, "false": False}
        if raw not in mapping:
            raise ParseError("expected auto, true or false", line, key)
        return mapping[raw]
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        raise ParseError(f"cannot read value {raw!r}", line, key) from None

    def fail(what: str):
        raise ParseError(f"expected {what}", line, key)

    if kind == _INT:
        if not _is_int(value):
            fail("an integer")
        return value
    if kind == _BOOL:
        if not isinstance(value, bool):
            fail("true or false")
        return value
    if kind in (_INTS, _RANGE):
        if not isinstance(value, list) or not all(_is_int(x) for x in value):
            fail("an array of integers")
        if kind == _RANGE and len(value) != 2:
            fail("a range [lo, hi]")
        return tuple(value)
    if kind == _ROWS:
        if not isinstance(value, list) or not all(
            isinstance(r, list) and all(_is_int(x) for x in r) for r in value
        ):
            fail("an array of integer arrays")
        return tuple(tuple(r) for r in value)
    if kind == _PAIRS:
        ok = isinstance(value, list) and all(
            isinstance(p, list) and len(p) == 2 and isinstance(p[0], list)
            and all(_is_int(x) for x in p[0]) and _is_int(p[1])
            for p in value
        )
        if not ok:
            fail("an array of [exponent array, integer] pairs")
        return tuple((tuple(p[0]), p[1]) for p in value)
    raise AssertionError(kind)


def parse_config(text: str) -> RunConfig:
    """Parse and validate a configuration document."""
    sections: dict[str, dict[str, Any]] = {}
    where: dict[tuple[str, str], int] = {}
    header_line: dict[str, int] = {}
    current = None
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        m = _SECTION.fullmatch(line)
        if m:
            current = m.group(1)
            if current not in SCHEMA:
                raise ParseError(f"unknown section [{current}]", lineno)
            if current in sections:
                raise ParseError(f"section [{current}] appears twice", lineno)
            sections[current] = {}
            header_line[current] = lineno
            continue
        m = _ENTRY.fullmatch(line)
        if m is None:
            raise ParseError(f"cannot read {line!r}", lineno)
        key, raw = m.group(1), m.group(2).strip()
        if current is None:
            raise ParseError("entry before any [section]", lineno, key)
        if key not in SCHEMA[current]:
            raise ParseError(f"unknown key in [{current}]", lineno, key)
        if key in sections[current]:
            raise ParseError("duplicate key", lineno, key)
        sections[current][key] = _coerce(SCHEMA[current][key], raw, lineno, key)
        where[(current, key)] = lineno

    def loc(sec, key):
        return where.get((sec, key), header_line.get(sec))

    cfg_ambient = cfg_bundle = cfg_curve = cfg_atlas = None
    m_factors = None

    if "ambient" in sections:
        s = sections["ambient"]
        if "N" not in s:
            raise ParseError("missing required key", header_line["ambient"], "N")
        m_factors = len(s["N"])
        full = s.get("full_product", False)
        if "a" in s and len(s["a"]) != m_factors:
            raise ParseError(f"wrong arity: a has {len(s['a'])} entries but N has {m_factors}", loc("ambient", "a"), "a")
        if not full:
            for key in ("D", "a"):
                if key not in s:
                    raise ParseError("required when full_product is false", header_line["ambient"], key)
        cfg_ambient = AmbientConfig(
            N=s["N"], full_product=full, D=s.get("D"), a=s.get("a"), homogeneous=s.get("homogeneous", True)
        )

    if "bundle" in sections:
        s = sections["bundle"]
        explicit = [key for key in ("c1", "ck") if key in s]
        if "split" in s and explicit:
            raise ParseError("give either split or c1/ck, not both", loc("bundle", explicit[0]), explicit[0])
        if "split" in s:
            rows = s["split"]
            if not rows:
                raise ParseError("split needs at least one summand", loc("bundle", "split"), "split")
            for r in rows:
                if m_factors is not None and len(r) != m_factors:
                    raise ParseError(f"wrong arity: summand {list(r)} needs {m_factors} degrees", loc("bundle", "split"), "split")
            if "k" in s and s["k"] != len(rows):
                raise ParseError(f"k = {s['k']} but split has {len(rows)} summands", loc("bundle", "k"), "k")
        else:
            for key in ("k", "c1", "ck"):
                if key not in s:
                    raise ParseError("required without split", header_line["bundle"], key)
            if m_factors is not None and len(s["c1"]) != m_factors:
                raise ParseError(f"wrong arity: c1 needs {m_factors} entries", loc("bundle", "c1"), "c1")
            for alpha, _ in s["ck"]:
                if len(alpha) != len(s["c1"]):
                    raise ParseError(f"wrong arity: exponent {list(alpha)}", loc("bundle", "ck"), "ck")
        cfg_bundle = BundleConfig(
            split=s.get("split"), k=s.get("k"), c1=s.get("c1"), ck=s.get("ck"),
            section_dominating=s.get("section_dominating"),
        )

    if "curve" in sections:
        s = sections["curve"]
        if "e" not in s:
            raise ParseError("missing required key", header_line["curve"], "e")
        if m_factors is not None and len(s["e"]) != m_factors:
            raise ParseError(f"wrong arity: e needs {m_factors} entries", loc("curve", "e"), "e")
        cfg_curve = CurveConfig(e=s["e"])

    if "atlas" in sections:
        s = sections["atlas"]
        for key in ("n", "k"):
            if key not in s:
                raise ParseError("missing required key", header_line["atlas"], key)
        caps = [key for key in ("d_max", "d_max_per_n") if key in s]
        if len(caps) != 1:
            raise ParseError("give exactly one of d_max, d_max_per_n", header_line["atlas"], "d_max")
        cfg_atlas = AtlasConfig(n=s["n"], k=s["k"], d_max=s.get("d_max"), d_max_per_n=s.get("d_max_per_n"))

    return RunConfig(cfg_ambient, cfg_bundle, cfg_curve, cfg_atlas)


# -- rendering -----------------------------------------------------------------


def _render_value(value) -> str:
    if value is None:
        return "auto"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, tuple):
        return json.dumps(_listify(value))
    return json.dumps(value)


def _listify(value):
    if isinstance(value, tuple):
        return [_listify(v) for v in value]
    return value


def render_config(cfg: RunConfig) -> str:
    """Inverse of :func:`parse_config` for any validated config."""
    out = []
    for name in ("ambient", "bundle", "curve", "atlas"):
        section = getattr(cfg, name)
        if section is None:
            continue
        out.append(f"[{name}]")
        for key in ORDER[name]:
            value = getattr(section, key)
            if value is None and not (name == "bundle" and key == "section_dominating"):
                continue
            if name == "ambient" and key == "homogeneous" and value is True:
                continue
            out.append(f"{key} = {_render_value(value)}")
        out.append("")
    return "\n".join(out)
