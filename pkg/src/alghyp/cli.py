"""Command line front end.

Subcommands::

    alghyp classify <config>      verdict and epsilon certificate
    alghyp genus-bound <config>   genus lower bounds for the [curve] profile
    alghyp atlas <config>         CSV sweep over complete intersections in P^n
    alghyp known-table --n <n>    hypersurfaces in P^n against the literature

Exit codes: 0 on any verdict (Undetermined included), 2 for invalid input,
3 when a resource limit is hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path

from .config import RunConfig, parse_config, render_config
from .criteria import (
    Verdict,
    check_boundary,
    check_strict,
    classify,
    classify_pn_ci,
    contradicts_known,
    known_hypersurface_status,
)
from .curves import CurveProfile, genus_bound_table, min_genus_bound
from .errors import InvalidInputError, LimitError
from .model import STANDING_ASSUMPTIONS, AmbientSpace, SplitBundleSpec, VarietyInstance, build_instance

EXIT_OK, EXIT_INVALID, EXIT_LIMIT = 0, 2, 3
DEFAULT_ROW_CAP = 10**6
ATLAS_COLUMNS = ["n", "k", "degrees", "sum", "verdict", "epsilon", "known_status", "agreement"]


def frac_text(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass
class Report:
    """Everything printed for one run; ``to_dict`` is the JSON form."""

    command: str
    inputs: dict
    assumptions: dict
    instance: dict
    thresholds: list
    verdict: Verdict
    genus: dict | None = None
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        v = self.verdict
        verdict = {"kind": v.kind.value, "witness_factor": None if v.witness_index is None else v.witness_index + 1}
        if v.certificate is not None:
            c = v.certificate
            verdict["certificate"] = {
                "eps": c.eps_text,
                "eps_numerator": c.eps.numerator,
                "eps_denominator": c.eps.denominator,
                "path": c.path,
                "witnesses": {str(r + 1): list(lam) for r, lam in sorted(c.witnesses.items())},
                "coefficients": {k: [frac_text(x) for x in vals] for k, vals in c.coefficients.items()},
            }
        return {
            "command": self.command,
            "input": self.inputs,
            "assumptions": self.assumptions,
            "instance": self.instance,
            "thresholds": self.thresholds,
            "verdict": verdict,
            "reasons": [n.to_dict() for n in v.reasons],
            "genus": self.genus,
            "notes": self.notes,
        }

    def to_text(self) -> str:
        d = self.to_dict()
        inst = d["instance"]
        lines = [f"ambient: {inst['ambient']}", f"rank k = {inst['k']}, D = {inst['D']}"]
        lines.append(f"a = {inst['a']}, d = {inst['d']}, K_X = {inst['KX']}")
        lines.append(f"[X] = {inst['top_class']}")
        lines.append("standing assumptions: " + "; ".join(d["assumptions"]["standing"]))
        lines.append(f"section domination: {d['assumptions']['section_dominating']}")
        for t in d["thresholds"]:
            lines.append(
                f"  factor {t['factor']}: d = {t['d']}, hyperbolic needs >= {t['strict']}, lines if <= {t['lines']}"
            )
        lines.append(f"verdict: {d['verdict']['kind']}")
        cert = d["verdict"].get("certificate")
        if cert:
            lines.append(f"  eps = {cert['eps']} ({cert['path']} path, relative to H = H1 + ... + Hm)")
            for r, lam in cert["witnesses"].items():
                lines.append(f"  witness r = {r}: lambda = {tuple(lam)}")
            for label, vals in cert["coefficients"].items():
                lines.append(f"  {label}: [{', '.join(vals)}]")
        if d["verdict"]["witness_factor"] is not None:
            lines.append(f"  witness factor i = {d['verdict']['witness_factor']}")
        for r in d["reasons"]:
            lines.append(f"  - {r['text']}")
        if self.genus:
            g = self.genus
            lines.append(f"curve e = {tuple(g['e'])}, H-degree {g['degree']}")
            for row in g.get("table", []):
                scroll = f", scroll {row['scroll']}" if row["scroll"] is not None else ""
                lines.append(f"  type {tuple(row['type'])}: 2g-2 >= {row['basic']}{scroll}")
            if g.get("summary"):
                s = g["summary"]
                lines.append(f"  summary: 2g-2 >= {s['two_g_minus_2']}, g >= {s['g']} (from {s['source']})")
            else:
                lines.append("  summary: instance not certified hyperbolic; table is non-certifying")
        for n in self.notes:
            lines.append(f"note: {n}")
        return "\n".join(lines) + "\n"


def _domination_status(inst: VarietyInstance, cfg_flag) -> str:
    if inst.chern.section_dominating is None:
        return "unresolved"
    if inst.chern.section_dominating is False:
        return "asserted false"
    if cfg_flag is None:
        return "verified (positive summands on the full product)"
    return "asserted true"


def _instance_for(cfg: RunConfig) -> VarietyInstance:
    ambient = cfg.ambient_space()
    bundle = cfg.bundle_spec()
    purpose = "hyperbolicity" if bundle.k <= ambient.D - 2 else "lines"
    flag = cfg.bundle.section_dominating if isinstance(bundle, SplitBundleSpec) else None
    return build_instance(ambient, bundle, section_dominating=flag, purpose=purpose)


def _base_report(command: str, cfg: RunConfig, inst: VarietyInstance, verdict: Verdict) -> Report:
    thresholds = [
        {"factor": i + 1, "d": inst.d[i], "strict": inst.strict_threshold(i), "lines": inst.lines_threshold(i)}
        for i in range(inst.m)
    ]
    instance = {
        "ambient": inst.ambient.describe(),
        "N": list(inst.ambient.N),
        "D": inst.D,
        "k": inst.k,
        "a": list(inst.a),
        "d": list(inst.d),
        "KX": list(inst.KX),
        "d_alpha": [{"alpha": list(alpha), "coeff": c} for alpha, c in inst.chern.d_alpha],
        "top_class": str(inst.top_class),
    }
    assumptions = {
        "standing": list(STANDING_ASSUMPTIONS),
        "homogeneous": "asserted" if inst.ambient.homogeneous_asserted else "not asserted",
        "section_dominating": _domination_status(inst, cfg.bundle.section_dominating if cfg.bundle else None),
    }
    return Report(command, {"config": render_config(cfg)}, assumptions, instance, thresholds, verdict,
                  notes=list(inst.warnings))


def _certified(inst: VarietyInstance) -> bool:
    return inst.k <= inst.D - 2 and (check_strict(inst) or check_boundary(inst) is not None)


def _summary(inst: VarietyInstance, prof: CurveProfile) -> dict:
    b = min_genus_bound(inst, prof)
    return {"two_g_minus_2": frac_text(b.two_g_minus_2_lb), "g": b.g_lb, "source": b.source}


def run_classify(cfg: RunConfig) -> Report:
    inst = _instance_for(cfg)
    verdict = classify(inst)
    report = _base_report("classify", cfg, inst, verdict)
    if cfg.curve is not None:
        prof = CurveProfile(cfg.curve.e)
        report.genus = {"e": list(prof.e), "degree": prof.degree,
                        "summary": _summary(inst, prof) if _certified(inst) else None}
    return report


def run_genus_bound(cfg: RunConfig) -> Report:
    if cfg.curve is None:
        raise InvalidInputError("genus-bound needs a [curve] section")
    inst = _instance_for(cfg)
    if inst.k > inst.D - 2:
        raise InvalidInputError("genus bounds need k <= D - 2")
    prof = CurveProfile(cfg.curve.e)
    verdict = classify(inst)
    report = _base_report("genus-bound", cfg, inst, verdict)
    table = []
    for s, basic, scroll in genus_bound_table(inst, prof):
        table.append({
            "type": list(s),
            "basic": frac_text(basic.two_g_minus_2_lb),
            "scroll": None if scroll is None else frac_text(scroll.two_g_minus_2_lb),
            "scroll_source": None if scroll is None else scroll.source,
        })
    certified = _certified(inst)
    report.genus = {"e": list(prof.e), "degree": prof.degree, "certified": certified, "table": table,
                    "summary": _summary(inst, prof) if certified else None}
    if certified and verdict.certificate is not None:
        floor = verdict.certificate.eps * prof.degree
        report.notes.append(f"eps * deg_H(C) = {frac_text(floor)}")
    return report


# -- atlas ---------------------------------------------------------------------


def atlas_size(cfg: RunConfig) -> int:
    at = cfg.atlas
    total = 0
    for n in range(at.n[0], at.n[1] + 1):
        cap = at.cap(n)
        for k in range(max(at.k[0], 1), min(at.k[1], n - 2) + 1):
            if cap >= 1:
                total += comb(cap + k - 1, k)
    return total


def atlas_rows(cfg: RunConfig):
    """Yield one row per ``(n, k, sorted degrees)`` in lexicographic order."""
    at = cfg.atlas
    for n in range(at.n[0], at.n[1] + 1):
        cap = at.cap(n)
        ambient = AmbientSpace.projective(n)
        for k in range(max(at.k[0], 1), min(at.k[1], n - 2) + 1):
            for degrees in itertools.combinations_with_replacement(range(1, cap + 1), k):
                inst = build_instance(ambient, SplitBundleSpec.hypersurfaces(*degrees))
                verdict = classify(inst)
                closed = classify_pn_ci(n, degrees)
                agree = verdict.kind == closed.kind and verdict.eps == closed.eps
                known = ""
                if k == 1:
                    status = known_hypersurface_status(n, degrees[0])
                    known = status.value
                    agree = agree and not contradicts_known(verdict, status)
                yield [
                    n, k, ";".join(map(str, degrees)), sum(degrees), verdict.kind.value,
                    verdict.certificate.eps_text if verdict.certificate else "", known,
                    "true" if agree else "false",
                ]


def run_atlas(cfg: RunConfig, row_cap: int = DEFAULT_ROW_CAP) -> str:
    if cfg.atlas is None:
        raise InvalidInputError("atlas needs an [atlas] section")
    size = atlas_size(cfg)
    if size > row_cap:
        raise LimitError(f"atlas grid has {size} rows, above the cap of {row_cap}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(ATLAS_COLUMNS)
    writer.writerows(atlas_rows(cfg))
    return buf.getvalue()


def known_table(n: int) -> list[dict]:
    """Hypersurfaces of degree ``1..3n`` in ``P^n``: literature status beside the verdict."""
    rows = []
    ambient = AmbientSpace.projective(n)
    for d in range(1, 3 * n + 1):
        status = known_hypersurface_status(n, d)
        verdict = classify(build_instance(ambient, SplitBundleSpec.hypersurfaces(d)))
        rows.append({
            "n": n, "d": d, "known_status": status.value, "verdict": verdict.kind.value,
            "epsilon": verdict.certificate.eps_text if verdict.certificate else "",
            "consistent": not contradicts_known(verdict, status),
        })
    return rows


# -- entry point ---------------------------------------------------------------


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=None)
    common.add_argument("--output", default=None, help="write to this file instead of stdout")
    common.add_argument("--row-cap", type=int, default=DEFAULT_ROW_CAP)

    parser = argparse.ArgumentParser(prog="alghyp", description="Algebraic hyperbolicity criteria with certificates.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("classify", "genus-bound", "atlas"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("config", help="path to a configuration file")
    p = sub.add_parser("known-table", parents=[common])
    p.add_argument("--n", type=int, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        if args.command == "known-table":
            rows = known_table(args.n)
            fmt = args.format or "text"
            if fmt == "json":
                text = json.dumps(rows, indent=2) + "\n"
            elif fmt == "csv":
                buf = io.StringIO()
                writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
                writer.writeheader()
                writer.writerows(rows)
                text = buf.getvalue()
            else:
                text = "".join(
                    f"d = {r['d']:>3}  known: {r['known_status']:<19} verdict: {r['verdict']:<14}"
                    f" eps: {r['epsilon'] or '-':<6} consistent: {r['consistent']}\n"
                    for r in rows
                )
            _emit(text, args.output)
            return EXIT_OK

        try:
            source = Path(args.config).read_text(encoding="utf-8")
        except OSError as exc:
            raise InvalidInputError(f"cannot read {args.config}: {exc.strerror}") from None
        cfg = parse_config(source)
        if args.command == "atlas":
            if args.format not in (None, "csv"):
                raise InvalidInputError("atlas output is CSV only")
            _emit(run_atlas(cfg, args.row_cap), args.output)
            return EXIT_OK
        if args.format == "csv":
            raise InvalidInputError("CSV output is reserved for atlas and known-table")
        report = run_classify(cfg) if args.command == "classify" else run_genus_bound(cfg)
        text = json.dumps(report.to_dict(), indent=2) + "\n" if args.format == "json" else report.to_text()
        _emit(text, args.output)
        return EXIT_OK
    except LimitError as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
