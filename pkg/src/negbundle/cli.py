"""Command-line front end.

Every subcommand builds a :class:`Report` (a JSON-ready payload plus table
rows) and one of four writers renders it. Exit codes: 0 on success, 1 when
``verify`` finds a failing check, 2 on usage errors (argparse), 3 on domain
errors such as a non-prime ``p`` or a parity violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from . import geometry
from .bundles import equivariant_decomposition, klingenberg_decomposition, rank_audit
from .chern import (
    chern_nu_closed,
    chern_nu_lines,
    filtration_quotient_poincare,
    total_chern_negative,
)
from .cohomology_rings import presentation_for, ring_case
from .errors import NegBundleError, UnsupportedParameterError
from .graded_algebra import poincare
from .morse_spectrum import (
    FAMILIES,
    VERTICAL,
    critical_energy,
    eigenvalue,
    enumerate_spectrum,
    index_and_nullity,
)

FORMATS = ("text", "csv", "json", "latex")


def fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _json_float(x: float) -> float:
    return float(fmt_float(x))


@dataclass
class Report:
    payload: dict
    columns: list[str] = field(default_factory=list)
    rows: list[list] = field(default_factory=list)
    text: list[str] = field(default_factory=list)
    latex: list[str] = field(default_factory=list)
    ok: bool = True
    table_in_text: bool = True


def _cell(v) -> str:
    if isinstance(v, float):
        return fmt_float(v)
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    return str(v)


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(report.columns)
        for row in report.rows:
            w.writerow([_cell(v) for v in row])
        return buf.getvalue()
    if fmt == "latex":
        if report.latex:
            return "\n".join(report.latex) + "\n"
        spec = "l" * len(report.columns)
        lines = [rf"\begin{{tabular}}{{{spec}}}", " & ".join(report.columns) + r" \\", r"\hline"]
        lines += [" & ".join(_cell(v) for v in row) + r" \\" for row in report.rows]
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"
    lines = list(report.text)
    if report.rows and report.table_in_text:
        table = [report.columns] + [[_cell(v) for v in row] for row in report.rows]
        widths = [max(len(r[i]) for r in table) for i in range(len(report.columns))]
        lines = [
            "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in table
        ] + lines
    return "\n".join(lines) + "\n"


# -- subcommands ---------------------------------------------------------------

def cmd_spectrum(a) -> Report:
    cutoff = a.cutoff if a.cutoff is not None else a.q + 2
    entries = enumerate_spectrum(a.alpha, a.n, a.q, cutoff)
    idx = index_and_nullity(a.alpha, a.n, a.q)
    rows = [[e.family, e.k, str(e.eigenvalue), e.eigenvalue.value, e.real_dimension, e.sign] for e in entries]
    payload = {
        "alpha": a.alpha,
        "n": a.n,
        "q": a.q,
        "cutoff": cutoff,
        "entries": [{**e.as_dict(), "eigenvalue": _json_float(e.eigenvalue.value)} for e in entries],
        "index": idx.index,
        "nullity": idx.nullity,
    }
    return Report(
        payload,
        ["family", "k", "eigenvalue_exact", "eigenvalue", "dim", "sign"],
        rows,
        text=[f"index {idx.index}, nullity {idx.nullity}"],
    )


def cmd_index(a) -> Report:
    idx = index_and_nullity(a.alpha, a.n, a.q)
    return Report(
        {"alpha": a.alpha, "n": a.n, "q": a.q, "index": idx.index, "nullity": idx.nullity},
        ["alpha", "n", "q", "index", "nullity"],
        [[a.alpha, a.n, a.q, idx.index, idx.nullity]],
        text=[f"index {idx.index}, nullity {idx.nullity}"],
        latex=[rf"\operatorname{{index}} = {idx.index}, \quad \operatorname{{nullity}} = {idx.nullity}"],
        table_in_text=False,
    )


def cmd_bundle(a) -> Report:
    if a.equivariant:
        if a.alpha != 2:
            raise UnsupportedParameterError("the equivariant decomposition exists only for alpha = 2")
        d = equivariant_decomposition(a.n, a.q)
    else:
        d = klingenberg_decomposition(a.alpha, a.n, a.q)
    audit = rank_audit(d)
    rows = [[s.kind, list(s.params), s.real_rank, "" if s.weights is None else s.weights] for s in d.summands]
    payload = {**d.as_dict(), "real_rank": d.real_rank, "index": audit.expected}
    return Report(
        payload,
        ["kind", "params", "rank", "weights"],
        rows,
        text=[f"base {d.base}", f"total rank {d.real_rank} = index {audit.expected}"],
    )


def cmd_ring(a) -> Report:
    case = ring_case(a.n, a.p, a.q)
    R = presentation_for(case, a.degree_cap)
    series = poincare(R)
    basis = [{g: e for g, e in zip(R.names, m) if e} for m in R.basis]
    payload = {
        "case": case.tag,
        "ring": R.name,
        "generators": [{"name": g, "degree": d} for g, d in R.generators],
        "relations": list(R.relation_labels),
        "degree_cap": R.degree_cap,
        "rank": len(basis),
        "poincare": series,
        "basis": basis,
    }
    rows = [[d, r] for d, r in enumerate(series)]
    text = [f"case {case.tag}", f"ring {R.name}", f"rank {len(basis)}"]
    if R.degree_cap is not None:
        text.append(f"truncated at degree {R.degree_cap}")
    return Report(payload, ["degree", "rank"], rows, text=text)


def cmd_chern(a) -> Report:
    case = ring_case(a.n, a.p, a.q)
    if a.r is None:
        res = total_chern_negative(a.n, a.q, case, literal=a.literal_thm79, cap=a.degree_cap)
    else:
        route = chern_nu_lines if a.route == "lines" else chern_nu_closed
        res = route(a.r, a.q, a.n, case, conjugate=a.conjugate, cap=a.degree_cap)
    comps = res.per_degree
    rows = [[d, d // 2, str(e)] for d, e in comps.items()]
    text = [f"{res.label} over {res.total.ring.name} ({case.tag})"]
    text += [f"c_{d // 2} = {e}" for d, e in comps.items()]
    return Report(res.as_dict(), ["degree", "k", "c_k"], rows, text=text, latex=res.latex_lines())


def cmd_thom(a) -> Report:
    case = ring_case(a.n, a.p, a.q)
    series = filtration_quotient_poincare(a.n, a.q, case, a.degree_cap)
    shift = index_and_nullity(2, a.n, a.q).index
    payload = {"n": a.n, "p": a.p, "q": a.q, "case": case.tag, "shift": shift, "poincare": series}
    rows = [[d, r] for d, r in enumerate(series) if r]
    return Report(payload, ["degree", "rank"], rows, text=[f"Thom shift {shift} ({case.tag})"])


def cmd_verify(a) -> Report:
    conv = geometry.MetricConvention.named(a.kappa_convention, a.energy_convention)
    rng = np.random.default_rng(a.seed)
    rows, checks = [], []

    def record(name, value, tol):
        ok = bool(value < tol)
        rows.append([name, value, tol, "pass" if ok else "FAIL"])
        checks.append({"check": name, "error": _json_float(value), "tol": tol, "pass": ok})

    for q in range(1, a.max_q + 1):
        frame = geometry.random_frame(a.n, rng)
        w = geometry.random_normal_vector(frame, rng)
        record(f"holonomy q={q}", geometry.holonomy_defect(frame, q, w).max, 1e-10)
        e = geometry.energy(frame, q, conv, a.steps)
        record(f"energy integral q={q}", abs(e.integral - 2 * q * q), 1e-9)
        expected = critical_energy(q) if conv.energy_convention == geometry.FULL_INTEGRAL else q * q
        record(f"energy E q={q}", abs(e.value - float(expected)), 1e-9)
        for family in FAMILIES:
            for k in range(q + 3):
                if family == VERTICAL and (k - q) % 2:
                    continue
                val = geometry.rayleigh(family, k, q, a.n, conv, a.steps, a.seed)
                record(f"rayleigh {family} k={k} q={q}", abs(val - eigenvalue(family, k, q).value), 1e-8)
    ok = all(c["pass"] for c in checks)
    payload = {
        "n": a.n,
        "seed": a.seed,
        "steps": a.steps,
        "kappa": _json_float(conv.kappa),
        "energy_convention": conv.energy_convention,
        "checks": checks,
        "pass": ok,
    }
    summary = f"{sum(c['pass'] for c in checks)}/{len(checks)} checks passed"
    return Report(payload, ["check", "error", "tol", "status"], rows, text=[summary], ok=ok)


COMMANDS = {
    "spectrum": cmd_spectrum,
    "index": cmd_index,
    "bundle": cmd_bundle,
    "ring": cmd_ring,
    "chern": cmd_chern,
    "thom": cmd_thom,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negbundle",
        description="Morse spectra, negative bundles and equivariant Chern classes of closed geodesics on P^n(alpha).",
        epilog="NEGBUNDLE_DEGREE_CAP overrides the default degree cap 4n+6 of the Borel rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, default=2, help="projective dimension (default 2)")
    common.add_argument("-q", type=int, default=1, help="covering multiplicity of the geodesic (default 1)")
    common.add_argument("--format", choices=FORMATS, default="text")

    space = argparse.ArgumentParser(add_help=False)
    space.add_argument("--alpha", type=int, default=2, choices=(2, 4, 8), help="real dimension of the scalars")

    coeff = argparse.ArgumentParser(add_help=False)
    coeff.add_argument("-p", type=int, default=None, help="prime coefficient field (omit for rationals)")
    coeff.add_argument("--degree-cap", type=int, default=None, help="total-degree cap for Borel rings")

    s = sub.add_parser("spectrum", parents=[common, space], help="Hessian eigenvalues and eigenspace dimensions")
    s.add_argument("--cutoff", type=int, default=None, help="largest k listed (default q+2)")
    sub.add_parser("index", parents=[common, space], help="Morse index and nullity")
    s = sub.add_parser("bundle", parents=[common, space], help="negative-bundle summands")
    s.add_argument("--equivariant", action="store_true", help="T-equivariant splitting over PW_{2,q} (alpha=2)")
    sub.add_parser("ring", parents=[common, coeff], help="equivariant cohomology ring presentation")
    s = sub.add_parser("chern", parents=[common, coeff], help="total Chern class of the negative bundle")
    s.add_argument("-r", type=int, default=None, help="single summand nu_{r,q} instead of the whole bundle")
    s.add_argument("--conjugate", action="store_true", help="use the conjugate summand nu_bar_{r,q}")
    s.add_argument("--route", choices=("closed", "lines"), default="closed")
    s.add_argument(
        "--literal-thm79",
        action="store_true",
        help="drop the unpaired r=0 factor for even q (the product over 0<r<q only)",
    )
    sub.add_parser("thom", parents=[common, coeff], help="Poincare series of the Thom space")
    s = sub.add_parser("verify", parents=[common], help="run the numeric geometry checks")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--steps", type=int, default=4096)
    s.add_argument("--max-q", type=int, default=3)
    s.add_argument("--kappa-convention", choices=(geometry.CURVATURE, geometry.LITERAL), default=geometry.CURVATURE)
    s.add_argument(
        "--energy-convention",
        choices=(geometry.HALF_INTEGRAL, geometry.FULL_INTEGRAL),
        default=geometry.HALF_INTEGRAL,
    )
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = COMMANDS[args.command](args)
    except (NegBundleError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 3
    out.write(render(report, args.format))
    return 0 if report.ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
