"""Command-line interface.

Subcommands: spectral, incidence, join, meet, action-smolin, action-e6,
lightcone, random, verify.  Inputs are JSON documents (path or "-" for
stdin) in the formats of jordanmm.documents; the structured report goes to
stdout or --out, a one-line summary to stderr.  Exit codes: 0 success,
1 validation failure, 2 verify-suite failure.

Reports are deterministic: all randomness flows from --seed (default 1729,
PCG64), and repeated runs emit byte-identical documents.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .documents import (
    canonical_json,
    gauge_algebra_from_dict,
    line_from_dict,
    load_json,
    parse_element,
    point_from_dict,
)
from .errors import JordanmmError, ValidationError
from .jordan_core import HermitianElement, freudenthal_product
from .matrix_model import GaugeAlgebra, ohwashi_action_value, smolin_action
from .projective import (
    INCIDENCE_CONVENTIONS,
    incidence_residual,
    is_lightlike,
    join as join_points,
    meet as meet_lines,
)
from .sampling import DEFAULT_SEED, random_element
from .spectral import spectral_decompose
from .verify import list_suites, run_suites


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jordanmm",
        description="Jordan-algebra computations for octonionic matrix models")
    parser.add_argument("--version", action="version", version="%(prog)s 0.1.0")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, tolerance=None):
        p.add_argument("--out", help="write the JSON report here instead of stdout")
        if tolerance is not None:
            p.add_argument("--tolerance", type=float, default=tolerance,
                           help=f"residual tolerance (default {tolerance:g})")

    p = sub.add_parser("spectral", help="eigenvalues and projections of a 3x3 element")
    p.add_argument("element", help="element JSON (path or '-')")
    common(p, tolerance=1e-9)

    p = sub.add_parser("incidence", help="test whether a point lies on a line")
    p.add_argument("point", help="point JSON (path or '-')")
    p.add_argument("line", help="line JSON (path)")
    p.add_argument("--incidence", choices=INCIDENCE_CONVENTIONS, default="containment",
                   help="which incidence predicate to evaluate")
    common(p, tolerance=1e-8)

    p = sub.add_parser("join", help="line through two points")
    p.add_argument("point1")
    p.add_argument("point2")
    common(p)

    p = sub.add_parser("meet", help="point on two lines")
    p.add_argument("line1")
    p.add_argument("line2")
    common(p)

    p = sub.add_parser("action-smolin", help="cubic action of an h3(O) configuration")
    p.add_argument("config", help="configuration JSON (path or '-')")
    p.add_argument("--algebra", help="gauge algebra JSON (default: dim-3 Levi-Civita)")
    common(p)

    p = sub.add_parser("action-e6", help="cubic-form action of an h3(CO) configuration")
    p.add_argument("config")
    p.add_argument("--algebra")
    p.add_argument("--paper-strict", action="store_true",
                   help="require real diagonals and a real action value")
    common(p, tolerance=1e-9)

    p = sub.add_parser("lightcone", help="test whether an element is lightlike")
    p.add_argument("element")
    common(p, tolerance=1e-8)

    p = sub.add_parser("random", help="generate a seeded random element")
    p.add_argument("--kind", default="hermitian",
                   choices=["hermitian", "point", "config", "spin"])
    p.add_argument("--ground", default="O")
    p.add_argument("--n", type=int, default=3, help="matrix size (spin: space dimension)")
    p.add_argument("--dim", type=int, default=3, help="gauge dimension for --kind config")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--paper-strict", action="store_true")
    common(p)

    p = sub.add_parser("verify", help="run the property-verification suites")
    p.add_argument("--suite", action="append", default=None,
                   help="suite name (repeatable; default all)")
    p.add_argument("--list", action="store_true", help="list available suites and exit")
    p.add_argument("--trials", type=int, default=None,
                   help="override per-check trial counts")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--paper-strict", action="store_true")
    common(p)
    return parser


def _read_document(path: str):
    if path == "-":
        return load_json(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return load_json(fh.read())
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc


def _load_algebra(path: str | None) -> GaugeAlgebra:
    if path is None:
        return GaugeAlgebra.su2()
    return gauge_algebra_from_dict(_read_document(path))


def _element_from(path: str, *, strict: bool = False) -> HermitianElement:
    doc = _read_document(path)
    value = parse_element(doc, strict=strict)
    if isinstance(value, HermitianElement):
        return value
    if hasattr(value, "element"):
        return value.element
    raise ValidationError("expected a Hermitian element document")


def run_command(args) -> dict:
    cmd = args.command

    if cmd == "spectral":
        x = _element_from(args.element)
        frame = spectral_decompose(x, tol=args.tolerance)
        recon = frame.reconstruct()
        return {
            "command": "spectral",
            **frame.to_dict(),
            "residuals": {
                "reconstruction": float(np.max(np.abs(recon.data - x.data))),
            },
        }

    if cmd == "incidence":
        point = point_from_dict(_read_document(args.point))
        line = line_from_dict(_read_document(args.line))
        residual = incidence_residual(point, line, args.incidence)
        return {
            "command": "incidence",
            "convention": args.incidence,
            "incident": bool(residual <= args.tolerance),
            "residual": float(residual),
        }

    if cmd == "join":
        p = point_from_dict(_read_document(args.point1))
        q = point_from_dict(_read_document(args.point2))
        line = join_points(p, q)
        # the line document itself, so it feeds into incidence/meet directly
        return {
            **line.to_dict(),
            "command": "join",
            "residuals": {
                "first": incidence_residual(p, line),
                "second": incidence_residual(q, line),
            },
        }

    if cmd == "meet":
        l1 = line_from_dict(_read_document(args.line1))
        l2 = line_from_dict(_read_document(args.line2))
        point = meet_lines(l1, l2)
        return {
            **point.to_dict(),
            "command": "meet",
            "residuals": {
                "first": incidence_residual(point, l1),
                "second": incidence_residual(point, l2),
            },
        }

    if cmd == "action-smolin":
        from .documents import configuration_from_dict

        cfg = configuration_from_dict(_read_document(args.config))
        algebra = _load_algebra(args.algebra)
        value = smolin_action(cfg, algebra)
        return {
            "command": "action-smolin",
            "coupling": cfg.coupling,
            "dim": cfg.dim,
            "action": float(value),
        }

    if cmd == "action-e6":
        from .documents import configuration_from_dict

        cfg = configuration_from_dict(_read_document(args.config), strict=args.paper_strict)
        algebra = _load_algebra(args.algebra)
        value = ohwashi_action_value(cfg, algebra)
        if args.paper_strict and abs(value.imag) > args.tolerance * max(1.0, abs(value)):
            raise ValidationError(
                f"action has imaginary residue {abs(value.imag):.3e} beyond strict tolerance")
        return {
            "command": "action-e6",
            "dim": cfg.dim,
            "action": float(value.real),
            "imaginary_residual": float(abs(value.imag)),
        }

    if cmd == "lightcone":
        x = _element_from(args.element)
        lightlike = is_lightlike(x, args.tolerance)
        if x.n == 3:
            residual = freudenthal_product(x, x).max_norm()
        else:
            from .projective import h2_determinant

            residual = abs(h2_determinant(x))
        return {
            "command": "lightcone",
            "n": x.n,
            "lightlike": bool(lightlike),
            "residual": float(residual),
            "scale": float(x.max_norm()),
        }

    if cmd == "random":
        # emits the bare document(s) so the output feeds straight back into
        # the other subcommands
        elements = []
        for index in range(args.count):
            value = random_element(args.kind, args.ground, args.seed + index,
                                   n=args.n, dim=args.dim, strict=args.paper_strict)
            if hasattr(value, "to_dict"):
                elements.append(value.to_dict())
            else:  # spin factor
                elements.append({"v": [float(v) for v in value.v], "alpha": value.alpha})
        return elements[0] if args.count == 1 else elements

    if cmd == "verify":
        if args.list:
            return {"command": "verify-list", "suites": list_suites()}
        return run_suites(args.suite, trials=args.trials, seed=args.seed,
                          paper_strict=args.paper_strict)

    raise ValidationError(f"unknown command {cmd!r}")


def _summary(report, args) -> str:
    if args.command == "random":
        return f"generated {args.kind} (ground {args.ground}, seed {args.seed})"
    cmd = report.get("command")
    if cmd == "spectral":
        return f"eigenvalues: {report['eigenvalues']}"
    if cmd == "incidence":
        return f"incident: {report['incident']} (residual {report['residual']:.3e})"
    if cmd in ("join", "meet"):
        return f"{cmd} computed; incidence residuals {report['residuals']}"
    if cmd in ("action-smolin", "action-e6"):
        return f"action = {report['action']!r}"
    if cmd == "lightcone":
        return f"lightlike: {report['lightlike']} (residual {report['residual']:.3e})"
    if cmd == "verify":
        total = sum(len(s["checks"]) for s in report["suites"])
        fails = sum(c["failures"] > 0 for s in report["suites"] for c in s["checks"])
        status = "PASS" if report["passed"] else "FAIL"
        return f"verify: {status} ({total} checks, {fails} failing, backend {report['backend']})"
    if cmd == "verify-list":
        return "suites: " + ", ".join(report["suites"])
    return cmd or ""


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run_command(args)
    except JordanmmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = canonical_json(report)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(_summary(report, args), file=sys.stderr)
    if args.command == "verify" and not args.list and not report["passed"]:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
