"""Command-line front end.

Subcommands: ``discretize`` (lattice form of an operator), ``stencil``
(its support and coefficients), ``spectrum`` (exact matrix, characteristic
polynomial, eigenpairs), ``family`` (tables of lattice counterparts of the
classical families) and ``verify`` (the machine-checkable identity suites).

All rationals cross this boundary as reduced ``p/q`` strings; there is no
floating point anywhere in the I/O.  Exit codes: 0 success, 1 verification
failure, 2 usage error, 3 mathematical domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import verify as verify_mod
from .errors import (
    BasisMismatchError,
    DegenerateSpectrumError,
    IsospecError,
    ParameterError,
    StepMismatchError,
    SubspaceOverflowError,
)
from .operators import (
    QesQuadraticForm,
    SecondOrderParams,
    ThreePointParams,
    classical_preset,
    discrete_preset,
    eigenvalue_convention_note,
    qes_quadratic_element,
    qes_three_point_operator,
    second_order_element,
    three_point_operator,
)
from .polynomials import MONOMIAL, quasi_basis
from .rationals import format_fraction, parse_fraction
from .representations import ShiftOperator, realize_lattice
from .spectral import (
    continuum_matrix,
    discrete_family,
    lattice_matrix,
    spectral_report,
    stencil_extract,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

_CLASSICAL = ("hermite", "laguerre", "legendre", "jacobi")


class UsageError(Exception):
    pass


def _parse_fraction_arg(text: str, what: str) -> Fraction:
    try:
        return parse_fraction(text)
    except ValueError as exc:
        raise UsageError(f"{what}: {exc}") from exc


def _parse_params(text: str, count: int, what: str) -> list[Fraction]:
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != count:
        raise UsageError(f"{what} needs {count} comma-separated rationals, got {len(parts)}")
    return [_parse_fraction_arg(p, what) for p in parts]


def _classical_kwargs(args) -> dict:
    out = {}
    if args.alpha is not None:
        out["alpha"] = _parse_fraction_arg(args.alpha, "--alpha")
    if args.beta is not None:
        out["beta"] = _parse_fraction_arg(args.beta, "--beta")
    return out


def _discrete_kwargs(args) -> dict:
    out = {}
    if args.alpha is not None:
        out["alpha"] = _parse_fraction_arg(args.alpha, "--alpha")
    if args.beta is not None:
        out["beta"] = _parse_fraction_arg(args.beta, "--beta")
    if args.gamma is not None:
        out["gamma"] = _parse_fraction_arg(args.gamma, "--gamma")
    if args.mu is not None:
        out["mu"] = _parse_fraction_arg(args.mu, "--mu")
    if args.nu is not None:
        out["nu"] = _parse_fraction_arg(args.nu, "--nu")
    if args.size is not None:
        out["size"] = args.size
    return out


def _resolve_operator(args):
    """Build the requested operator.

    Returns (element, shift_op, step, name, notes): abstract elements carry
    ``shift_op=None`` until a step is known; lattice-native families come
    back realized with their own step.
    """
    op = args.op.strip().lower().replace("_", "-")
    step = None
    if getattr(args, "delta", None) is not None:
        step = _parse_fraction_arg(args.delta, "--delta")
        if step == 0:
            raise UsageError("--delta must be nonzero")
    notes = []

    if op in _CLASSICAL:
        element = second_order_element(classical_preset(op, **_classical_kwargs(args)))
        note = eigenvalue_convention_note(op)
        if note:
            notes.append(note)
        return element, None, step, op, notes

    if op == "e2":
        if not args.params:
            raise UsageError("--op e2 needs --params a0,a1,a2,b0,b1,c0")
        vals = _parse_params(args.params, 6, "--params")
        element = second_order_element(SecondOrderParams(*vals))
        return element, None, step, op, notes

    if op == "three-point":
        if args.preset:
            params = discrete_preset(args.preset, **_discrete_kwargs(args))
            if step is not None and step != params.step:
                raise UsageError(
                    f"--delta {format_fraction(step)} conflicts with the "
                    f"{args.preset} preset step {format_fraction(params.step)}"
                )
        else:
            if not args.params:
                raise UsageError(
                    "--op three-point needs --preset or --params A1,A2,A3,A4,A5 with --delta"
                )
            if step is None:
                raise UsageError("--op three-point with --params needs --delta")
            vals = _parse_params(args.params, 5, "--params")
            params = ThreePointParams(*vals, step=step)
        return None, three_point_operator(params), params.step, op, notes

    if op == "qes2":
        if args.spin is None or not args.params:
            raise UsageError(
                "--op qes2 needs --spin and --params with the ten quadratic-form "
                "coefficients (plus-plus, plus-zero, plus-minus, zero-zero, "
                "zero-minus, minus-minus, plus, zero, minus, const)"
            )
        vals = _parse_params(args.params, 10, "--params")
        element = qes_quadratic_element(QesQuadraticForm(args.spin, *vals))
        return element, None, step, op, notes

    if op == "qes3":
        if args.spin is None or not args.params or args.aplus is None:
            raise UsageError("--op qes3 needs --spin, --aplus and --params A1,A2,A3,A4,A5")
        if step is None:
            raise UsageError("--op qes3 needs --delta")
        vals = _parse_params(args.params, 5, "--params")
        aplus = _parse_fraction_arg(args.aplus, "--aplus")
        shift_op = qes_three_point_operator(aplus, ThreePointParams(*vals, step=step), args.spin)
        return None, shift_op, step, op, notes

    raise UsageError(
        f"unknown operator {args.op!r}; choose from "
        f"{list(_CLASSICAL) + ['e2', 'three-point', 'qes2', 'qes3']}"
    )


def _need_shift_operator(args) -> tuple[ShiftOperator, str, list[str]]:
    element, shift_op, step, name, notes = _resolve_operator(args)
    if shift_op is None:
        if step is None:
            raise UsageError(f"--op {name} needs --delta to be discretized")
        shift_op = realize_lattice(element, step)
    return shift_op, name, notes


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, output: str | None):
    _emit(json.dumps(obj, indent=2) + "\n", output)


def _shift_operator_text(op: ShiftOperator, name: str) -> str:
    shifts, coeffs = stencil_extract(op)
    lines = [
        f"operator: {name}",
        f"delta: {format_fraction(op.step)}",
        f"points: {len(shifts)} (width {op.width}): "
        + ", ".join(f"{k:+d}" for k in shifts),
    ]
    for k, poly in zip(reversed(shifts), reversed(coeffs)):
        lines.append(f"  T^{{{k:+d}}}: {poly}")
    return "\n".join(lines) + "\n"


def _cmd_discretize(args) -> int:
    shift_op, name, _ = _need_shift_operator(args)
    if args.format == "text":
        _emit(_shift_operator_text(shift_op, name), args.output)
    else:
        obj = shift_op.to_json_obj()
        obj["points"] = list(shift_op.shifts)
        _emit_json(obj, args.output)
    return EXIT_OK


def _cmd_stencil(args) -> int:
    shift_op, name, _ = _need_shift_operator(args)
    shifts, coeffs = stencil_extract(shift_op)
    if args.format == "text":
        _emit(_shift_operator_text(shift_op, name), args.output)
        return EXIT_OK
    obj = {
        "delta": format_fraction(shift_op.step),
        "points": list(shifts),
        "n_points": len(shifts),
        "width": shift_op.width,
        "coefficients": [
            {"shift": k, "coeffs": [format_fraction(c) for c in poly.coeffs]}
            for k, poly in zip(shifts, coeffs)
        ],
    }
    _emit_json(obj, args.output)
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    element, shift_op, step, name, notes = _resolve_operator(args)
    degree = args.degree
    if degree is None or degree < 0:
        raise UsageError("--degree must be a non-negative integer")
    if element is not None and step is None:
        matrix = continuum_matrix(element, degree)
        representation = "continuum"
    else:
        if shift_op is None:
            shift_op = realize_lattice(element, step)
        if args.basis == "monomial":
            basis = MONOMIAL
        elif args.basis == "quasi":
            basis = quasi_basis(shift_op.step)
        elif element is not None:
            # realized from an abstract element: the isospectral ladder view
            basis = quasi_basis(shift_op.step)
        else:
            # lattice-native family: its own variable
            basis = MONOMIAL
        matrix = lattice_matrix(shift_op, degree, basis=basis)
        representation = "lattice"
    report = spectral_report(matrix, notes=tuple(notes))
    obj = {"operator": name, "representation": representation, "degree": degree}
    obj.update(report.to_json_obj())
    if args.format == "text":
        lines = [
            f"operator: {name} ({representation}, degree bound {degree})",
            f"diagonal: {', '.join(format_fraction(d) for d in matrix.diagonal)}",
            f"char poly coeffs (low to high): "
            + ", ".join(format_fraction(c) for c in report.char_poly.coeffs),
            f"triangular: {report.triangular}",
        ]
        if report.eigenpairs is not None:
            for lam, vec in report.eigenpairs:
                lines.append(f"  lambda = {format_fraction(lam)}: {vec}")
        if report.warning:
            lines.append(f"warning: {report.warning}")
        for note in report.notes:
            lines.append(f"note: {note}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit_json(obj, args.output)
    return EXIT_OK


def _cmd_family(args) -> int:
    step = _parse_fraction_arg(args.delta, "--delta")
    kwargs = _classical_kwargs(args)
    table = discrete_family(args.name, step, args.kmax, **kwargs)
    if args.format == "json":
        _emit_json(table.to_json_obj(), args.output)
        return EXIT_OK
    k_max = args.kmax
    header = (
        ["k", "eigenvalue", "verified"]
        + [f"m{i}" for i in range(k_max + 1)]
        + [f"q{i}" for i in range(k_max + 1)]
    )
    lines = [",".join(header)]
    for entry in table.entries:
        row = [str(entry.degree), format_fraction(entry.eigenvalue),
               "true" if entry.verified else "false"]
        row += [format_fraction(entry.monomial.coefficient(i)) for i in range(k_max + 1)]
        row += [format_fraction(entry.quasi.coefficient(i)) for i in range(k_max + 1)]
        lines.append(",".join(row))
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    seed = args.seed
    if seed is None:
        env = os.environ.get("ISOSPEC_SEED")
        if env is not None:
            try:
                seed = int(env)
            except ValueError as exc:
                raise UsageError(f"ISOSPEC_SEED must be an integer, got {env!r}") from exc
        else:
            seed = verify_mod.DEFAULT_SEED
    summary = verify_mod.run(args.suite, seed=seed, trials=args.trials)
    _emit_json(summary, args.output)
    return EXIT_OK if summary["ok"] else EXIT_VERIFY_FAILED


def _add_operator_args(parser: argparse.ArgumentParser):
    parser.add_argument("--op", required=True,
                        help="hermite | laguerre | legendre | jacobi | e2 | "
                             "three-point | qes2 | qes3")
    parser.add_argument("--params", help="comma-separated rational coefficients")
    parser.add_argument("--preset",
                        help="three-point preset: hahn | hahn-continued | meixner | charlier")
    parser.add_argument("--alpha", help="family parameter alpha (rational)")
    parser.add_argument("--beta", help="family parameter beta (rational)")
    parser.add_argument("--gamma", help="family parameter gamma (rational)")
    parser.add_argument("--mu", help="family parameter mu (rational)")
    parser.add_argument("--nu", help="family parameter nu (rational)")
    parser.add_argument("--size", type=int, help="grid size for the finite families")
    parser.add_argument("--spin", type=int, help="representation spin for qes2/qes3")
    parser.add_argument("--aplus", help="raising coefficient for qes3 (rational)")
    parser.add_argument("--delta", help="lattice step as a rational (e.g. 1/2)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isospec",
        description="Exact lattice discretization of solvable operators, with "
                    "spectral certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_disc = sub.add_parser("discretize", help="lattice form of an operator")
    _add_operator_args(p_disc)
    p_disc.add_argument("--format", choices=("json", "text"), default="json")
    p_disc.add_argument("--output", help="write to this path instead of stdout")
    p_disc.set_defaults(func=_cmd_discretize)

    p_sten = sub.add_parser("stencil", help="stencil points and coefficients")
    _add_operator_args(p_sten)
    p_sten.add_argument("--format", choices=("json", "text"), default="json")
    p_sten.add_argument("--output")
    p_sten.set_defaults(func=_cmd_stencil)

    p_spec = sub.add_parser("spectrum", help="matrix, characteristic polynomial, eigenpairs")
    _add_operator_args(p_spec)
    p_spec.add_argument("--degree", type=int, required=True, help="degree bound")
    p_spec.add_argument("--basis", choices=("monomial", "quasi"), default=None,
                        help="matrix basis for lattice spectra")
    p_spec.add_argument("--format", choices=("json", "text"), default="json")
    p_spec.add_argument("--output")
    p_spec.set_defaults(func=_cmd_spectrum)

    p_fam = sub.add_parser("family", help="table of lattice counterparts of a classical family")
    p_fam.add_argument("--name", required=True,
                       help="discrete-hermite | discrete-laguerre | discrete-legendre | discrete-jacobi")
    p_fam.add_argument("--delta", required=True, help="lattice step (rational)")
    p_fam.add_argument("--kmax", type=int, required=True, help="highest degree")
    p_fam.add_argument("--alpha", help="family parameter alpha (rational)")
    p_fam.add_argument("--beta", help="family parameter beta (rational)")
    p_fam.add_argument("--format", choices=("csv", "json"), default="csv")
    p_fam.add_argument("--output")
    p_fam.set_defaults(func=_cmd_family)

    p_ver = sub.add_parser("verify", help="run the verification suites")
    p_ver.add_argument("--suite", default="all",
                       help="all | " + " | ".join(verify_mod.SUITE_NAMES))
    p_ver.add_argument("--seed", type=int, default=None,
                       help="random seed (flag beats ISOSPEC_SEED beats the default "
                            f"{verify_mod.DEFAULT_SEED})")
    p_ver.add_argument("--trials", type=int, default=None,
                       help="override the per-suite trial counts")
    p_ver.add_argument("--output")
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"isospec: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParameterError as exc:
        print(f"isospec: parameter error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SubspaceOverflowError, DegenerateSpectrumError, StepMismatchError,
            BasisMismatchError) as exc:
        print(f"isospec: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except IsospecError as exc:
        print(f"isospec: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"isospec: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
