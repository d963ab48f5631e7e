"""Command-line front end: one subcommand per analysis, JSON in and out.

Exit codes: 0 success, 1 negative mathematical verdict (with a witness in the
report), 2 malformed input or usage error (with a machine-readable error
object).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import division, ideals, marked, scheme, serialize
from .errors import (
    DegreeCapExceeded,
    InvolutiveError,
    MissingAssignment,
    NotQuasiStable,
)
from .serialize import InputFormatError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def _load(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from exc


def _cmd_mult_vars(data, opts):
    M = serialize.parse_termset(data)
    janet = division.DivisionAssignment.janet(M)
    pommaret = division.DivisionAssignment.pommaret(M)
    report = {
        "vars": M.n,
        "janet": serialize.assignment_json(janet),
        "pommaret": serialize.assignment_json(pommaret),
    }
    return report, EXIT_OK


def _cmd_complete_check(data, opts):
    M = serialize.parse_termset(data)
    ok, witness = division.is_complete(M)
    report = {"complete": ok, "witness": serialize.witness_json(witness)}
    return report, EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_stably_complete_check(data, opts):
    M = serialize.parse_termset(data)
    ok, witness = division.is_stably_complete(M)
    report = {"stably_complete": ok, "witness": serialize.witness_json(witness)}
    return report, EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_complete(data, opts):
    M = serialize.parse_termset(data)
    completed = division.janet_complete(M, opts.degree_bound)
    report = serialize.termset_json(completed)
    report["added"] = [serialize.term_json(t) for t in completed if t not in M]
    return report, EXIT_OK


def _cmd_star_set(data, opts):
    J = serialize.parse_ideal(data)
    terms, exhaustive = ideals.star_set(J, opts.degree_bound)
    report = serialize.termset_json(terms)
    report["exhaustive"] = exhaustive
    return report, EXIT_OK


def _witness_field(w):
    if w is None:
        return None
    out = {"generator": serialize.term_json(w.generator), "variable": w.variable}
    if w.divisor_variable is not None:
        out["divisor_variable"] = w.divisor_variable
    return out


def _cmd_classify(data, opts):
    J = serialize.parse_ideal(data)
    report = ideals.classify(J)
    out = {
        "strongly_stable": report.strongly_stable,
        "stable": report.stable,
        "quasi_stable": report.quasi_stable,
        "witnesses": {
            "strongly_stable": _witness_field(report.strongly_stable_witness),
            "stable": _witness_field(report.stable_witness),
            "quasi_stable": _witness_field(report.quasi_stable_witness),
        },
    }
    return out, EXIT_OK


def _cmd_pommaret(data, opts):
    J = serialize.parse_ideal(data)
    try:
        basis = ideals.pommaret_basis(J)
    except NotQuasiStable as exc:
        report = {
            "error": "not-quasi-stable",
            "witness": serialize.witness_json(exc.witness),
        }
        return report, EXIT_NEGATIVE
    report = serialize.termset_json(basis)
    report["regularity"] = basis.max_degree()
    return report, EXIT_OK


def _cmd_hilbert(data, opts):
    M = serialize.parse_termset(data)
    value = ideals.hilbert_function(M, opts.degree_bound)
    return {"degree": opts.degree_bound, "value": value}, EXIT_OK


def _cmd_sigma(data, opts):
    J = serialize.parse_ideal(data)
    profile = ideals.sigma_profile(J, opts.degree_bound, opts.sigma_mode)
    report = {
        "degree": profile.degree,
        "mode": profile.mode,
        "counts": list(profile.counts),
    }
    return report, EXIT_OK


def _cmd_involutive_test(data, opts):
    J = serialize.parse_ideal(data)
    p = opts.degree_bound
    sp = ideals.sigma_profile(J, p, opts.sigma_mode)
    sp1 = ideals.sigma_profile(J, p + 1, opts.sigma_mode)
    lhs = sum(sp1.counts)
    rhs = sum(i * c for i, c in enumerate(sp.counts, start=1))
    holds = lhs == rhs
    report = {
        "degree": p,
        "mode": opts.sigma_mode,
        "holds": holds,
        "next_degree_total": lhs,
        "weighted_total": rhs,
    }
    return report, EXIT_OK if holds else EXIT_NEGATIVE


def _cmd_reduce(data, opts):
    if not isinstance(data, dict) or "marked_set" not in data or "polynomial" not in data:
        raise InputFormatError('reduce input needs "marked_set" and "polynomial"')
    G = serialize.parse_marked_set(data["marked_set"])
    h = serialize.parse_poly(data["polynomial"], G.n)
    trace = marked.reduce(G, h, step_cap=opts.step_cap)
    report = serialize.trace_json(trace, opts.trace)
    code = EXIT_OK if trace.status == marked.REDUCED else EXIT_NEGATIVE
    return report, code


def _cmd_is_marked_basis(data, opts):
    G = serialize.parse_marked_set(data)
    result = marked.is_marked_basis(G, step_cap=opts.step_cap)
    report = serialize.basis_result_json(result, opts.trace)
    return report, EXIT_OK if result.is_basis else EXIT_NEGATIVE


def _cmd_oracle_check(data, opts):
    G = serialize.parse_marked_set(data)
    max_degree = opts.degree_bound or G.basis.max_degree() + 1
    ok = marked.oracle_check(G, max_degree)
    report = {"ok": ok, "max_degree": max_degree}
    return report, EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_scheme_equations(data, opts):
    J = serialize.parse_ideal(data)
    result = scheme.scheme_equations(J)
    return serialize.scheme_json(result), EXIT_OK


def _cmd_specialize(data, opts):
    if not isinstance(data, dict) or "ideal" not in data or "assignment" not in data:
        raise InputFormatError('specialize input needs "ideal" and "assignment"')
    J = serialize.parse_ideal(data["ideal"])
    gm = scheme.generic_marked_set(J)
    values = serialize.parse_assignment(gm, data["assignment"])
    G = scheme.specialize(gm, values)
    report = serialize.marked_set_json(G)
    report["parameters"] = [pv.name for pv in gm.params]
    return report, EXIT_OK


_COMMANDS = {
    "mult-vars": _cmd_mult_vars,
    "complete-check": _cmd_complete_check,
    "stably-complete-check": _cmd_stably_complete_check,
    "complete": _cmd_complete,
    "star-set": _cmd_star_set,
    "classify": _cmd_classify,
    "pommaret": _cmd_pommaret,
    "hilbert": _cmd_hilbert,
    "sigma": _cmd_sigma,
    "involutive-test": _cmd_involutive_test,
    "reduce": _cmd_reduce,
    "is-marked-basis": _cmd_is_marked_basis,
    "oracle-check": _cmd_oracle_check,
    "scheme-equations": _cmd_scheme_equations,
    "specialize": _cmd_specialize,
}

_NEEDS_DEGREE = {"complete", "star-set", "hilbert", "sigma", "involutive-test"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="involutive",
        description="Involutive structure, marked bases and marked-scheme equations "
        "for monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="path to the JSON input file")
        p.add_argument("--output", help="write the JSON report here instead of stdout")
        p.add_argument("--step-cap", type=int, default=marked.DEFAULT_STEP_CAP)
        p.add_argument(
            "--degree-bound",
            type=int,
            default=None,
            help="degree bound / degree argument for commands that need one",
        )
        p.add_argument(
            "--sigma-mode",
            choices=[ideals.ESCALIER, ideals.IDEAL_SLICE],
            default=ideals.IDEAL_SLICE,
        )
        p.add_argument("--trace", action="store_true", help="include reduction steps")
    return parser


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    opts = parser.parse_args(argv)
    if opts.step_cap < 1:
        _emit(serialize.dumps({"error": {"type": "usage", "message": "step cap must be >= 1"}}), opts.output)
        return EXIT_USAGE
    if opts.command in _NEEDS_DEGREE:
        if opts.degree_bound is None:
            opts.degree_bound = 32 if opts.command == "complete" else None
        if opts.degree_bound is None or opts.degree_bound < 0:
            _emit(
                serialize.dumps(
                    {
                        "error": {
                            "type": "usage",
                            "message": f"{opts.command} needs --degree-bound >= 0",
                        }
                    }
                ),
                opts.output,
            )
            return EXIT_USAGE
    try:
        data = _load(opts.input)
        report, code = _COMMANDS[opts.command](data, opts)
    except (InputFormatError, MissingAssignment, ValueError) as exc:
        _emit(
            serialize.dumps(
                {"error": {"type": type(exc).__name__, "message": str(exc)}}
            ),
            opts.output,
        )
        return EXIT_USAGE
    except DegreeCapExceeded as exc:
        body = {
            "error": {
                "type": "DegreeCapExceeded",
                "message": str(exc),
                "partial": serialize.termset_json(exc.partial) if exc.partial else None,
            }
        }
        _emit(serialize.dumps(body), opts.output)
        return EXIT_USAGE
    except InvolutiveError as exc:
        _emit(
            serialize.dumps(
                {"error": {"type": type(exc).__name__, "message": str(exc)}}
            ),
            opts.output,
        )
        return EXIT_USAGE
    _emit(serialize.dumps(report), opts.output)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
