"""Command-line front end.

Exit codes: 0 all requested checks passed, 1 a mathematical check
failed, 2 malformed input.  Exact values serialize as "num/den"
strings; floats appear only in zero and deviation fields.  JSON output
is deterministic for identical configs apart from the version header.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import __version__
from .acceptance import ALL_CRITERIA, run_all
from .algebra import RationalFunction
from .curve import CurveData, curve_from_json, curve_to_json, zeta_special_residue
from .errors import DomainError, NumericError
from .groupzeta import (
    UniformityMatch,
    edge_residue,
    fe_check_group,
    group_zeta,
    group_zeta_zeros,
    uniformity_match,
)
from .numfield import ks_identity_probe, volume_table
from .purezeta import (
    PureZetaInputs,
    bundle_counts,
    elliptic_rank2_inputs,
    fe_check_pure,
    mass_reformulated,
    mixed_numerator,
    mixed_zeta_rank2,
    partial_rank3_bracket,
    partial_rank3_identity_check,
    pure_zeta,
    rank1_inputs,
    rh_report,
    zagier_beta,
)
from .residues import residue_route_equivalence
from .rootsys import build_root_system, enumerate_weyl, parabolic_data

EXIT_OK = 0
EXIT_MATH_FAIL = 1
EXIT_INPUT = 2


def _atomic_write(path: str, data: str) -> None:
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w") as fh:
        fh.write(data)
    os.replace(tmp, path)


def _emit_json(payload: dict, path: str | None) -> None:
    payload = {"version": __version__, **payload}
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path:
        _atomic_write(path, text)
    else:
        sys.stdout.write(text)


def emit_zero_plot_data(zeros, path: str) -> None:
    """CSV with header re_s,im_s,modulus_u,deviation, ordered rows.

    ``zeros`` holds (re_s, im_s, modulus_u, deviation) tuples; rows are
    sorted by (im_s, re_s) for deterministic output.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["re_s", "im_s", "modulus_u", "deviation"])
    for row in sorted(zeros, key=lambda r: (r[1], r[0])):
        writer.writerow([repr(x) for x in row])
    _atomic_write(path, buf.getvalue())


def _zero_rows(report) -> list[tuple[float, float, float, float]]:
    rows = []
    for (re_s, im_s), z, dev in zip(
        report.s_coordinates, report.zeros_u, report.deviations
    ):
        rows.append((re_s, im_s, abs(z), dev))
    return rows


def _rf_json(f: RationalFunction) -> dict:
    return {
        "num": [str(c) for c in f.num.coeffs],
        "den": [str(c) for c in f.den.coeffs],
        "variable": f.var,
    }


def _load_curve(args) -> "CurveData":
    if not args.curve:
        raise DomainError("--curve FILE is required")
    try:
        with open(args.curve) as fh:
            spec = json.load(fh)
    except FileNotFoundError as exc:
        raise DomainError(f"curve file not found: {args.curve}") from exc
    except json.JSONDecodeError as exc:
        raise DomainError(f"curve file is not valid JSON: {exc}") from exc
    return curve_from_json(spec)


def _load_config(args) -> None:
    """Merge a JSON config file into unset argparse fields."""
    if not getattr(args, "config", None):
        return
    try:
        with open(args.config) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"bad config file: {exc}") from exc
    if not isinstance(cfg, dict):
        raise DomainError("config file must hold a JSON object")
    for key, value in cfg.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            raise DomainError(f"config field {key!r} is not a known option")
        if getattr(args, attr) in (None, False):
            setattr(args, attr, value)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_curve_validate(args) -> int:
    curve = _load_curve(args)
    payload = {
        "curve": curve_to_json(curve),
        "weil_check": curve.weil_numbers_check(),
        "point_counts": curve.point_counts(curve.g + 2),
        "special_value_at_1": str(zeta_special_residue(curve)),
    }
    _emit_json(payload, args.json_out)
    return EXIT_OK


def _pure_inputs(args, curve) -> PureZetaInputs:
    r = args.r or 2
    if args.alphas:
        raw = args.alphas
        parts = raw if isinstance(raw, list) else str(raw).split(",")
        alphas = [Fraction(str(x)) for x in parts]
        if args.beta0 is None:
            raise DomainError("--beta0 required when --alphas is given")
        return PureZetaInputs.make(r, alphas, Fraction(str(args.beta0)))
    if curve.g == 1 and r == 2:
        return elliptic_rank2_inputs(curve)
    if curve.g == 1 and r == 1:
        return rank1_inputs(curve)
    raise DomainError(
        "no built-in alpha provider for this curve/rank; pass --alphas/--beta0"
    )


def cmd_pure(args) -> int:
    curve = _load_curve(args)
    inputs = _pure_inputs(args, curve)
    result = pure_zeta(curve, inputs)
    ok_fe, cert = fe_check_pure(result.zeta, curve.g, curve.q, inputs.r)
    report = rh_report(
        result.numerator.scale(1 / inputs.alphas[0])
        if inputs.alphas[0]
        else result.numerator,
        result.Q,
        tol=args.tol,
    )
    counts = [
        str(x)
        for x in bundle_counts(result.zeta, inputs.alphas[0], result.Q, 2 * curve.g)
    ]
    payload = {
        "zeta_T": _rf_json(result.zeta),
        "completed_t": _rf_json(result.completed),
        "numerator": [str(c) for c in result.numerator.coeffs],
        "Q": str(result.Q),
        "fe": ok_fe,
        "fe_certificate": cert.to_json(),
        "rh": report.to_json(),
        "bundle_counts": counts,
    }
    _emit_json(payload, args.json_out)
    if args.csv_out:
        rows = [
            (
                -_safe_log(abs(z), curve.q ** inputs.r),
                _arg_over_lnq(z, curve.q ** inputs.r),
                abs(z),
                dev,
            )
            for z, dev in zip(report.roots, report.deviations)
        ]
        emit_zero_plot_data(rows, args.csv_out)
    return EXIT_OK if ok_fe and report.verdict else EXIT_MATH_FAIL


def _safe_log(x: float, base: int) -> float:
    import math

    return math.log(x) / math.log(base) if x > 0 else float("inf")


def _arg_over_lnq(z: complex, base: int) -> float:
    import math

    return math.atan2(z.imag, z.real) / math.log(base)


def cmd_mass(args) -> int:
    curve = _load_curve(args)
    r = args.r or 2
    zb = zagier_beta(curve, r, 0)
    mr = mass_reformulated(curve, r)
    payload = {
        "rank": r,
        "composition_sum": str(zb),
        "reformulation": str(mr),
        "agree": zb == mr,
    }
    _emit_json(payload, args.json_out)
    return EXIT_OK if zb == mr else EXIT_MATH_FAIL


def cmd_mixed(args) -> int:
    q, n = args.q, args.N
    if q is None or n is None:
        raise DomainError("mixed needs --q and --N")
    f = mixed_zeta_rank2(q, n)
    numer = mixed_numerator(q, n)
    identity = partial_rank3_identity_check(q, n)
    rep_mixed = rh_report(numer, q, tol=args.tol)
    rep_partial = rh_report(partial_rank3_bracket(q), q, tol=args.tol)
    payload = {
        "mixed": _rf_json(f),
        "mixed_numerator_over_alpha0": [str(c) for c in numer.coeffs],
        "mixed_rh": rep_mixed.to_json(),
        "partial_identity_exact": identity,
        "partial_bracket": [str(c) for c in partial_rank3_bracket(q).coeffs],
        "partial_rh": rep_partial.to_json(),
    }
    _emit_json(payload, args.json_out)
    return EXIT_OK if identity else EXIT_MATH_FAIL


def _group_data(args):
    if not args.type or not args.rank or not args.p:
        raise DomainError("group needs --type, --rank and --p")
    rs = build_root_system(args.type, args.rank)
    W = enumerate_weyl(rs)
    pd = parabolic_data(rs, W, args.p)
    return rs, W, pd


def cmd_group(args) -> int:
    curve = _load_curve(args)
    rs, W, pd = _group_data(args)
    z = group_zeta(curve, rs, W, pd)
    ok_fe, _ = fe_check_group(z)
    zeros = group_zeta_zeros(z, tol=args.tol)
    er = edge_residue(z)
    payload = {
        "zeta": _rf_json(z.zeta),
        "c_p": str(z.c_p),
        "normalization": [
            [k, h, m] for (k, h), m in sorted(z.normalization.items())
        ],
        "fe": ok_fe,
        "zeros": zeros.to_json(),
        "edge_residue": (
            str(er.value) if er.value is not None else
            {"order": er.order, "principal": [str(x) for x in er.principal]}
        ),
    }
    if args.type == "A":
        # inspection row: the edge residue against the bundle mass of the
        # matching rank (no equality asserted, conjectural content)
        payload["mass_for_inspection"] = str(
            zagier_beta(curve, args.rank + 1, 0)
        )
    _emit_json(payload, args.json_out)
    if args.csv_out:
        emit_zero_plot_data(_zero_rows(zeros), args.csv_out)
    return EXIT_OK if ok_fe else EXIT_MATH_FAIL


def cmd_residue_compare(args) -> int:
    curve = _load_curve(args)
    rs, W, pd = _group_data(args)
    cert = residue_route_equivalence(curve, rs, W, pd)
    _emit_json({"certificate": cert.to_json()}, args.json_out)
    return EXIT_OK if cert.passed else EXIT_MATH_FAIL


def cmd_uniformity(args) -> int:
    curve = _load_curve(args)
    r = args.r or 2
    if r != 2:
        raise DomainError("uniformity matching is wired for r = 2 (A_1 pair)")
    rs = build_root_system("A", 1)
    W = enumerate_weyl(rs)
    pd = parabolic_data(rs, W, 1)
    z = group_zeta(curve, rs, W, pd)
    inputs = _pure_inputs(args, curve)
    pz = pure_zeta(curve, inputs)
    match = uniformity_match(pz.completed.retag("u"), z)
    if isinstance(match, UniformityMatch):
        _emit_json({"status": "verified", "match": match.to_json()}, args.json_out)
        return EXIT_OK
    _emit_json(
        {
            "status": "inconclusive",
            "tried": [[str(a), str(b)] for a, b in match.tried],
            "skipped_irrational": [
                [str(a), str(b)] for a, b in match.skipped
            ],
        },
        args.json_out,
    )
    return EXIT_MATH_FAIL


def cmd_numfield(args) -> int:
    rmax = args.r or 4
    payload = {
        "volumes": volume_table(rmax).to_json(),
        "reduction_probe": [ks_identity_probe(r) for r in range(1, min(rmax, 5) + 1)],
    }
    _emit_json(payload, args.json_out)
    return EXIT_OK


def cmd_report_all(args) -> int:
    workers = args.parallel or 1
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda fn: fn(), ALL_CRITERIA))
    else:
        results = run_all()
    payload = {
        "criteria": [r.to_json() for r in results],
        "passed": all(r.passed for r in results),
    }
    _emit_json(payload, args.json_out)
    for r in results:
        sys.stderr.write(r.render() + "\n")
    return EXIT_OK if payload["passed"] else EXIT_MATH_FAIL


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nazeta",
        description="Exact zeta functions of curves over finite fields "
        "and their group-theoretic companions",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    commands = {
        "curve-validate": cmd_curve_validate,
        "pure": cmd_pure,
        "mass": cmd_mass,
        "mixed": cmd_mixed,
        "group": cmd_group,
        "residue-compare": cmd_residue_compare,
        "uniformity": cmd_uniformity,
        "numfield": cmd_numfield,
        "report-all": cmd_report_all,
    }
    for name, fn in commands.items():
        p = sub.add_parser(name)
        p.add_argument("--config", help="JSON file supplying defaults for flags")
        p.add_argument("--curve", help="curve spec JSON file")
        p.add_argument("--type", help="root system type (A, B, C, G2)")
        p.add_argument("--rank", type=int)
        p.add_argument("--p", type=int, help="removed simple root (1-based)")
        p.add_argument("--r", type=int, help="bundle rank")
        p.add_argument("--q", type=int)
        p.add_argument("--N", type=int, help="rational point count")
        p.add_argument("--alphas", help="comma-separated rationals")
        p.add_argument("--beta0", help="rational mass value")
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--json-out")
        p.add_argument("--csv-out")
        p.add_argument("--parallel", type=int, default=1)
        p.set_defaults(handler=fn)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _load_config(args)
        return args.handler(args)
    except (DomainError, OSError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except NumericError as exc:
        sys.stderr.write(f"numeric failure: {exc}\n")
        return EXIT_MATH_FAIL


if __name__ == "__main__":
    sys.exit(main())
