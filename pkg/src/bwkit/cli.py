"""Command-line scenario runner.

Every subcommand prints a report (human text, or JSON with ``--json``) and
exits 0 when all checks pass or the result is informational, 1 when a check
fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .report import dumps, encode, make_report, write_report

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def rational(text: str) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(rational(t) for t in str(text).split(","))


def _status(checks: dict) -> str:
    return "pass" if all(checks.values()) else "fail"


def _momentum(args, on_shell: bool = True):
    from .momentum import FourMomentum

    if getattr(args, "E", None) is not None:
        E = args.E
        m2 = E * E - args.p1**2 - args.p2**2 - args.p3**2
        if args.mass is not None and m2 == args.mass**2:
            return FourMomentum(args.p1, args.p2, args.p3, E, args.mass)
        return FourMomentum.off_shell(args.p1, args.p2, args.p3, E)
    if args.mass is None:
        raise InputError("give --mass (on shell) or --E")
    return FourMomentum.on_shell(args.p1, args.p2, args.p3, args.mass)


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (results, status)


def cmd_matrices(args):
    from .spinor import build_dirac_set, clifford_ok, duality_relations

    d = build_dirac_set(args.phase)
    props = d.property_report()
    checks = {"clifford": clifford_ok(d), **props}
    res = {
        "gamma": {str(k + 1): g for k, g in enumerate(d.gamma)},
        "gamma5": d.gamma5,
        "R": d.R,
        "phase_phi": d.phase_phi,
        "checks": checks,
        "duality": [{"pair": f"{a[0] + 1}{a[1] + 1}", "partner": f"{b[0] + 1}{b[1] + 1}", "factor": c} for a, b, c in duality_relations(d)],
    }
    if args.vector:
        from .checks import criterion_1

        c1 = criterion_1()
        res["vector_rep_checks"] = c1.checks
        checks = {**checks, **c1.checks}
    return res, _status(checks)


def cmd_spectrum(args):
    if args.ast:
        from .bw_spin1 import ast_dispersion

        return {"A": args.A, "B": args.B, "ast": ast_dispersion(args.A, args.B)}, "informational"
    from .vector_rep import WaveOperatorParams, dispersion_spectrum

    s = dispersion_spectrum(WaveOperatorParams(args.A, args.B, args.m))
    res = {
        "A": args.A,
        "B": args.B,
        "m": args.m,
        "determinant_in_E2": s.determinant,
        "branches": [
            {"spin": b.spin, "mass2_ratio": b.mass2_ratio, "multiplicity": b.multiplicity, "status": b.status} for b in s.branches
        ],
    }
    return res, "informational"


def cmd_polarization(args):
    from .polarization import change_of_basis, completeness, helicity_basis, parity_report, standard_basis

    p = _momentum(args)
    phases = tuple(x if x == "azimuth" else rational(x) for x in args.phases.split(","))
    basis = standard_basis(p) if args.basis == "standard" else helicity_basis(p, phases)
    import numpy as np

    U = change_of_basis([float(x) for x in p.spatial], float(args.mass), tuple(0.0 if x == "azimuth" else float(x) for x in phases))
    unitary = bool(np.allclose(U @ U.conj().T, np.eye(4), rtol=0, atol=args.tolerance * 10))
    checks = {"completeness": completeness(basis) == completeness(basis).__class__.identity(4), "change_of_basis_unitary": unitary}
    res = {
        "momentum": {"p": list(p.spatial), "E": p.E, "mass": args.mass},
        "basis": args.basis,
        "vectors": {k: {"components": v.components, "normalization": v.normalization, "radical": v.radical} for k, v in basis.items()},
        "parity": parity_report(p, args.basis, phases),
        "checks": checks,
    }
    return res, _status(checks)


def cmd_bw1(args):
    from . import bw_spin1 as bw

    if args.mode == "system":
        p = _momentum(args)
        m = args.mass if args.mass is not None else 1
        ms = bw.bw_system_spin1(p, m, args.sign)
        rels = {r.label: r.in_row_space for r in ms.derived_relations}
        res = {"nullity": ms.nullity, "on_shell": p.invariant_mass2 == m * m, "relations": rels}
        return res, _status(rels) if p.invariant_mass2 == m * m else "informational"
    if args.mode == "wth":
        try:
            first, second = bw.wth_mapping(args.a, args.b, args.c, args.d)
        except bw.MappingUndefinedError as exc:
            raise InputError(str(exc)) from exc
        trip = bw.wth_round_trip(args.a, args.b, args.c, args.d)
        checks = {"masses_equal": trip.masses_equal}
        return {"branches": [first, second], "predicted": trip.predicted, "checks": checks}, _status(checks)
    if args.mode == "signs":
        en = bw.sign_operator_enumeration()
        checks = {"distinct=12": en.distinct == 12, "duplicates=4": en.duplicates == 4}
        res = {
            "distinct": en.distinct,
            "duplicates": en.duplicates,
            "row_space_classes": en.row_space_classes,
            "flip_isomorphic": en.flip_isomorphic,
            "groups": en.groups,
            "checks": checks,
        }
        return res, _status(checks)
    raise InputError(f"unknown bw1 mode {args.mode!r}")


def _coeffs(args):
    from .spin2 import GENERIC, STANDARD, Spin2Coefficients

    if args.coeffs:
        try:
            a, b = args.coeffs.split(":")
            return Spin2Coefficients(rational_list(a), rational_list(b))
        except (ValueError, argparse.ArgumentTypeError) as exc:
            raise InputError(f"--coeffs expects 'a1,a2,a3:b1,...,b9' ({exc})") from exc
    return GENERIC if args.generic else STANDARD


def cmd_spin2(args):
    from . import spin2

    if args.mode == "nullity":
        c = _coeffs(args)
        rep = spin2.symmetry_constraint_system(c)
        res = {
            "alpha": c.alpha,
            "beta": c.beta,
            "active_blocks": list(c.active()),
            "component_nullity": rep.component_nullity,
            "image_nullity": rep.image_nullity,
            "expansion_kernel": rep.expansion_kernel,
            "constructions_agree": rep.constructions_agree,
        }
        return res, "pass" if rep.constructions_agree else "fail"
    if args.mode == "families":
        rep = spin2.symmetry_constraint_system(spin2.STANDARD)
        fams = spin2.check_families(rep.system, rep.system.unknown_labels)
        checks = {f.family: f.ok for f in fams}
        res = {f.family: {"members": f.members, "in_row_space": f.in_row_space, "outside": list(f.failures)} for f in fams}
        return {"families": res, "checks": checks}, _status(checks)
    if args.mode == "recover":
        rec = spin2.recover_standard_case()
        res = {
            "row_spaces_equal": rec.row_spaces_equal,
            "standard_nullity": rec.standard_nullity,
            "beta9_perturbed_nullity": rec.perturbed_nullity,
            "perturbation_changes_system": rec.perturbed_changes,
        }
        return res, "pass" if rec.row_spaces_equal else "fail"
    if args.mode == "dynamics":
        p = _momentum(args)
        m = args.mass if args.mass is not None else 1
        c = _coeffs(args)
        comp, image = spin2.dynamics_nullities(p, m, c)
        res = {"component_nullity": comp, "image_nullity": image, "on_shell": p.invariant_mass2 == m * m}
        if c == spin2.STANDARD:
            ms = spin2.dynamics_system(p, m, c)
            res["relations_in_row_space"] = ms.all_relations_hold()
            res["blocks"] = spin2.block_structure(ms.system.matrix)
        return res, "informational"
    raise InputError(f"unknown spin2 mode {args.mode!r}")


def cmd_quanta(args):
    from . import quanta

    try:
        if args.mode == "spin-half":
            r = quanta.spin_half_relation(args.n, args.mass)
            return {"matrix": r.matrix, "checks": r.checks, "note": r.note}, _status(r.checks)
        if args.mode == "bivector":
            r = quanta.bivector_relation(args.n)
            return {"matrix": r.matrix, "checks": r.checks, "note": r.note}, _status(r.checks)
    except quanta.NormalizationError as exc:
        raise InputError(str(exc)) from exc
    if args.mode == "propagator":
        from .exact import ExactScalar

        k = [ExactScalar(x) for x in args.k] + [ExactScalar(0, args.E)]
        try:
            P = quanta.propagator(k, args.mass, args.mu)
        except quanta.PoleError as exc:
            raise InputError(str(exc)) from exc
        num, den = quanta.longitudinal_coefficient(args.mass, args.mu)
        return {"propagator": P, "longitudinal_numerator": num, "longitudinal_denominator": den}, "informational"
    if args.mode == "relations":
        p = _momentum(args)
        b, a = quanta.vector_rep_relations(p, args.basis)
        out = {}
        for d in (b, a):
            out[d.name] = {
                "pairing": d.pairing,
                "column_signs": d.column_signs,
                "row_factors": d.row_factors,
                "mismatched_entries": d.mismatched_entries,
            }
        return out, "informational"
    raise InputError(f"unknown quanta mode {args.mode!r}")


def cmd_verify_all(args):
    from .checks import DETERMINISM_ENV, run_acceptance

    skip = args.no_determinism or os.environ.get(DETERMINISM_ENV) == "1"
    results = run_acceptance(include_determinism=not skip)
    res = {f"criterion_{r.number}": r.payload() for r in results}
    args._criteria = results
    return res, "pass" if all(r.passed for r in results) else "fail"


HANDLERS = {
    "matrices": cmd_matrices,
    "spectrum": cmd_spectrum,
    "polarization": cmd_polarization,
    "bw1": cmd_bw1,
    "spin2": cmd_spin2,
    "quanta": cmd_quanta,
    "verify-all": cmd_verify_all,
}


# ---------------------------------------------------------------------------
# parser


def _add_momentum(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p1", type=rational, default=Fraction(0))
    p.add_argument("--p2", type=rational, default=Fraction(0))
    p.add_argument("--p3", type=rational, default=Fraction(0))
    p.add_argument("--mass", type=rational)
    p.add_argument("--E", type=rational, help="energy; omit for the on-shell value")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bwkit", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--tolerance", type=float, default=1e-12, help="tolerance for float-path checks")
    # the same flags after the subcommand; SUPPRESS keeps a value given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--tolerance", type=float, default=argparse.SUPPRESS, help="tolerance for float-path checks")
    ap.add_argument("--version", action="version", version=f"bwkit {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrices", parents=[common], help="Dirac set, reflection matrix, vector-rep tables")
    p.add_argument("--phase", type=rational, default=Fraction(1, 2), help="R phase in units of pi")
    p.add_argument("--vector", action="store_true", help="also check the (1/2,1/2) tables")

    p = sub.add_parser("spectrum", parents=[common], help="mass spectrum of the (A, B) wave operator")
    p.add_argument("--A", type=rational, required=True)
    p.add_argument("--B", type=rational, required=True)
    p.add_argument("--m", type=rational, default=Fraction(1))
    p.add_argument("--ast", action="store_true", help="antisymmetric-tensor equations instead")

    p = sub.add_parser("polarization", parents=[common], help="polarization vectors and parity")
    _add_momentum(p)
    p.add_argument("--basis", choices=("standard", "helicity"), default="standard")
    p.add_argument("--phases", default="0,0", help="phases of the +-1 states (units of pi, or 'azimuth')")

    p = sub.add_parser("bw1", parents=[common], help="spin-1 Bargmann-Wigner systems")
    p.add_argument("mode", choices=("system", "wth", "signs"))
    _add_momentum(p)
    p.add_argument("--sign", type=int, choices=(-1, 1), default=-1)
    for k in ("a", "b", "c", "d"):
        p.add_argument(f"--{k}", type=rational, default=Fraction(0))

    p = sub.add_parser("spin2", parents=[common], help="rank-4 multispinor systems")
    p.add_argument("mode", choices=("nullity", "families", "recover", "dynamics"))
    g = p.add_mutually_exclusive_group()
    g.add_argument("--standard", action="store_true", help="standard coefficients (default)")
    g.add_argument("--generic", action="store_true", help="all coefficients 1")
    g.add_argument("--coeffs", help="a1,a2,a3:b1,...,b9")
    _add_momentum(p)

    p = sub.add_parser("quanta", parents=[common], help="operator relations and the propagator")
    p.add_argument("mode", choices=("spin-half", "bivector", "propagator", "relations"))
    p.add_argument("--n", type=rational_list, default=(Fraction(0), Fraction(0), Fraction(1)))
    p.add_argument("--k", type=rational_list, default=(Fraction(1), Fraction(2), Fraction(3)))
    p.add_argument("--mu", type=rational, default=Fraction(1))
    p.add_argument("--basis", choices=("standard", "helicity"), default="standard")
    _add_momentum(p)

    p = sub.add_parser("verify-all", parents=[common], help="run the acceptance suite")
    p.add_argument("--no-determinism", action="store_true", help="skip the two-run byte comparison")

    p = sub.add_parser("run", parents=[common], help="run scenario files")
    p.add_argument("--scenario", action="append", required=True, help="key=value or JSON scenario file")
    return ap


# ---------------------------------------------------------------------------
# scenarios


def parse_scenario(path: str) -> dict:
    """Scenario from a JSON object or from key=value lines.

    Line format: ``name=...``, ``target=...``, any other ``key=value`` is a
    parameter, and ``expect.<path>=value`` states an expected result.
    """
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
        if not isinstance(data, dict) or "target" not in data:
            raise InputError(f"{path}:1: a JSON scenario needs a 'target'")
        return {
            "name": str(data.get("name", Path(path).stem)),
            "target": data["target"],
            "params": {str(k): str(v) for k, v in data.get("params", {}).items()},
            "expect": {str(k): v for k, v in data.get("expectations", {}).items()},
        }
    sc = {"name": Path(path).stem, "target": None, "params": {}, "expect": {}}
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"{path}:{no}: expected key=value, got {raw.strip()!r}")
        k, v = (s.strip() for s in line.split("=", 1))
        if not k:
            raise InputError(f"{path}:{no}: empty key")
        if k in ("name", "target"):
            sc[k] = v
        elif k.startswith("expect."):
            sc["expect"][k[len("expect."):]] = v
        else:
            sc["params"][k] = v
    if not sc["target"]:
        raise InputError(f"{path}: missing 'target=' line")
    return sc


def scenario_argv(sc: dict) -> list[str]:
    parts = sc["target"].split()
    if parts[0] not in HANDLERS or parts[0] == "verify-all" and len(parts) > 1:
        raise InputError(f"scenario {sc['name']!r}: unknown target {sc['target']!r}")
    argv = list(parts)
    for k, v in sc["params"].items():
        if v.lower() in ("true", "yes"):
            argv.append(f"--{k}")
        elif v.lower() in ("false", "no"):
            continue
        else:
            argv.append(f"--{k}={v}")
    return argv


def _lookup(obj, path: str):
    for part in path.split("."):
        if isinstance(obj, list):
            obj = obj[int(part)]
        else:
            obj = obj[part]
    return obj


def _expectations(results, expect: dict) -> dict:
    enc = encode(results)
    out = {}
    for path, want in expect.items():
        try:
            got = _lookup(enc, path)
        except (KeyError, IndexError, ValueError, TypeError):
            out[path] = False
            continue
        out[path] = json.dumps(got, sort_keys=True) == json.dumps(want, sort_keys=True) or str(got) == str(want)
    return out


def run_scenarios(args, parser) -> tuple[dict, str]:
    scenarios = sorted((parse_scenario(p) for p in args.scenario), key=lambda s: s["name"])
    out, worst = {}, "informational"
    for sc in scenarios:
        try:
            sub_args = parser.parse_args(scenario_argv(sc))
        except SystemExit as exc:
            raise InputError(f"scenario {sc['name']!r}: bad parameters") from exc
        res, status = HANDLERS[sub_args.command](sub_args)
        exp = _expectations(res, sc["expect"])
        if exp and not all(exp.values()):
            status = "fail"
        elif exp and status == "informational":
            status = "pass"
        out[sc["name"]] = {"target": sc["target"], "status": status, "results": res, "expectations": exp}
        if status == "fail" or (status == "pass" and worst == "informational"):
            worst = status if worst != "fail" else worst
    return out, worst


# ---------------------------------------------------------------------------


def _human(command: str, status: str, results, args) -> str:
    lines = []
    crit = getattr(args, "_criteria", None)
    if crit is not None:
        lines.append(f"{'#':>2}  {'criterion':<30} {'status':<6} {'seconds':>8}  budget")
        for r in crit:
            budget = "-" if r.budget is None else f"<{r.budget:g}s" + ("" if r.within_budget else " EXCEEDED")
            lines.append(f"{r.number:>2}  {r.title:<30} {r.status:<6} {r.seconds:>8.2f}  {budget}")
            for name, ok in r.checks.items():
                if not ok:
                    lines.append(f"      failed: {name}")
            for d in r.divergences:
                lines.append(f"      {d.get('kind', 'note')}: {d.get('claim', '')} (claimed {d.get('claimed_nullity')}, computed {d.get('computed_nullity')})")
    else:
        lines.append(json.dumps(encode(results), sort_keys=True, indent=2))
    lines.append(f"{command}: {status}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "run":
            results, status = run_scenarios(args, parser)
        else:
            results, status = HANDLERS[args.command](args)
    except (InputError, ValueError, ZeroDivisionError, FileNotFoundError) as exc:
        print(f"bwkit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = make_report(args.command, status, results)
    write_report(report, args.command)
    sys.stdout.write(dumps(report) if args.json else _human(args.command, status, results, args))
    return EXIT_FAIL if status == "fail" else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
