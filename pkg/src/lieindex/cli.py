"""Command line interface.

    lieindex roots --type D --rank 4
    lieindex cascade --type E --rank 8 --format json
    lieindex index --type A --rank 2 --sub borel
    lieindex stable-form --type B --rank 3
    lieindex stability-check --type D --rank 4 --sub parabolic --parabolic-subset 2 --form f.json
    lieindex counterexample-d4 --lambda 1 --lambda -3/7
    lieindex verify-all --max-rank 4

Exit status: 0 when every check passes, 1 when a verification fails, 2 on
usage errors.  ``LIEINDEX_SEED`` sets the default ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import d4, linalg
from .chevalley import build_algebra
from .rootsystem import RootSystemError, SimpleType, build_root_system, cascade_forest, format_root, k_g
from .stability import cascade_element, cascade_form, check_semisimple_commutative_centralizer, is_stable
from .subalg import SubalgebraError, borel, centralizer, centralizer_dim, form_from_json, full, index, parabolic
from .verify import summarize, verify_all

COMMANDS = ("roots", "cascade", "index", "stable-form", "stability-check", "counterexample-d4", "verify-all")


class UsageError(Exception):
    pass


def _default_seed() -> int:
    env = os.environ.get("LIEINDEX_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"LIEINDEX_SEED must be an integer, got {env!r}") from None


def _subset(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return sorted({int(t) - 1 for t in text.split(",") if t.strip()})
    except ValueError:
        raise UsageError(f"bad --parabolic-subset {text!r}; expected comma separated labels like 1,3") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=None, help="random seed (default: $LIEINDEX_SEED or 0)")
    common.add_argument("--trials", type=int, default=3)

    typed = argparse.ArgumentParser(add_help=False)
    typed.add_argument("--type", dest="family", required=True, help="A, B, C, D, E, F or G")
    typed.add_argument("--rank", type=int, required=True)

    sub_opts = argparse.ArgumentParser(add_help=False)
    sub_opts.add_argument("--sub", choices=("full", "borel", "parabolic"), default="borel")
    sub_opts.add_argument("--parabolic-subset", default="", help="simple root labels, e.g. 2 or 1,3")

    parser = argparse.ArgumentParser(prog="lieindex", description=__doc__.split("\n\n")[0])
    cmds = parser.add_subparsers(dest="command", required=True)
    cmds.add_parser("roots", parents=[common, typed], help="positive roots and Cartan matrix")
    cmds.add_parser("cascade", parents=[common, typed], help="cascade of strongly orthogonal roots")
    cmds.add_parser("index", parents=[common, typed, sub_opts], help="index of a subalgebra")
    cmds.add_parser("stable-form", parents=[common, typed], help="the cascade form on the Borel subalgebra")
    sc = cmds.add_parser("stability-check", parents=[common, typed, sub_opts], help="stability of a given form")
    sc.add_argument("--form", required=True, help='JSON file: array of "num/den" strings in the subalgebra basis')
    cx = cmds.add_parser("counterexample-d4", parents=[common], help="the D4 parabolic without stable forms")
    cx.add_argument("--lambda", dest="lambdas", action="append", default=None, help="rational, repeatable")
    va = cmds.add_parser("verify-all", parents=[common], help="run every check up to a rank")
    va.add_argument("--max-rank", type=int, default=4)
    return parser


def _stype(args) -> SimpleType:
    try:
        return SimpleType(args.family, args.rank)
    except RootSystemError as e:
        raise UsageError(str(e)) from None


def _subalgebra(L, args):
    if args.sub == "full":
        return full(L)
    if args.sub == "borel":
        if args.parabolic_subset:
            raise UsageError("--parabolic-subset needs --sub parabolic")
        return borel(L)
    try:
        return parabolic(L, _subset(args.parabolic_subset))
    except SubalgebraError as e:
        raise UsageError(str(e)) from None


def _fmt_terms(pairs) -> str:
    out = ""
    for c, label in pairs:
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        out += f" {sign} {mag}{label}" if out else f"{'-' if c < 0 else ''}{mag}{label}"
    return out or "0"


def _fmt_el(L, x) -> str:
    return _fmt_terms((c, L.labels[i]) for i, c in enumerate(x) if c)


def _el_json(x) -> list[str]:
    return [linalg.format_rational(c) for c in x]


def cmd_roots(args):
    rs = build_root_system(_stype(args))
    data = rs.to_json()
    lines = [f"type {rs.stype}: {len(rs.positive_roots)} positive roots", "cartan:"]
    lines += ["  " + " ".join(f"{c:2d}" for c in row) for row in rs.cartan]
    lines += [f"  {list(a)}  {format_root(a)}" for a in rs.positive_roots]
    return data, lines, 0


def cmd_cascade(args):
    rs = build_root_system(_stype(args))
    forest = cascade_forest(rs)
    data = {"type": rs.family, "rank": rs.rank, "k_g": k_g(rs), "cascade": forest}
    lines = [f"type {rs.stype}: k_g = {data['k_g']}"]

    def show(nodes, depth):
        for n in nodes:
            eps = format_root(n["epsilon"])
            lines.append(f"{'  ' * depth}K = {n['subset']}  eps_K = {eps}  |Gamma^K| = {len(n['gamma'])}")
            lines.append(f"{'  ' * depth}  Gamma^K: {', '.join(format_root(a) for a in n['gamma'])}")
            show(n["children"], depth + 1)

    show(forest, 0)
    return data, lines, 0


def cmd_index(args):
    rs = build_root_system(_stype(args))
    L = build_algebra(rs)
    a = _subalgebra(L, args)
    chi = index(a, args.trials, args.seed)
    data = {
        "subalgebra": {"type": rs.family, "rank": rs.rank, "kind": a.kind, "parabolic_subset": [i + 1 for i in a.parabolic_subset] if a.kind == "parabolic" else []},
        "dim": a.dim,
        "index": chi,
        "trials": args.trials,
        "seed": args.seed,
    }
    lines = [f"{a.descr}: dim = {a.dim}, index = {chi} (trials = {args.trials}, seed = {args.seed})"]
    status = 0
    if a.kind == "borel":
        cert = centralizer_dim(cascade_form(L, a))
        data["certificate_form_rank"] = a.dim - cert
        data["expected_index"] = rs.rank - k_g(rs)
        lines.append(
            f"cascade form: rank Phi_f = {a.dim - cert}, dim b^f = {cert}; rank - k_g = {data['expected_index']}"
        )
        if not chi == cert == data["expected_index"]:
            lines.append("FAIL: index of b differs from rank - k_g")
            status = 1
    return data, lines, status


def cmd_stable_form(args):
    rs = build_root_system(_stype(args))
    L = build_algebra(rs)
    b = borel(L)
    u = cascade_element(L)
    f = cascade_form(L, b)
    cent = centralizer(f)
    rep = is_stable(b, f, "phi_b(u)")
    semis = check_semisimple_commutative_centralizer(b, f)
    data = {
        "type": rs.family,
        "rank": rs.rank,
        "u": _el_json(u),
        "form": f.to_json(),
        "centralizer": [_el_json(x) for x in cent],
        "report": rep.to_json(),
        "commutative_semisimple_centralizer": semis,
    }
    lines = [
        f"u = {_fmt_el(L, u)}",
        f"f = phi_b(u) = [{', '.join(str(c) for c in f.coords)}]",
        f"b^f: dim {len(cent)}",
        *[f"  {_fmt_el(L, x)}" for x in cent],
        rep.verdict,
        f"b^f commutative and semisimple: {semis}",
    ]
    return data, lines, 0 if rep.stable and semis else 1


def cmd_stability_check(args):
    rs = build_root_system(_stype(args))
    L = build_algebra(rs)
    a = _subalgebra(L, args)
    try:
        with open(args.form) as fh:
            raw = json.load(fh)
        f = form_from_json(a, raw)
    except (OSError, ValueError, ZeroDivisionError, SubalgebraError) as e:
        raise UsageError(f"cannot read form from {args.form}: {e}") from None
    rep = is_stable(a, f, os.path.basename(args.form))
    lines = [f"{a.descr}, form {args.form}", *rep.warnings, rep.verdict]
    return rep.to_json(), lines, 0


def cmd_counterexample(args):
    lambdas = d4.DEFAULT_LAMBDAS
    if args.lambdas:
        try:
            lambdas = [Fraction(t) for t in args.lambdas]
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad --lambda value in {args.lambdas}") from None
    facts = d4.scenario_facts(args.seed, args.trials)
    failures = d4.scenario_failures(facts)
    reports = d4.run_counterexample(lambdas)
    for r in reports:
        failures.extend(r.failures)
    data = {
        "dim_p": facts["dim_p"],
        "cascade": facts["cascade"],
        "index_b": facts["index_b"],
        "reports": [r.to_json() for r in reports],
        "failures": failures,
    }
    lines = [f"dim p = {facts['dim_p']}, cascade = {facts['cascade']}, index(b) = {facts['index_b']}"]
    for r in reports:
        lines.append(
            f"lambda = {r.lam}: dim p^f = {r.dim_pf}, support size {len(r.support)}, "
            f"[h,x] = x: {r.h_eigen_check}, stable: {r.stability_verdict}"
        )
        if r.coefficients:
            lines.append("  x = " + _fmt_terms((c, f"X[{k}]") for k, c in r.coefficients.items()))
    lines += [f"FAIL: {m}" for m in failures]
    lines.append("all claims verified" if not failures else f"{len(failures)} claim(s) failed")
    return data, lines, 0 if not failures else 1


def cmd_verify_all(args):
    if args.max_rank < 1:
        raise UsageError("--max-rank must be >= 1")
    results = verify_all(args.max_rank, args.seed, args.trials)
    ok, bad = summarize(results)
    data = {"max_rank": args.max_rank, "seed": args.seed, "passed": ok, "failed": bad,
            "checks": [{"name": r.name, "ok": r.ok, "failures": r.failures} for r in results]}
    lines = [r.line() for r in results] + [f"{ok} passed, {bad} failed"]
    return data, lines, 0 if bad == 0 else 1


HANDLERS = {
    "roots": cmd_roots,
    "cascade": cmd_cascade,
    "index": cmd_index,
    "stable-form": cmd_stable_form,
    "stability-check": cmd_stability_check,
    "counterexample-d4": cmd_counterexample,
    "verify-all": cmd_verify_all,
}


_NEG_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


def _join_negative_lambdas(argv: list[str]) -> list[str]:
    # argparse reads "-3/7" as an option; rewrite "--lambda -3/7" as "--lambda=-3/7"
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--lambda" and i + 1 < len(argv) and _NEG_RATIONAL.match(argv[i + 1]):
            out.append(f"--lambda={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_negative_lambdas(list(sys.argv[1:] if argv is None else argv)))
    try:
        if args.seed is None:
            args.seed = _default_seed()
        if args.trials < 1:
            raise UsageError("--trials must be >= 1")
        data, lines, status = HANDLERS[args.command](args)
    except UsageError as e:
        parser.error(str(e))  # exits with status 2
    if args.format == "json":
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
