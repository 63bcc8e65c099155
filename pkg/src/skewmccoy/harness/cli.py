"""Command line entry point: ``skewmccoy <subcommand> ...``.

Exit codes: 0 ok, 1 counterexample under the theorem's hypotheses,
2 invalid input, 3 capacity exhausted.
"""

from __future__ import annotations

import argparse
import sys

from ..checkers import (COUNTEREXAMPLE, fields_witness_check, hypothesis_profile,
                        mccoy_search, verify_annihilator_nonzero,
                        verify_coefficients_in_radical, verify_compatible_membership,
                        verify_lemma_generation, verify_main_theorem,
                        verify_maximal_prime, verify_quasi_duo, verify_sn_transfer,
                        cached_profile)
from ..errors import CapacityError, SkewMcCoyError
from ..omonoid import build_monoid
from ..rings import build_ring
from ..search import BUDGET, fit_window
from ..structure import LEFT, RIGHT
from .campaign import _resolve_actions, dumps, exit_code, run_campaign, write_report
from .config import catalog_generate, load_config
from .serialize import profile_dict

EXIT_OK, EXIT_THEOREM_CX, EXIT_INVALID, EXIT_CAPACITY = 0, 1, 2, 3


def _emit(args, payload, text):
    if args.json:
        sys.stdout.write(dumps(payload))
    else:
        print(text)


def _action(ring, monoid, name):
    R, M = build_ring(ring), build_monoid(monoid)
    (label, act), = _resolve_actions(R, M, [name])
    return R, M, act


def _window(M, R, degree, budget):
    D, shrunk = fit_window(M, degree, R.order, budget)
    if shrunk:
        print(f"note: window shrunk to {[M.format(s) for s in D]} to fit budget {budget}",
              file=sys.stderr)
    return D


def cmd_profile(args):
    R = build_ring(args.ring)
    d = profile_dict(cached_profile(R))
    lines = [f"{R.name}  (order {R.order})"]
    for key in ("abelian", "regular", "semiregular", "quasi_duo", "two_primal"):
        c = d[key]
        extra = "" if c["holds"] else f"  witness={c['witness']}"
        lines.append(f"  {key:<12} {c['holds']}{extra}")
    lines.append(f"  J = {{{', '.join(d['radical'])}}}, nilpotency index "
                 f"{d['radical_nilpotency_index']}")
    _emit(args, d, "\n".join(lines))
    return EXIT_OK


def cmd_mccoy(args):
    R, M, act = _action(args.ring, args.monoid, args.action)
    if args.mode == "random":
        D = tuple(M.box(args.degree))
    else:
        D = _window(M, R, args.degree, args.budget)
    sides = (RIGHT, LEFT) if args.side == "both" else (args.side,)
    verdicts = [mccoy_search(act, D, side, mode=args.mode, seed=args.seed,
                             trials=args.trials, budget=args.budget, workers=args.workers)
                for side in sides]
    hp = hypothesis_profile(R, act)
    payload = {"hypotheses_hold": hp.theorem_hypotheses_hold,
               "verdicts": [v.to_dict() for v in verdicts]}
    lines = []
    for v in verdicts:
        lines.append(f"{v.side}: {v.outcome} ({v.zero_divisor_pairs} zero-divisor pairs "
                     f"of {v.pairs_examined})")
        if v.counterexample is not None:
            cx = v.to_dict()["counterexample"]
            lines.append(f"  f = {cx['f']}\n  g = {cx['g']}")
    lines.append(f"note: {verdicts[0].caveat}")
    _emit(args, payload, "\n".join(lines))
    found = any(v.outcome == COUNTEREXAMPLE for v in verdicts)
    return EXIT_THEOREM_CX if found and hp.theorem_hypotheses_hold else EXIT_OK


def cmd_lemmas(args):
    R = build_ring(args.ring)
    reports = [verify_lemma_generation(R, args.bound), verify_quasi_duo(R),
               verify_maximal_prime(R), verify_annihilator_nonzero(R),
               verify_sn_transfer(R, 2)]
    if R.is_commutative():
        reports.append(fields_witness_check(R, _window(build_monoid("N"), R, args.degree,
                                                       args.budget), budget=args.budget))
    if args.action:
        _, M, act = _action(args.ring, args.monoid, args.action)
        reports.append(verify_compatible_membership(R, act))
        reports.append(verify_coefficients_in_radical(
            act, _window(M, R, args.degree, args.budget), budget=args.budget))
    payload = [r.to_dict() for r in reports]
    text = "\n".join(f"{r.lemma:<26} {r.status:<8} {r.context}"
                     + (f"  [{r.notes}]" if r.notes else "") for r in reports)
    _emit(args, payload, text)
    bad = any(r.status == "fails" for r in reports)
    return EXIT_THEOREM_CX if bad else EXIT_OK


def cmd_theorem(args):
    R, M, act = _action(args.ring, args.monoid, args.action)
    D = _window(M, R, args.degree, args.budget)
    res = verify_main_theorem(act, D, budget=args.budget, explore=args.explore,
                              workers=args.workers)
    payload = {"hypotheses_hold": res.hypotheses.theorem_hypotheses_hold,
               "exploration": res.exploration,
               "report": res.report.to_dict(),
               "verdicts": [res.right.to_dict(), res.left.to_dict()]}
    text = (f"{R.name} over {M.name} with {args.action}: "
            f"right={res.right.outcome}, left={res.left.outcome}"
            + ("  (exploration: hypotheses fail)" if res.exploration else "")
            + f"\nnote: {res.right.caveat}")
    _emit(args, payload, text)
    return EXIT_OK if res.passed or res.exploration else EXIT_THEOREM_CX


def cmd_campaign(args):
    cfg = load_config(args.config)
    if args.workers is not None:
        cfg.workers = args.workers
    if args.seed is not None:
        cfg.seed = args.seed
    report = run_campaign(cfg)
    out = args.out or cfg.out
    if out:
        write_report(report, out)
        if not args.no_figures:
            from .plots import render_figures
            render_figures(report, out)
    s = report["summary"]
    text = (f"{s['instances']} instances: "
            + ", ".join(f"{k}={v}" for k, v in s["counts"].items())
            + f"; theorem counterexamples={s['theorem_counterexamples']}"
            + (f"\nreport written to {out}" if out else ""))
    if args.json and not out:
        sys.stdout.write(dumps(report))
    elif args.json:
        sys.stdout.write(dumps(s))
    else:
        print(text)
    return exit_code(report)


def cmd_catalog(args):
    specs = catalog_generate(args.max_order)
    _emit(args, specs, "\n".join(specs))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewmccoy",
                                description="McCoy searches over skew series of finite rings.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, degree=2):
        sp.add_argument("--degree", type=int, default=degree)
        sp.add_argument("--budget", type=int, default=BUDGET)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    sp = sub.add_parser("profile", help="structural profile of a ring")
    sp.add_argument("ring")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("mccoy", help="McCoy search for one (ring, monoid, action)")
    sp.add_argument("ring")
    sp.add_argument("monoid")
    sp.add_argument("action")
    common(sp)
    sp.add_argument("--side", choices=("left", "right", "both"), default="both")
    sp.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=10000)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_mccoy)

    sp = sub.add_parser("lemmas", help="run the structural lemma checkers")
    sp.add_argument("ring")
    sp.add_argument("--action")
    sp.add_argument("--monoid", default="N")
    sp.add_argument("--bound", type=int, default=2)
    common(sp)
    sp.set_defaults(func=cmd_lemmas)

    sp = sub.add_parser("theorem", help="both-sided exhaustive check under the hypotheses")
    sp.add_argument("ring")
    sp.add_argument("monoid")
    sp.add_argument("action")
    common(sp)
    sp.add_argument("--explore", action="store_true",
                    help="run even when the hypotheses fail")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_theorem)

    sp = sub.add_parser("campaign", help="run a configured campaign")
    sp.add_argument("--config", required=True)
    sp.add_argument("--out")
    sp.add_argument("--workers", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--no-figures", action="store_true")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_campaign)

    sp = sub.add_parser("catalog", help="list the default ring catalog")
    sp.add_argument("--max-order", type=int, default=8)
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (SkewMcCoyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
