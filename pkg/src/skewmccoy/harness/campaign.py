"""Campaign orchestration and JSON report assembly."""

from __future__ import annotations

import json
import os
import tempfile
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .. import __version__
from ..checkers import (COUNTEREXAMPLE, FAILS, SKIPPED, VACUOUS, VERIFIED,
                        action_names, cached_profile, enumerate_actions,
                        fields_witness_check, hypothesis_profile, mccoy_search,
                        replay, two_primal_exploration,
                        verify_annihilator_nonzero, verify_coefficients_in_radical,
                        verify_compatible_membership, verify_lemma_generation,
                        verify_main_theorem, verify_maximal_prime,
                        verify_quasi_duo, verify_sn_transfer)
from ..errors import CapacityError, InvalidSpecError
from ..omonoid import build_monoid
from ..rings import build_ring
from ..search import fit_window
from ..series import build_action
from ..structure import LEFT, RIGHT
from .config import CampaignConfig
from .serialize import profile_dict

STATUSES = ("verified", "vacuous", "counterexample", "skipped", "capacity")


def _lemma_status(reports):
    statuses = [r.status for r in reports]
    if FAILS in statuses:
        return "counterexample"
    if all(s == SKIPPED for s in statuses):
        return "skipped"
    if all(s in (SKIPPED, VACUOUS) for s in statuses):
        return "vacuous"
    return "verified"


def _ring_instance(spec, cfg: CampaignConfig):
    entry = {"kind": "ring", "ring": spec}
    try:
        R = build_ring(spec)
        reports = []
        if "profile" in cfg.checkers or "lemmas" in cfg.checkers:
            entry["profile"] = profile_dict(cached_profile(R))
        if "lemmas" in cfg.checkers:
            reports += [verify_lemma_generation(R, cfg.lemma_bound), verify_quasi_duo(R),
                        verify_maximal_prime(R), verify_annihilator_nonzero(R)]
        if "sn_transfer" in cfg.checkers:
            reports += [verify_sn_transfer(R, n) for n in cfg.sn_degrees]
        if "fields" in cfg.checkers and R.is_commutative():
            D, shrunk = fit_window(build_monoid("N"), cfg.degree, R.order, cfg.budget)
            reports.append(fields_witness_check(R, D, budget=cfg.budget))
        entry["lemmas"] = [r.to_dict() for r in reports]
        entry["status"] = _lemma_status(reports) if reports else "verified"
        entry["stratum"] = "theorem" if hypothesis_profile(R).base_hypotheses else "exploration"
    except CapacityError as exc:
        entry.update(status="capacity", stratum="theorem", error=str(exc))
    return entry


def _resolve_actions(R, M, names):
    """Configured action names, or every enumerable one, as (label, action)."""
    if names is None:
        return enumerate_actions(R, M, compatible_only=False)
    known = action_names(R)
    out = []
    for name in names:
        parts = [p.strip() for p in name.split(",")]
        if len(parts) != len(M.generators):
            raise InvalidSpecError(f"action {name!r} needs {len(M.generators)} component(s) for {M.name}")
        missing = [p for p in parts if p not in known]
        if missing:
            raise InvalidSpecError(f"{R.name} has no endomorphism named {missing[0]!r} "
                                   f"(known: {', '.join(sorted(known))})")
        out.append((name, build_action(R, M, [known[p] for p in parts])))
    return out


def _series_instance(spec, R, mspec, label, action, cfg: CampaignConfig):
    M = action.monoid
    entry = {"kind": "series", "ring": spec, "monoid": M.name, "action": label}
    hp = hypothesis_profile(R, action)
    entry["hypotheses"] = {
        "abelian": hp.profile.abelian.holds,
        "semiregular": hp.profile.semiregular.holds,
        "radical_nilpotency_index": hp.profile.radical_nilpotency_index,
        "compatible": hp.compatible.holds,
        "compatibility_witness": None if hp.compatible.holds else hp.compatible.detail,
        "two_primal": hp.profile.two_primal.holds,
        "theorem_hypotheses_hold": hp.theorem_hypotheses_hold,
    }
    stratum = "theorem" if hp.theorem_hypotheses_hold else "exploration"
    entry["stratum"] = stratum
    p = hp.profile
    entry["two_primal_stratum"] = bool(p.two_primal and p.semiregular and p.radical_nilpotent
                                       and hp.compatible and not p.abelian)
    try:
        D, shrunk = fit_window(M, cfg.degree, R.order, cfg.budget)
    except CapacityError as exc:
        entry.update(status="capacity", error=str(exc))
        return entry
    if cfg.mode == "random":
        D = tuple(M.box(cfg.degree))
        shrunk = False
    entry["window"] = [M.format(s) for s in D]
    entry["window_shrunk"] = shrunk
    verdicts = []
    lemmas = []
    try:
        if "theorem" in cfg.checkers:
            if cfg.mode == "random":
                verdicts = [mccoy_search(action, D, side, mode="random", seed=cfg.seed,
                                         trials=cfg.trials) for side in (RIGHT, LEFT)]
            else:
                res = verify_main_theorem(action, D, budget=cfg.budget, explore=True)
                verdicts = [res.right, res.left]
        if "lemmas" in cfg.checkers:
            lemmas.append(verify_compatible_membership(R, action))
        if "lemma8" in cfg.checkers and cfg.mode == "exhaustive":
            lemmas.append(verify_coefficients_in_radical(action, D, budget=cfg.budget))
    except CapacityError as exc:
        entry.update(status="capacity", error=str(exc))
        return entry
    entry["verdicts"] = [v.to_dict() for v in verdicts]
    entry["replay_ok"] = all(replay(v) for v in verdicts)
    entry["lemmas"] = [r.to_dict() for r in lemmas]
    outcomes = [v.outcome for v in verdicts]
    if COUNTEREXAMPLE in outcomes or any(r.status == FAILS for r in lemmas):
        entry["status"] = "counterexample"
    elif VERIFIED in outcomes:
        entry["status"] = "verified"
    elif outcomes:
        entry["status"] = "vacuous"
    else:
        entry["status"] = _lemma_status(lemmas) if lemmas else "skipped"
    return entry


def _timed(fn, cfg, *args):
    t0 = time.perf_counter()
    entry = fn(*args)
    if cfg.timings:
        entry["seconds"] = round(time.perf_counter() - t0, 3)
    return entry


SERIES_CHECKERS = ("theorem", "lemma8", "lemmas")


def _jobs(cfg: CampaignConfig):
    jobs = []
    series = any(c in cfg.checkers for c in SERIES_CHECKERS)
    for spec in cfg.rings:
        jobs.append((_ring_instance, spec, cfg))
        if not series:
            continue
        R = build_ring(spec)
        for mspec in cfg.monoids:
            M = build_monoid(mspec)
            try:
                actions = _resolve_actions(R, M, cfg.actions_for(spec))
            except CapacityError as exc:
                jobs.append(("capacity", {"kind": "series", "ring": spec, "monoid": M.name,
                                          "action": "*", "stratum": "theorem",
                                          "status": "capacity", "error": str(exc)}))
                continue
            for label, act in actions:
                jobs.append((_series_instance, spec, R, mspec, label, act, cfg))
    return jobs


def run_campaign(cfg: CampaignConfig) -> dict:
    """Run every configured instance and return the report as a plain dict."""
    jobs = _jobs(cfg)

    def run(job):
        if job[0] == "capacity":
            return job[1]
        fn, *args = job
        return _timed(fn, cfg, *args)

    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            instances = list(pool.map(run, jobs))
    else:
        instances = [run(j) for j in jobs]
    for k, inst in enumerate(instances):
        inst["id"] = k

    report = {"version": __version__, "config": cfg.echo(), "instances": instances}
    if "two_primal" in cfg.checkers:
        rings = []
        for spec in cfg.rings:
            try:
                R = build_ring(spec)
                cached_profile(R)
                rings.append(R)
            except CapacityError:
                continue
        explo = {}
        for mspec in cfg.monoids:
            M = build_monoid(mspec)
            explo[M.name] = two_primal_exploration(rings, M, degree=min(cfg.degree, 1),
                                                   budget=cfg.budget).to_dict()
        report["summary"] = {"two_primal_exploration": explo}
    report["summary"] = summarize(instances, report.get("summary", {}))
    return report


def summarize(instances, extra=None) -> dict:
    counts = {s: 0 for s in STATUSES}
    for inst in instances:
        counts[inst["status"]] += 1
    theorem_cx = sum(1 for i in instances
                     if i["status"] == "counterexample" and i.get("stratum") == "theorem")
    explo_cx = sum(1 for i in instances
                   if i["status"] == "counterexample" and i.get("stratum") == "exploration")
    out = {"instances": len(instances), "counts": counts,
           "theorem_counterexamples": theorem_cx,
           "exploration_counterexamples": explo_cx,
           "replay_ok": all(i.get("replay_ok", True) for i in instances)}
    out.update(extra or {})
    return out


def exit_code(report: dict) -> int:
    s = report["summary"]
    if s["theorem_counterexamples"]:
        return 1
    if s["counts"]["capacity"]:
        return 3
    return 0


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def write_report(report: dict, path) -> Path:
    """Atomic write: temp file in the target directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=path.name + ".", dir=path.parent)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(dumps(report))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path
