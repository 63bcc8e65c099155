"""Figures rendered next to a campaign report (Agg backend, PNG)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .campaign import STATUSES  # noqa: E402

_COLORS = {"verified": "#4c72b0", "vacuous": "#bbbbbb", "counterexample": "#c44e52",
           "skipped": "#dd8452", "capacity": "#8172b2"}


def _status_chart(report, path):
    strata = ("theorem", "exploration")
    counts = {st: {s: 0 for s in STATUSES} for st in strata}
    for inst in report["instances"]:
        counts[inst.get("stratum", "theorem")][inst["status"]] += 1
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    left = [0, 0]
    for s in STATUSES:
        vals = [counts[st][s] for st in strata]
        ax.barh(strata, vals, left=left, color=_COLORS[s], label=s)
        left = [a + b for a, b in zip(left, vals)]
    ax.set_xlabel("instances")
    ax.legend(fontsize=7, ncol=len(STATUSES), loc="upper center",
              bbox_to_anchor=(0.5, -0.22), frameon=False)
    ax.set_title("instance status by stratum")
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)


def _zero_divisor_chart(report, path):
    rows = [i for i in report["instances"] if i["kind"] == "series" and i.get("verdicts")]
    fig, ax = plt.subplots(figsize=(7.0, max(2.5, 0.18 * len(rows) + 1.0)))
    labels, vals, cols = [], [], []
    for inst in rows:
        v = inst["verdicts"][0]
        labels.append(f"{inst['ring']} | {inst['monoid']} | {inst['action']}")
        vals.append(v["zero_divisor_pairs"])
        cols.append(_COLORS[inst["status"]])
    ax.barh(range(len(rows)), vals, color=cols)
    ax.set_yticks(range(len(rows)))
    ax.set_yticklabels(labels, fontsize=5)
    ax.invert_yaxis()
    if any(vals):
        ax.set_xscale("symlog")
    ax.set_xlabel("zero-divisor pairs in window")
    ax.set_title("zero-divisor pairs per series instance")
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)


def render_figures(report: dict, report_path) -> list[Path]:
    """Write ``<stem>_status.png`` and ``<stem>_zero_divisors.png`` beside the report."""
    base = Path(report_path)
    out = [base.with_name(base.stem + "_status.png"),
           base.with_name(base.stem + "_zero_divisors.png")]
    _status_chart(report, out[0])
    _zero_divisor_chart(report, out[1])
    return out
