"""Figure rendering for binding profiles and experiment reports.

matplotlib is imported lazily with the Agg backend so the library works
headless and without a display.
"""

from __future__ import annotations

from .boundedness import BindingProfile
from .experiments import ExperimentReport


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_profile_figure(profile: BindingProfile, path: str, title: str = "binding profile") -> None:
    """Scatter of observed (clique, treewidth) pairs with the envelope on top."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5, 3.5))
    xs = [omega for omega, _ in sorted(profile.points)]
    ys = [tw for _, tw in sorted(profile.points)]
    ax.scatter(xs, ys, s=18, color="#4878a8", label="observed", zorder=3)
    env_x = sorted(profile.envelope)
    env_y = [profile.envelope[x] for x in env_x]
    ax.step(env_x, env_y, where="mid", color="#b04030", label="envelope", zorder=2)
    ax.set_xlabel("clique number of induced subgraph")
    ax.set_ylabel("treewidth of induced subgraph")
    ax.set_title(title)
    ax.legend(frameon=False)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_report_figure(report: ExperimentReport, path: str) -> None:
    """One summary figure per experiment kind."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 3.5))
    kind = report.experiment

    if kind == "lemma4":
        trials = [r for r in report.instances if "max_branch_clique" in r]
        xs = [r["trial"] for r in trials]
        ys = [r["max_branch_clique"] for r in trials]
        ax.scatter(xs, ys, s=10, color="#4878a8", label="max branch-set clique")
        ax.axhline(3, color="#b04030", linestyle="--", label="bound 3")
        ax.set_xlabel("trial")
        ax.set_ylabel("max clique over branch sets")
    elif kind == "obs7":
        trials = [r for r in report.instances if "treewidth" in r]
        xs = [len(r["vertices"]) for r in trials]
        ys = [r["treewidth"] for r in trials]
        ax.scatter(xs, ys, s=10, color="#4878a8", label="triangle-free subgraph")
        ax.axhline(2, color="#b04030", linestyle="--", label="bound 2")
        ax.set_xlabel("subgraph order")
        ax.set_ylabel("treewidth")
    elif kind == "theorem5":
        names, bars_a, bars_b, bounds_a, bounds_b = [], [], [], [], []
        for r in report.instances:
            if "checks" not in r:
                continue
            names.append(r["instance"])
            bars_a.append(r["clique_g_prime"])
            bounds_a.append(3 * r["clique_pattern"])
            bars_b.append(r["treewidth_g_prime"])
            bounds_b.append(r["k"])
        pos = range(len(names))
        ax.bar([p - 0.15 for p in pos], bars_a, width=0.3, color="#4878a8", label="clique of union")
        ax.bar([p + 0.15 for p in pos], bars_b, width=0.3, color="#70a860", label="treewidth of union")
        ax.plot(pos, bounds_a, "v", color="#b04030", label="3x pattern clique (upper)")
        ax.plot(pos, bounds_b, "^", color="#303030", label="k (lower)")
        ax.set_xticks(list(pos))
        ax.set_xticklabels(names, rotation=20, ha="right")
    else:
        counts = report.counts
        ax.bar(list(counts), [counts[c] for c in counts], color="#4878a8")
        ax.set_ylabel("instances")

    ax.set_title(f"{kind}: verdict {report.verdict}")
    if ax.get_legend_handles_labels()[0]:
        ax.legend(frameon=False, fontsize=8)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
