"""Matplotlib renderings of the figure tables and comparison profiles."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

plt.rcParams.update(
    {
        "font.size": 10,
        "axes.linewidth": 0.8,
        "lines.linewidth": 1.4,
        "legend.frameon": False,
        "savefig.dpi": 150,
    }
)


def _finish(fig, ax, path, xlabel, ylabel, logx=False):
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if logx:
        ax.set_xscale("log")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)


def plot_table(table, path):
    """Render one of the figure tables to an image file."""
    fig, ax = plt.subplots(figsize=(5, 3.6))
    name = table.name
    if name in ("fig2", "fig3"):
        pe = table.column("pe")
        for col in table.columns[1:]:
            ax.plot(pe, table.column(col), label=col, ls="--" if "order4" in col else "-")
        ylabel = r"$\beta_1$" if name == "fig2" else r"$\beta_2$"
        _finish(fig, ax, path, r"$p_e$", ylabel, logx=True)
    elif name == "fig4":
        pe = table.column("pe")
        xi1 = table.column("xi1")
        first = pe == pe[0]
        ax.plot(xi1[first], table.column("theta_series_8terms")[first], "k-", label="series")
        for val, style in zip(np.unique(pe)[::-1], ("-", ":")):
            sel = pe == val
            ax.plot(xi1[sel], table.column("theta_order4")[sel], "C0" + style, label=f"order 4, pe={val:g}")
            ax.plot(xi1[sel], table.column("theta_order6")[sel], "C1" + style, label=f"order 6, pe={val:g}")
        _finish(fig, ax, path, r"$\xi_1$", r"$\theta$")
    elif name == "fig6":
        pe = table.column("pe")
        alpha = table.column("alpha")
        for k, val in enumerate(np.unique(pe)):
            sel = pe == val
            ax.plot(alpha[sel], table.column("beta1_exchange_d0")[sel], f"C{k}-", label=f"d=0, pe={val:g}")
            ax.plot(alpha[sel], table.column("beta1_exchange_d1")[sel], f"C{k}--")
        _finish(fig, ax, path, r"$\alpha$", r"$\beta_1$")
    else:
        plt.close(fig)
        raise ValueError(f"no plot defined for {name!r}")


def plot_profiles(xi, profiles, path, ylabel=r"$\theta_0$"):
    """Overlay centreline profiles keyed by method name."""
    fig, ax = plt.subplots(figsize=(5, 3.6))
    for name, values in profiles.items():
        ax.plot(xi, values, label=name)
    _finish(fig, ax, path, r"$\xi = x/a$", ylabel)
