"""Bar charts of component ranks, written straight to image files."""


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def plot_ranks(ranks, path, title="", ylabel="rank"):
    """ranks: {homological degree: rank}."""
    plt = _pyplot()
    idx = sorted(ranks)
    fig, ax = plt.subplots(figsize=(4.5, 3.0))
    bars = ax.bar([str(n) for n in idx], [ranks[n] for n in idx], color="#4c72b0", width=0.6)
    for b, n in zip(bars, idx):
        ax.annotate(str(ranks[n]), (b.get_x() + b.get_width() / 2, b.get_height()),
                    ha="center", va="bottom", fontsize=8)
    ax.set_xlabel("homological degree")
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title, fontsize=10)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_tflat_levels(counts, path, title=""):
    """counts: {level: (number of T-flats, number with nonzero multiplicity)}."""
    plt = _pyplot()
    idx = sorted(counts)
    fig, ax = plt.subplots(figsize=(4.5, 3.0))
    xs = list(range(len(idx)))
    ax.bar([x - 0.2 for x in xs], [counts[n][0] for n in idx], width=0.4, label="T-flats", color="#4c72b0")
    ax.bar([x + 0.2 for x in xs], [counts[n][1] for n in idx], width=0.4, label="connected", color="#dd8452")
    ax.set_xticks(xs)
    ax.set_xticklabels([str(n) for n in idx])
    ax.set_xlabel("level")
    ax.set_ylabel("count")
    ax.legend(frameon=False, fontsize=8)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
