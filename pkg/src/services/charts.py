"""
Scatter charts of a verification sweep against the proven and conjectured bounds.
"""
from pathlib import Path
from typing import Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import seaborn as sns  # noqa: E402

from src.models import PolygonRecord  # noqa: E402
from src.services.verification import records_frame  # noqa: E402
from src.utils.logger import get_logger  # noqa: E402

logger = get_logger("services.charts")


def plot_sweep(records: list[PolygonRecord], path: Union[str, Path]) -> Path:
    """
    Plot area and perimeter against cycle count for every swept polygon.

    The left panel shows area with the line 6c - 6, the right panel shows
    perimeter with the proven line 3.5c - 1.5 and the conjectured 4c - 2.

    Args:
        records: Rows of a verification report
        path: Output image path (format from the extension)

    Returns:
        The path written

    Raises:
        ValueError: If records is empty
    """
    if not records:
        raise ValueError("Nothing to plot: no records")

    df = records_frame(records)
    path = Path(path)
    sns.set_style("whitegrid")

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(14, 6))
    c = np.arange(1, df["cyc"].max() + 2)

    sns.scatterplot(data=df, x="cyc", y="area", ax=ax1, alpha=0.6, edgecolor=None)
    ax1.plot(c, 6 * c - 6, color="#d62728", label="6c - 6")
    ax1.set_title("Area vs cycles", fontsize=14, fontweight="bold")
    ax1.set_xlabel("cyc")
    ax1.set_ylabel("area")
    ax1.legend()

    sns.scatterplot(data=df, x="cyc", y="perim", ax=ax2, alpha=0.6, edgecolor=None)
    ax2.plot(c, 3.5 * c - 1.5, color="#d62728", label="3.5c - 1.5")
    ax2.plot(c, 4 * c - 2, color="#2ca02c", linestyle="--", label="4c - 2")
    ax2.set_title("Perimeter vs cycles", fontsize=14, fontweight="bold")
    ax2.set_xlabel("cyc")
    ax2.set_ylabel("perim")
    ax2.legend()

    plt.tight_layout()
    plt.savefig(path, dpi=300, bbox_inches="tight")
    plt.close(fig)
    logger.info(f"Saved sweep chart ({len(df)} polygons) to {path}")
    return path
