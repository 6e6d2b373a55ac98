"""
This module is used to plot labelled families of spectral points
"""


import logging
import warnings
from typing import Dict, List, Optional, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # pylint: disable=wrong-import-position

warnings.filterwarnings("ignore", category=UserWarning, module="matplotlib")

log = logging.getLogger("main.utils.plot")


class Plot:
    COLORS = ("black", "orange", "navy", "green", "red", "brown")

    def __init__(self, families: Dict[str, List[Tuple[float, float]]], title: str):
        self.families = families
        self.title = title

        self.lines: List[Tuple[float, str]] = []

    def add_vertical_lines(self, level_color: List[Tuple[Optional[float], str]]) -> None:
        for level, color in level_color:
            if level is None:
                continue

            self.lines.append((level, color))

    def draw(self):
        fig, ax = plt.subplots(figsize=(12, 4))

        for i, (label, points) in enumerate(self.families.items()):
            if len(points) == 0:
                continue

            x, y = zip(*points)
            ax.scatter(
                x,
                y,
                s=12,
                marker="o",
                color=self.COLORS[i % len(self.COLORS)],
                label=label,
            )

        for level, color in self.lines:
            ax.axvline(level, color=color, linewidth=0.8, linestyle="--")

        ax.set_title(self.title)
        ax.set_xlabel("spectral parameter")
        ax.legend(loc="best")

        return fig

    def save(self, path: str) -> None:
        fig = self.draw()
        fig.savefig(path, bbox_inches="tight")
        plt.close(fig)

        log.info(f"Plot saved to {path}")
