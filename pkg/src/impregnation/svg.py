"""
Standalone SVG plots of a finished run, read back from its CSV artifacts.

``balance.svg`` overlays inflow and content against time; ``profiles.svg``
has one panel for the concentration and one for the coverage, with a line
per dumped front position.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

from .exceptions import ImpregnationError

WIDTH, HEIGHT = 800, 600
_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf")


class MissingArtifactError(ImpregnationError, FileNotFoundError):
    pass


def _read_csv(path: Path) -> dict[str, np.ndarray]:
    if not path.is_file():
        raise MissingArtifactError(f"missing artifact: {path}")
    with path.open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise MissingArtifactError(f"artifact has no data rows: {path}")
    return {key: np.array([float(r[key]) for r in rows]) for key in rows[0]}


def nice_ticks(lo: float, hi: float, target: int = 5) -> list[float]:
    if not hi > lo:
        hi = lo + 1.0
    raw = (hi - lo) / target
    mag = 10.0 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    start = math.ceil(lo / step - 1e-9) * step
    ticks = []
    t = start
    while t <= hi + 1e-9 * step:
        ticks.append(0.0 if abs(t) < 1e-12 * step else t)
        t += step
    return ticks


def _fmt_tick(v: float) -> str:
    return f"{v:.4g}"


class _Panel:
    def __init__(self, x0, y0, w, h, xlim, ylim):
        self.x0, self.y0, self.w, self.h = x0, y0, w, h
        self.xlim, self.ylim = xlim, ylim
        self.parts: list[str] = []

    def px(self, x):
        lo, hi = self.xlim
        return self.x0 + (np.asarray(x) - lo) / (hi - lo) * self.w

    def py(self, y):
        lo, hi = self.ylim
        return self.y0 + self.h - (np.asarray(y) - lo) / (hi - lo) * self.h

    def axes(self, xlabel: str, ylabel: str, title: str = ""):
        p = self.parts
        p.append(f'<rect x="{self.x0}" y="{self.y0}" width="{self.w}" height="{self.h}" '
                 'fill="none" stroke="#000" stroke-width="1"/>')
        base = self.y0 + self.h
        for t in nice_ticks(*self.xlim):
            x = float(self.px(t))
            p.append(f'<line x1="{x:.2f}" y1="{base}" x2="{x:.2f}" y2="{base + 5}" stroke="#000"/>')
            p.append(f'<text x="{x:.2f}" y="{base + 18}" font-size="11" text-anchor="middle">'
                     f'{_fmt_tick(t)}</text>')
        for t in nice_ticks(*self.ylim):
            y = float(self.py(t))
            p.append(f'<line x1="{self.x0 - 5}" y1="{y:.2f}" x2="{self.x0}" y2="{y:.2f}" stroke="#000"/>')
            p.append(f'<text x="{self.x0 - 8}" y="{y + 4:.2f}" font-size="11" text-anchor="end">'
                     f'{_fmt_tick(t)}</text>')
        cx = self.x0 + self.w / 2
        p.append(f'<text x="{cx:.2f}" y="{base + 38}" font-size="13" text-anchor="middle">'
                 f'{escape(xlabel)}</text>')
        cy = self.y0 + self.h / 2
        p.append(f'<text x="{self.x0 - 50}" y="{cy:.2f}" font-size="13" text-anchor="middle" '
                 f'transform="rotate(-90 {self.x0 - 50} {cy:.2f})">{escape(ylabel)}</text>')
        if title:
            p.append(f'<text x="{cx:.2f}" y="{self.y0 - 10}" font-size="14" text-anchor="middle">'
                     f'{escape(title)}</text>')

    def line(self, x, y, color: str, width: float):
        pts = " ".join(f"{a:.2f},{b:.2f}" for a, b in zip(self.px(x), self.py(y)))
        self.parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" '
                          f'stroke-width="{width}" stroke-linejoin="round"/>')

    def legend(self, entries):
        for k, (label, color, width) in enumerate(entries):
            y = self.y0 + 16 + 18 * k
            x = self.x0 + self.w - 130
            self.parts.append(f'<line x1="{x}" y1="{y}" x2="{x + 24}" y2="{y}" stroke="{color}" '
                              f'stroke-width="{width}"/>')
            self.parts.append(f'<text x="{x + 30}" y="{y + 4}" font-size="11">{escape(label)}</text>')


def _document(parts: list[str]) -> str:
    body = "\n".join(parts)
    return (f'<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}">\n'
            f'<rect width="{WIDTH}" height="{HEIGHT}" fill="#fff"/>\n'
            f'<g font-family="sans-serif">\n{body}\n</g>\n</svg>\n')


def _limits(*arrays) -> tuple[float, float]:
    lo = min(float(np.min(a)) for a in arrays)
    hi = max(float(np.max(a)) for a in arrays)
    if hi <= lo:
        hi = lo + 1.0
    return lo, hi


def balance_svg(data: dict[str, np.ndarray]) -> str:
    tau, m1, m2 = data["tau"], data["m1"], data["m2"]
    panel = _Panel(100, 60, 640, 440, _limits(np.append(tau, 0.0)), _limits(np.append(m1, 0.0), m2))
    panel.axes("tau", "solute amount", "inflow M1 vs content M2")
    panel.line(tau, m1, "#000", 4.0)
    panel.line(tau, m2, "#e6c200", 1.2)
    panel.legend([("M1 (inflow)", "#000", 4.0), ("M2 (content)", "#e6c200", 1.2)])
    return _document(panel.parts)


def profiles_svg(profiles: list[tuple[str, dict[str, np.ndarray]]]) -> str:
    xlim = (0.0, 1.0)
    left = _Panel(80, 60, 300, 440, xlim, (0.0, 1.0))
    right = _Panel(470, 60, 300, 440, xlim, (0.0, 1.0))
    left.axes("rho", "u", "solute in liquid")
    right.axes("rho", "theta", "adsorbed coverage")
    entries = []
    for k, (label, p) in enumerate(profiles):
        color = _PALETTE[k % len(_PALETTE)]
        left.line(p["rho_mid"], p["u"], color, 1.5)
        right.line(p["rho_mid"], p["theta"], color, 1.5)
        entries.append((label, color, 1.5))
    right.legend(entries)
    return _document(left.parts + right.parts)


def _fraction_key(path: Path) -> float:
    try:
        return float(path.stem.removeprefix("profile_"))
    except ValueError:
        return math.inf


def render_svg(output_dir: str | Path) -> list[Path]:
    """Write ``balance.svg`` and ``profiles.svg`` next to the run's CSV files."""
    out = Path(output_dir)
    balance = _read_csv(out / "balance.csv")
    prof_paths = sorted((out / "profiles").glob("profile_*.csv"), key=_fraction_key)
    if not prof_paths:
        raise MissingArtifactError(f"missing artifact: {out / 'profiles'}/profile_*.csv")
    profiles = [(f"rho_f = {p.stem.removeprefix('profile_')}", _read_csv(p)) for p in prof_paths]

    written = []
    for name, doc in (("balance.svg", balance_svg(balance)), ("profiles.svg", profiles_svg(profiles))):
        path = out / name
        path.write_text(doc)
        written.append(path)
    return written
