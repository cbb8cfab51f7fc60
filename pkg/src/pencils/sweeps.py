"""Scaling sweeps over the construction families and log-log exponent fits.

Each row is computed exactly (only wall_time_ms varies between runs); the
fits are the one place floats are expected, since they summarize growth
rates rather than counts.
"""

from __future__ import annotations

import math
import multiprocessing
import time
from dataclasses import dataclass
from fractions import Fraction

from .constructions import (
    build_farey_shift_construction,
    build_grid_footnote_config,
    build_m_pencil_config,
    build_symmetric_farey_construction,
    pencils_from_graph,
    standard_shift_centres,
)
from .errors import NonpositiveValue, TooFewPoints
from .graphs import shifted_restricted_ratio_set
from .richpoints import rich_points

__all__ = [
    "SweepRow",
    "ExponentFit",
    "CONSTRUCTION_TAGS",
    "sweep",
    "fit_exponent",
    "fitted_ceiling_violations",
    "tracking_ratios",
]

CONSTRUCTION_TAGS = ("farey-shift", "symmetric", "grid-footnote", "m-pencil")


@dataclass(frozen=True)
class SweepRow:
    n: int
    d: Fraction
    construction: str
    edge_count: int
    ratio_set_sizes: tuple
    rich_count: int
    pencil_sizes: tuple
    wall_time_ms: int


def _centre_ratio_sizes(graph, centres) -> tuple:
    """|(A - x)/_G(B - y)| per affine centre (x, y); infinite centres have
    no ratio set and are skipped."""
    sizes = []
    for centre in centres:
        if centre.is_infinite:
            continue
        x, y = centre.to_affine()
        sizes.append(len(shifted_restricted_ratio_set(graph, -x, -y)))
    return tuple(sizes)


def _compute_row(args) -> SweepRow:
    construction, n, d, centres, m = args
    start = time.perf_counter()
    if construction == "farey-shift":
        built = build_farey_shift_construction(n, d)
        used_centres = centres if centres is not None else standard_shift_centres()
        report = rich_points(pencils_from_graph(built, used_centres))
        edge_count = built.edge_count
        ratio_sizes = _centre_ratio_sizes(built.graph, used_centres)
        rich_count, pencil_sizes = report.count, report.pencil_sizes
    elif construction == "symmetric":
        built = build_symmetric_farey_construction(n)
        edge_count = built.edge_count
        ratio_sizes = (len(shifted_restricted_ratio_set(built.graph, 0, 0)),)
        if centres is not None:
            report = rich_points(pencils_from_graph(built, centres))
            rich_count, pencil_sizes = report.count, report.pencil_sizes
        else:
            rich_count, pencil_sizes = 0, ()
    elif construction == "grid-footnote":
        report = rich_points(build_grid_footnote_config(n))
        # the covered grid plays the edge-point role for this family
        edge_count = n * n
        ratio_sizes = ()
        rich_count, pencil_sizes = report.count, report.pencil_sizes
    elif construction == "m-pencil":
        if m is None:
            raise ValueError("m-pencil sweep needs m")
        built = build_symmetric_farey_construction(n)
        config = build_m_pencil_config(m, n)
        report = rich_points(config)
        edge_count = built.edge_count
        ratio_sizes = _centre_ratio_sizes(
            built.graph, [pc.centre for pc in config.pencils])
        rich_count, pencil_sizes = report.count, report.pencil_sizes
    else:
        raise ValueError(f"unknown construction tag {construction!r}")
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    return SweepRow(
        n=n,
        d=Fraction(d),
        construction=construction,
        edge_count=edge_count,
        ratio_set_sizes=ratio_sizes,
        rich_count=rich_count,
        pencil_sizes=pencil_sizes,
        wall_time_ms=elapsed_ms,
    )


def sweep(construction: str, n_values, d=0, centres=None, m=None,
          threads: int = 1) -> list[SweepRow]:
    """One exactly-computed row per n, in ascending n order.

    Rows are independent, so threads > 1 farms them out to worker
    processes; every column except wall_time_ms is deterministic.
    """
    if construction not in CONSTRUCTION_TAGS:
        raise ValueError(f"unknown construction tag {construction!r}")
    n_values = [int(n) for n in n_values]
    if n_values != sorted(n_values):
        raise ValueError("n_values must be sorted ascending")
    jobs = [(construction, n, Fraction(d), centres, m) for n in n_values]
    if threads > 1 and len(jobs) > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(min(threads, len(jobs))) as pool:
            return pool.map(_compute_row, jobs)
    return [_compute_row(job) for job in jobs]


@dataclass(frozen=True)
class ExponentFit:
    slope: float
    intercept: float
    r_squared: float
    n_range: tuple

    def fitted(self, n: int) -> float:
        return math.exp(self.intercept) * n ** self.slope


def fit_exponent(rows, field: str = "edge_count") -> ExponentFit:
    """Least-squares slope of ln(value) against ln(n)."""
    points = []
    for row in rows:
        value = getattr(row, field)
        if value <= 0:
            raise NonpositiveValue(f"{field} = {value} at n = {row.n}")
        points.append((math.log(row.n), math.log(value)))
    if len({x for x, _ in points}) < 3:
        raise TooFewPoints("need at least 3 distinct n values")
    mean_x = sum(x for x, _ in points) / len(points)
    mean_y = sum(y for _, y in points) / len(points)
    sxx = sum((x - mean_x) ** 2 for x, _ in points)
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in points)
    syy = sum((y - mean_y) ** 2 for _, y in points)
    slope = sxy / sxx
    intercept = mean_y - slope * mean_x
    r_squared = 1.0 if syy == 0 else min(1.0, sxy * sxy / (sxx * syy))
    return ExponentFit(
        slope=slope,
        intercept=intercept,
        r_squared=r_squared,
        n_range=(min(row.n for row in rows), max(row.n for row in rows)),
    )


def fitted_ceiling_violations(rows, field: str, exponent,
                              tolerance: float = 0.05):
    """Consecutive-n crossings of the running constant ceiling.

    value/n^exponent estimates the constant in front of a claimed power
    law; the ceiling at each n is the largest ratio fitted so far, and a
    violation is a step that crosses it by more than the tolerance.  An
    empty list means the tracked constant stayed monotone-bounded."""
    violations = []
    ceiling = None
    for n, ratio in tracking_ratios(rows, field, exponent):
        if ceiling is not None and ratio > (1.0 + tolerance) * ceiling:
            violations.append((n, ratio, ceiling))
        ceiling = ratio if ceiling is None else max(ceiling, ratio)
    return violations


def tracking_ratios(rows, field: str, exponent) -> list[tuple[int, float]]:
    """value / n^exponent per row; the constant-tracking companion to an
    asymptotic claim that cannot be asserted at finite n."""
    e = float(Fraction(exponent))
    return [(row.n, getattr(row, field) / row.n ** e) for row in rows]
