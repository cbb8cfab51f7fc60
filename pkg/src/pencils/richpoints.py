"""Exact computation of the points lying on at least one line of every pencil.

Candidates come from pairwise meets of the two smallest pencils, so the
cost is O(s1*s2*(m-2)) hash tests rather than quadratic in the total line
count.  Everything is integer arithmetic on canonical homogeneous triples.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .constructions import Pencil, PencilConfig
from .errors import PointIsCentre, TooFewPencils
from .projective import ProjPoint, line_through, meet

__all__ = ["RichPointReport", "point_on_pencil", "rich_points"]


@dataclass(frozen=True)
class RichPointReport:
    """The exact rich-point set of a configuration, with bookkeeping."""

    points: frozenset
    pencil_sizes: tuple
    config_label: str
    # centres that met the richness test for every other pencil; excluded
    # from points (a centre lies on all of its own lines trivially)
    excluded_centres: tuple = field(default_factory=tuple)

    @property
    def count(self) -> int:
        return len(self.points)

    @property
    def infinite_points(self) -> frozenset:
        return frozenset(p for p in self.points if p.is_infinite)

    @property
    def infinite_count(self) -> int:
        return len(self.infinite_points)

    def sorted_points(self) -> list[ProjPoint]:
        return sorted(self.points)

    def __repr__(self):
        return (f"RichPointReport({self.config_label!r}, count={self.count}, "
                f"infinite={self.infinite_count}, "
                f"excluded={len(self.excluded_centres)})")


def point_on_pencil(p: ProjPoint, pencil: Pencil) -> bool:
    """True iff some line of the pencil passes through p, via one join and
    one hash lookup on its canonical form."""
    if p == pencil.centre:
        raise PointIsCentre(f"{p} is the pencil centre")
    return line_through(pencil.centre, p) in pencil.lines


def rich_points(config: PencilConfig) -> RichPointReport:
    """All points incident to at least one line from every pencil.

    Pencil centres are never reported as rich points; centres that would
    otherwise qualify are listed in excluded_centres.  Points at infinity
    are ordinary members of the result.
    """
    if config.m < 2:
        raise TooFewPencils("richness needs at least 2 pencils")
    by_size = sorted(config.pencils, key=lambda pc: pc.size)
    first, second, rest = by_size[0], by_size[1], by_size[2:]

    candidates = set()
    second_lines = list(second.lines)
    for l0 in first.lines:
        for l1 in second_lines:
            if l0 != l1:
                candidates.add(meet(l0, l1))
    # A line shared by the two seed pencils witnesses both at once; points
    # on it only show up as meets with a pencil NOT containing that line.
    for shared in first.lines & second.lines:
        host = next((pc for pc in rest if shared not in pc.lines), None)
        if host is None:
            raise ValueError(
                f"line {shared} belongs to every pencil; every point on it "
                f"is rich, so the rich set is infinite"
            )
        candidates.update(meet(shared, l2) for l2 in host.lines)

    centre_set = {pc.centre for pc in config.pencils}
    points = set()
    excluded = []
    for cand in candidates:
        if cand in centre_set:
            others = [pc for pc in config.pencils if pc.centre != cand]
            if all(point_on_pencil(cand, pc) for pc in others):
                excluded.append(cand)
            continue
        if all(point_on_pencil(cand, pc) for pc in rest):
            points.add(cand)

    return RichPointReport(
        points=frozenset(points),
        pencil_sizes=tuple(pc.size for pc in config.pencils),
        config_label=config.label,
        excluded_centres=tuple(sorted(excluded)),
    )
