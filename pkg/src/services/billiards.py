"""
Billiards on grid polygons: beam tracing, the billiards permutation, trajectories
and shoreline counts.

Boundary indices are 0-based positions in GridPolygon.boundary throughout this
module; BilliardsPermutation converts to the 1-based labels shown to users.
"""
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Literal, NamedTuple, Optional

from src.geometry.grid import (
    PANE_ANGLE,
    Cell,
    Direction,
    DPoint,
    Orient,
    Pane,
    PaneType,
    cross,
    other_cell,
    pane_midpoint,
    pane_of_type,
)
from src.geometry.polygon import GridPolygon, signed_area2, vertex_angle
from src.models import AnalysisReport, CycleSummary, ShorelineSummary
from src.utils.logger import get_logger

logger = get_logger("services.billiards")

TriangleOrientation = Literal["up", "down", "none"]


class NotBoundaryError(ValueError):
    """Raised when a pane is not on the boundary of the polygon."""
    pass


class CycleTooSmallError(ValueError):
    """Raised when shorelines are requested for a 3-cycle."""
    pass


class CollinearOverlapError(AssertionError):
    """Raised when two distinct trajectories share a collinear piece of segment."""
    pass


class ConsistencyError(AssertionError):
    """Raised when a beam or trip leaves the polygon other than through a boundary pane."""
    pass


# (pane type, orientation of the interior cell) -> emitted direction
_EMISSION = {
    (PaneType.H, Orient.U): Direction.NE,
    (PaneType.H, Orient.D): Direction.SE,
    (PaneType.R, Orient.U): Direction.SE,
    (PaneType.R, Orient.D): Direction.W,
    (PaneType.L, Orient.D): Direction.NE,
    (PaneType.L, Orient.U): Direction.W,
}

TRAVEL_DIRECTIONS = frozenset({Direction.NE, Direction.SE, Direction.W})


class BeamTrace(NamedTuple):
    start: int
    end: int
    segment: tuple[DPoint, DPoint]
    crossings: int
    direction: Direction
    cells: tuple[Cell, ...]


def emission_direction(P: GridPolygon, b: Pane) -> Direction:
    """
    Direction of the beam leaving the midpoint of a boundary pane.

    Raises:
        NotBoundaryError: If b is not a boundary pane of P
    """
    if b not in P.boundary_index:
        raise NotBoundaryError(f"{b!r} is not a boundary pane of the polygon")
    return _EMISSION[(b.ptype, P.inner_cell[b].orient)]


def reflect_direction(d: Direction, ptype: PaneType) -> Direction:
    """Mirror image of a travel direction across a line of the given pane family."""
    return Direction.from_angle(2 * PANE_ANGLE[ptype] - d.angle)


def trace_beam(P: GridPolygon, i: int) -> BeamTrace:
    """
    Follow the beam emitted at boundary pane i to the next boundary pane.

    Inside each cell the beam enters through one pane and leaves through the pane
    of the type that is neither the entry type nor parallel to the travel direction.

    Args:
        P: Grid polygon
        i: 0-based boundary index

    Returns:
        BeamTrace with the arrival index, the straight segment and the cells crossed

    Raises:
        IndexError: If i is out of range
        ConsistencyError: If the walk does not end at a boundary pane midpoint
    """
    if not 0 <= i < P.perim:
        raise IndexError(f"Boundary index {i} out of range for perimeter {P.perim}")
    start_pane = P.boundary[i]
    d = emission_direction(P, start_pane)
    travel_type = d.parallel_type
    cell = P.inner_cell[start_pane]
    entry = start_pane.ptype
    start = pane_midpoint(start_pane)
    pos = start
    crossed = []

    while True:
        if cell not in P.cells or len(crossed) >= P.area:
            raise ConsistencyError(f"Beam from {start_pane!r} escaped the polygon at {cell!r}")
        crossed.append(cell)
        exit_type = PaneType(3 - travel_type - entry)
        exit_pane = pane_of_type(cell, exit_type)
        pos = pos + d.step
        if pos != pane_midpoint(exit_pane):
            raise ConsistencyError(f"Beam from {start_pane!r} missed the midpoint of {exit_pane!r}")
        if exit_pane in P.boundary_index:
            return BeamTrace(
                start=i,
                end=P.boundary_index[exit_pane],
                segment=(start, pos),
                crossings=len(crossed),
                direction=d,
                cells=tuple(crossed),
            )
        cell = other_cell(exit_pane, cell)
        entry = exit_type


@lru_cache(maxsize=4096)
def beam_table(P: GridPolygon) -> tuple[BeamTrace, ...]:
    """All beam traces of P, indexed by starting boundary index."""
    return tuple(trace_beam(P, i) for i in range(P.perim))


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BilliardsPermutation:
    """
    A permutation of 0-based boundary indices.

    Cycles start at their smallest element and are listed by that element, so the
    cycle structure does not depend on how the permutation was built.
    """

    next: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.next) != list(range(len(self.next))):
            raise ValueError(f"Not a permutation of 0..{len(self.next) - 1}: {self.next}")

    @property
    def n(self) -> int:
        return len(self.next)

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n
        result = []
        for i in range(self.n):
            if seen[i]:
                continue
            cycle = []
            j = i
            while not seen[j]:
                seen[j] = True
                cycle.append(j)
                j = self.next[j]
            result.append(tuple(cycle))
        return tuple(result)

    @property
    def cyc(self) -> int:
        return len(self.cycles)

    @property
    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles), reverse=True))

    @property
    def alpha(self) -> dict[int, int]:
        """Number of cycles of each size."""
        return dict(sorted(Counter(len(c) for c in self.cycles).items()))

    def cycles_one_based(self) -> list[list[int]]:
        return [[k + 1 for k in c] for c in self.cycles]

    def cycle_notation(self) -> str:
        return "".join("(" + " ".join(str(k) for k in c) + ")" for c in self.cycles_one_based())

    def inverse(self) -> "BilliardsPermutation":
        inv = [0] * self.n
        for i, j in enumerate(self.next):
            inv[j] = i
        return BilliardsPermutation(tuple(inv))

    def relabel(self, start: int) -> "BilliardsPermutation":
        """Rename 0-based index `start` to 0 and shift the others cyclically."""
        n = self.n
        return BilliardsPermutation(
            tuple((self.next[(k + start) % n] - start) % n for k in range(n))
        )

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "BilliardsPermutation":
        """Build from 1-based cycles; indices not mentioned are fixed points."""
        nxt = list(range(n))
        for cycle in cycles:
            cycle = [k - 1 for k in cycle]
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                nxt[a] = b
        return cls(tuple(nxt))

    @classmethod
    def parse(cls, n: int, text: str) -> "BilliardsPermutation":
        """Parse cycle notation such as "(1 7 4)(2 6 8)"."""
        body = text.replace(")", " ").strip()
        cycles = [[int(k) for k in part.split()] for part in body.split("(") if part.strip()]
        return cls.from_cycles(n, cycles)


def billiards_permutation(P: GridPolygon) -> BilliardsPermutation:
    """
    The billiards permutation of P.

    Raises:
        ConsistencyError: If a fixed point, a 2-cycle or a reflection mismatch appears
    """
    table = beam_table(P)
    perm = BilliardsPermutation(tuple(t.end for t in table))
    for t in table:
        if t.direction not in TRAVEL_DIRECTIONS:
            raise ConsistencyError(f"Beam from index {t.start} travels {t.direction.name}")
        arrival = P.boundary[t.end]
        if reflect_direction(t.direction, arrival.ptype) != emission_direction(P, arrival):
            raise ConsistencyError(f"Reflection at {arrival!r} does not reproduce its emission")
    short = [c for c in perm.cycles if len(c) < 3]
    if short:
        raise ConsistencyError(f"Permutation has cycles shorter than 3: {short}")
    return perm


# ---------------------------------------------------------------------------
# Trajectories
# ---------------------------------------------------------------------------

class Trajectory(NamedTuple):
    cycle: tuple[int, ...]
    segments: tuple[tuple[DPoint, DPoint], ...]
    length2: int
    is_triangular: bool
    triangle_orientation: TriangleOrientation

    @property
    def length(self) -> float:
        return self.length2 / 2


def trajectory(P: GridPolygon, c: tuple[int, ...]) -> Trajectory:
    table = beam_table(P)
    segments = tuple(table[i].segment for i in c)
    orientation: TriangleOrientation = "none"
    if len(c) == 3:
        # Traversed NE, SE, W the triangle is clockwise and sits on its horizontal side.
        walk = tuple(s for s, _ in segments) + (segments[0][0],)
        orientation = "up" if signed_area2(walk) < 0 else "down"
    return Trajectory(
        cycle=tuple(c),
        segments=segments,
        length2=sum(table[i].crossings for i in c),
        is_triangular=len(c) == 3,
        triangle_orientation=orientation,
    )


def trajectories(P: GridPolygon) -> list[Trajectory]:
    return [trajectory(P, c) for c in billiards_permutation(P).cycles]


def _orientation(p: DPoint, q: DPoint, r: DPoint) -> int:
    val = cross(q - p, r - p)
    return (val > 0) - (val < 0)


def _on_segment(p: DPoint, q: DPoint, r: DPoint) -> bool:
    return min(p.a, q.a) <= r.a <= max(p.a, q.a) and min(p.b, q.b) <= r.b <= max(p.b, q.b)


def _bbox_disjoint(s1: tuple, s2: tuple) -> bool:
    (p1, q1), (p2, q2) = s1, s2
    return (
        max(p1.a, q1.a) < min(p2.a, q2.a)
        or max(p2.a, q2.a) < min(p1.a, q1.a)
        or max(p1.b, q1.b) < min(p2.b, q2.b)
        or max(p2.b, q2.b) < min(p1.b, q1.b)
    )


def segments_intersect(s1: tuple, s2: tuple) -> bool:
    """
    Exact closed-segment intersection test on lattice points.

    Raises:
        CollinearOverlapError: If the segments overlap in more than one point
    """
    if _bbox_disjoint(s1, s2):
        return False
    (p1, q1), (p2, q2) = s1, s2
    o1 = _orientation(p1, q1, p2)
    o2 = _orientation(p1, q1, q2)
    o3 = _orientation(p2, q2, p1)
    o4 = _orientation(p2, q2, q1)

    if o1 == o2 == o3 == o4 == 0:
        shared = {p for p in (p1, q1) if _on_segment(p2, q2, p)} | {
            p for p in (p2, q2) if _on_segment(p1, q1, p)
        }
        if len(shared) > 1:
            raise CollinearOverlapError(f"Segments {s1} and {s2} overlap along a line")
        return bool(shared)

    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_segment(p1, q1, p2):
        return True
    if o2 == 0 and _on_segment(p1, q1, q2):
        return True
    if o3 == 0 and _on_segment(p2, q2, p1):
        return True
    if o4 == 0 and _on_segment(p2, q2, q1):
        return True
    return False


def trajectories_intersect(T1: Trajectory, T2: Trajectory) -> bool:
    """True iff some segment of T1 shares a point with some segment of T2."""
    return any(segments_intersect(s1, s2) for s1 in T1.segments for s2 in T2.segments)


def triangular_intersection_count(P: GridPolygon, c: tuple[int, ...]) -> int:
    """Number of triangular trajectories other than traj(c) that meet traj(c)."""
    own = trajectory(P, c)
    return sum(
        1
        for d in billiards_permutation(P).cycles
        if len(d) == 3 and tuple(d) != tuple(c) and trajectories_intersect(own, trajectory(P, d))
    )


def chord_coverage(P: GridPolygon) -> dict[Cell, list[PaneType]]:
    """For each cell, the axis of every chord crossing it."""
    coverage = {c: [] for c in P.cells}
    for t in beam_table(P):
        for c in t.cells:
            coverage[c].append(t.direction.parallel_type)
    return coverage


# ---------------------------------------------------------------------------
# Shorelines
# ---------------------------------------------------------------------------

class ShorelineReport(NamedTuple):
    m: int
    z_points: tuple[DPoint, ...]
    Ks: tuple[int, ...]
    touch_counts: tuple[int, ...]
    # most vertices any single touching triangular trajectory has on the shoreline
    touch_multiplicity: tuple[int, ...]


def _strictly_between(k: int, lo: int, hi: int, n: int) -> bool:
    return 0 < (k - lo) % n < (hi - lo) % n


def shoreline_report(P: GridPolygon, c: tuple[int, ...]) -> ShorelineReport:
    """
    Shorelines of a cycle with at least 4 panes.

    Shoreline B_i runs clockwise from the midpoint of the i-th cycle pane to the
    next one. K(B_i) = 3 - (sum of turns at vertices inside the arc) / 60, where a
    vertex with interior angle a turns by 180 - a degrees.

    Raises:
        CycleTooSmallError: If the cycle has fewer than 4 panes
    """
    m = len(c)
    if m < 4:
        raise CycleTooSmallError(f"Shorelines need a cycle of at least 4 panes, got {m}")
    n = P.perim
    positions = sorted(c)
    own = trajectory(P, c)
    touching = [
        d
        for d in billiards_permutation(P).cycles
        if len(d) == 3 and trajectories_intersect(own, trajectory(P, d))
    ]

    Ks, touch_counts, multiplicity = [], [], []
    for idx, lo in enumerate(positions):
        hi = positions[(idx + 1) % m]
        span = (hi - lo) % n
        turn = 0
        for k in range(lo, lo + span):
            v = P.walk[k % n + 1]
            turn += 180 - vertex_angle(P, v)
        Ks.append(3 - turn // 60)
        on_arc = [sum(1 for q in d if _strictly_between(q, lo, hi, n)) for d in touching]
        touch_counts.append(sum(1 for x in on_arc if x))
        multiplicity.append(max(on_arc, default=0))

    return ShorelineReport(
        m=m,
        z_points=tuple(pane_midpoint(P.boundary[k]) for k in positions),
        Ks=tuple(Ks),
        touch_counts=tuple(touch_counts),
        touch_multiplicity=tuple(multiplicity),
    )


# ---------------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------------

def analyze(P: GridPolygon, start: Optional[int] = None) -> AnalysisReport:
    """
    Full billiards analysis of one polygon.

    Args:
        P: Grid polygon
        start: Optional 0-based boundary index to label as pane 1 in the output

    Returns:
        AnalysisReport model
    """
    perm = billiards_permutation(P)
    offset = start or 0
    shown = perm.relabel(offset)
    cycles = []
    shorelines = []
    for c in perm.cycles:
        traj = trajectory(P, c)
        cycles.append(
            CycleSummary(
                size=len(c),
                length2=traj.length2,
                is_triangular=traj.is_triangular,
                triangle_orientation=traj.triangle_orientation,
                triangular_intersections=triangular_intersection_count(P, c),
            )
        )
        if len(c) >= 4:
            report = shoreline_report(P, c)
            shorelines.append(
                ShorelineSummary(
                    cycle=[(k - offset) % P.perim + 1 for k in c],
                    Ks=list(report.Ks),
                    touch_counts=list(report.touch_counts),
                )
            )

    cyc = perm.cyc
    logger.debug(f"Analyzed polygon area={P.area} perim={P.perim}: {perm.cycle_notation()}")
    return AnalysisReport(
        n=P.perim,
        area=P.area,
        perim=P.perim,
        cyc=cyc,
        cycle_type=list(perm.cycle_type),
        alpha={str(k): v for k, v in perm.alpha.items()},
        cycles=shown.cycles_one_based(),
        cycle_notation=shown.cycle_notation(),
        trajectories=cycles,
        shorelines=shorelines,
        area_slack=P.area - (6 * cyc - 6),
        perim_slack=(2 * P.perim - 7 * cyc + 3) / 2,
        conjecture_slack=P.perim - (4 * cyc - 2),
    )
