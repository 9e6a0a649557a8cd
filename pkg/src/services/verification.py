"""
Verification sweep: check the cycle inequalities and their supporting
properties on every enumerated polygon.
"""
import json
import multiprocessing
import time
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Iterable, NamedTuple, Optional, Union

import pandas as pd

from src.geometry.grid import Pane, PaneType, cell_panes, pane_key
from src.geometry.polygon import (
    GridPolygon,
    Mode,
    PolygonValidationError,
    canonical_hash,
    cut_panes,
    from_cells,
    is_primitive,
    is_tree_of_unit_hexagons,
    split,
)
from src.geometry.shapes import is_exceptional_primitive
from src.models import PolygonRecord, VerificationSummary
from src.services.billiards import (
    BilliardsPermutation,
    billiards_permutation,
    chord_coverage,
    shoreline_report,
    trajectories_intersect,
    trajectory,
)
from src.services.enumeration import enumerate_polyiamonds
from src.services.plabic import dual, trip_permutation
from src.utils.logger import get_logger

logger = get_logger("services.verification")

# Checks that must never fail
TRIP_ORACLE = "trip_oracle"
AREA_BOUND = "area_bound"
PERIM_BOUND = "perim_bound"
HEXAGON_TREE_EQUALITY = "hexagon_tree_equality"
TRIANGLE_INTERSECTION_BOUND = "triangle_intersection_bound"
TRIANGLE_PAIRING = "triangle_pairing"
SHORELINE_SINGLE_TOUCH = "shoreline_single_touch"
SHORELINE_TOUCH_BOUND = "shoreline_touch_bound"
SHORELINE_IDENTITY = "shoreline_identity"
CHORD_CONSERVATION = "chord_conservation"
LENGTH_CONSERVATION = "length_conservation"
PRIMITIVE_CYCLE_BALANCE = "primitive_cycle_balance"
PRIMITIVE_AREA_BOUND = "primitive_area_bound"
CUT_ADDITIVITY = "cut_additivity"
DUAL_BOUNDS = "dual_bounds"

THEOREM_CHECKS = (
    TRIP_ORACLE,
    AREA_BOUND,
    PERIM_BOUND,
    HEXAGON_TREE_EQUALITY,
    TRIANGLE_INTERSECTION_BOUND,
    TRIANGLE_PAIRING,
    SHORELINE_SINGLE_TOUCH,
    SHORELINE_TOUCH_BOUND,
    SHORELINE_IDENTITY,
    CHORD_CONSERVATION,
    LENGTH_CONSERVATION,
    PRIMITIVE_CYCLE_BALANCE,
    PRIMITIVE_AREA_BOUND,
    CUT_ADDITIVITY,
    DUAL_BOUNDS,
)

# Reported, never asserted: perim >= 4 cyc - 2
PERIM_CONJECTURE = "perim_conjecture"

EXIT_CLEAN = 0
EXIT_THEOREM_VIOLATION = 2
EXIT_CONJECTURE_VIOLATION = 3

CSV_COLUMNS = [
    "canonical_hash",
    "area",
    "perim",
    "cyc",
    "cycle_type",
    "area_slack",
    "perim_slack",
    "conjecture_slack",
]


class SuiteFailure(Exception):
    """Raised when a sweep finds a violated check; carries the first offending polygon."""

    def __init__(self, check: str, polygon_hash: str, cells: list):
        self.check = check
        self.polygon_hash = polygon_hash
        self.cells = cells
        super().__init__(f"Check {check} failed on polygon {polygon_hash}: {cells}")


class BadDecompositionError(ValueError):
    """Raised when two pieces do not meet in exactly the listed panes."""
    pass


# ---------------------------------------------------------------------------
# Cutting and gluing along shared panes
# ---------------------------------------------------------------------------

class CutLemmaRecord(NamedTuple):
    eta: int
    delta1: int
    delta2: int
    cyc1: int
    cyc2: int
    cyc: int
    inequality_holds: bool
    # None unless the pieces share exactly one pane
    single_pane_equality: Optional[bool]


def _cycles_touching(P: GridPolygon, perm: BilliardsPermutation, panes: set) -> int:
    return sum(1 for c in perm.cycles if any(P.boundary[k] in panes for k in c))


def check_cut_lemma(P1: GridPolygon, p1: Iterable[Pane], P2: GridPolygon, p2: Iterable[Pane]) -> CutLemmaRecord:
    """
    Compare the cycles of a union with the cycles of two pieces placed side by side.

    The pieces must already sit in the same coordinates and meet exactly in the
    listed panes. delta_k counts the cycles of piece k having a pane among them.

    Raises:
        BadDecompositionError: If the pieces overlap, meet elsewhere, or the union is not a grid polygon
    """
    shared = set(p1)
    if shared != set(p2):
        raise BadDecompositionError("Both pieces must list the same shared panes")
    if P1.cells & P2.cells:
        raise BadDecompositionError("Pieces overlap in cells")
    common = {p for c in P1.cells for p in cell_panes(c)} & {p for c in P2.cells for p in cell_panes(c)}
    if common != shared:
        raise BadDecompositionError(
            f"Pieces meet in {sorted(common, key=pane_key)}, expected {sorted(shared, key=pane_key)}"
        )
    try:
        union = from_cells(P1.cells | P2.cells)
    except PolygonValidationError as e:
        raise BadDecompositionError(f"Union is not a grid polygon: {e}") from e

    perm1, perm2 = billiards_permutation(P1), billiards_permutation(P2)
    eta = len(shared)
    delta1 = _cycles_touching(P1, perm1, shared)
    delta2 = _cycles_touching(P2, perm2, shared)
    cyc = billiards_permutation(union).cyc
    return CutLemmaRecord(
        eta=eta,
        delta1=delta1,
        delta2=delta2,
        cyc1=perm1.cyc,
        cyc2=perm2.cyc,
        cyc=cyc,
        inequality_holds=cyc <= perm1.cyc + perm2.cyc - delta1 - delta2 + eta,
        single_pane_equality=(cyc == perm1.cyc + perm2.cyc - 1) if eta == 1 else None,
    )


# ---------------------------------------------------------------------------
# Per-polygon analysis
# ---------------------------------------------------------------------------

def _triangle_checks(P: GridPolygon, perm: BilliardsPermutation) -> list[str]:
    failed = []
    trajs = {c: trajectory(P, c) for c in perm.cycles}
    triangles = [c for c in perm.cycles if len(c) == 3]
    meets = {
        c: [d for d in triangles if d != c and trajectories_intersect(trajs[c], trajs[d])]
        for c in perm.cycles
    }
    if any(len(meets[c]) > len(c) - 2 for c in perm.cycles):
        failed.append(TRIANGLE_INTERSECTION_BOUND)
    for c in triangles:
        others = meets[c]
        if len(others) > 1 or (
            others and trajs[others[0]].triangle_orientation == trajs[c].triangle_orientation
        ):
            failed.append(TRIANGLE_PAIRING)
            break
    return failed


def _shoreline_checks(P: GridPolygon, perm: BilliardsPermutation) -> list[str]:
    failed = set()
    for c in perm.cycles:
        if len(c) < 4:
            continue
        report = shoreline_report(P, c)
        if sum(report.Ks) != 3 * (report.m - 2) or min(report.Ks) < 1:
            failed.add(SHORELINE_IDENTITY)
        if any(x > 1 for x in report.touch_multiplicity):
            failed.add(SHORELINE_SINGLE_TOUCH)
        if any(t > k for t, k in zip(report.touch_counts, report.Ks)):
            failed.add(SHORELINE_TOUCH_BOUND)
    return sorted(failed)


def _chords_conserved(P: GridPolygon) -> bool:
    full = [PaneType.H, PaneType.R, PaneType.L]
    return all(sorted(axes) == full for axes in chord_coverage(P).values())


def _primitive_checks(P: GridPolygon, perm: BilliardsPermutation) -> list[str]:
    if not is_primitive(P) or is_exceptional_primitive(P):
        return []
    failed = []
    alpha = perm.alpha
    balance = alpha.get(4, 0) + sum((m - 2) * count for m, count in alpha.items() if m >= 5)
    if alpha.get(3, 0) > balance:
        failed.append(PRIMITIVE_CYCLE_BALANCE)
    if P.area < 6 * perm.cyc:
        failed.append(PRIMITIVE_AREA_BOUND)
    return failed


def _cuts_additive(P: GridPolygon) -> bool:
    for cut in cut_panes(P):
        P1, P2 = split(P, cut)
        record = check_cut_lemma(P1, [cut.pane], P2, [cut.pane])
        if not (record.inequality_holds and record.single_pane_equality):
            return False
    return True


def polygon_record(P: GridPolygon, perm: BilliardsPermutation, mode: Mode = "free") -> PolygonRecord:
    """Report row of one polygon: hash, sizes, cycle type and the three slacks."""
    cyc = perm.cyc
    return PolygonRecord(
        canonical_hash=canonical_hash(P, mode),
        area=P.area,
        perim=P.perim,
        cyc=cyc,
        cycle_type=" ".join(str(m) for m in perm.cycle_type),
        area_slack=P.area - (6 * cyc - 6),
        perim_slack=(2 * P.perim - 7 * cyc + 3) / 2,
        conjecture_slack=P.perim - (4 * cyc - 2),
    )


def analyze_for_suite(P: GridPolygon, mode: Mode = "free") -> tuple[PolygonRecord, list[str]]:
    """
    Run every check on one polygon.

    Args:
        P: Grid polygon
        mode: Mode the report hash is taken in

    Returns:
        The polygon's report row and the names of the failed checks (the
        conjecture appears there too when its slack is negative)
    """
    perm = billiards_permutation(P)
    cyc = perm.cyc
    failed = []

    G = dual(P)
    trip_perm = trip_permutation(G)
    if trip_perm != perm:
        failed.append(TRIP_ORACLE)

    area_slack = P.area - (6 * cyc - 6)
    perim_slack2 = 2 * P.perim - 7 * cyc + 3
    conjecture_slack = P.perim - (4 * cyc - 2)
    if area_slack < 0:
        failed.append(AREA_BOUND)
    if perim_slack2 < 0:
        failed.append(PERIM_BOUND)
    if (area_slack == 0) != is_tree_of_unit_hexagons(P):
        failed.append(HEXAGON_TREE_EQUALITY)

    # Same inequalities read off the dual graph
    dual_cyc = trip_perm.cyc
    if len(G.colors) < 6 * dual_cyc - 6 or 2 * G.n < 7 * dual_cyc - 3:
        failed.append(DUAL_BOUNDS)

    failed += _triangle_checks(P, perm)
    failed += _shoreline_checks(P, perm)
    if not _chords_conserved(P):
        failed.append(CHORD_CONSERVATION)
    # doubled lengths: sum of len = 3/2 area
    if sum(trajectory(P, c).length2 for c in perm.cycles) != 3 * P.area:
        failed.append(LENGTH_CONSERVATION)
    failed += _primitive_checks(P, perm)
    if not _cuts_additive(P):
        failed.append(CUT_ADDITIVITY)
    if conjecture_slack < 0:
        failed.append(PERIM_CONJECTURE)

    return polygon_record(P, perm, mode), failed


def _analyze_cells(cells: tuple, mode: Mode = "free") -> tuple[PolygonRecord, list[str], list]:
    P = from_cells(cells)
    record, failed = analyze_for_suite(P, mode)
    return record, failed, [[c.i, c.j, c.orient.name] for c in P.sorted_cells()]


# ---------------------------------------------------------------------------
# Sweep
# ---------------------------------------------------------------------------

@dataclass
class VerificationReport:
    max_area: int
    mode: str
    counts: dict[int, int]
    records: list[PolygonRecord]
    violations: dict[str, list[str]]
    equality_cases: list[str]
    # canonical hash -> cell list, for violating polygons only
    offenders: dict[str, list] = field(default_factory=dict)

    @property
    def theorem_violations(self) -> dict[str, list[str]]:
        return {k: v for k, v in self.violations.items() if k != PERIM_CONJECTURE and v}

    @property
    def exit_code(self) -> int:
        if self.theorem_violations:
            return EXIT_THEOREM_VIOLATION
        if self.violations.get(PERIM_CONJECTURE):
            return EXIT_CONJECTURE_VIOLATION
        return EXIT_CLEAN

    def minima(self) -> dict[str, float]:
        if not self.records:
            return {}
        return {
            "area_slack": min(r.area_slack for r in self.records),
            "perim_slack": min(r.perim_slack for r in self.records),
            "conjecture_slack": min(r.conjecture_slack for r in self.records),
        }

    def raise_for_violations(self) -> None:
        """Raise SuiteFailure for the first violated check, theorems before the conjecture."""
        for check in THEOREM_CHECKS + (PERIM_CONJECTURE,):
            hashes = self.violations.get(check)
            if hashes:
                raise SuiteFailure(check, hashes[0], self.offenders.get(hashes[0], []))

    def summary(self) -> VerificationSummary:
        return VerificationSummary(
            max_area=self.max_area,
            mode=self.mode,
            counts={str(area): count for area, count in sorted(self.counts.items())},
            minima=self.minima(),
            violations=self.violations,
            equality_cases=self.equality_cases,
            exit_code=self.exit_code,
        )


def verify_suite(
    max_area: int,
    mode: Mode = "free",
    threads: int = 1,
    polygons: Optional[Iterable[GridPolygon]] = None,
    strict: bool = False,
) -> VerificationReport:
    """
    Check every enumerated polygon up to max_area.

    Args:
        max_area: Largest area to sweep
        mode: Enumeration mode
        threads: Worker processes for enumeration and analysis
        polygons: Explicit polygons to check instead of enumerating
        strict: Raise on the first violation instead of returning the report

    Returns:
        VerificationReport with records sorted by (area, canonical hash)

    Raises:
        SuiteFailure: In strict mode, for the first violated check and its polygon
    """
    start_time = time.time()
    if polygons is None:
        polygons = enumerate_polyiamonds(max_area, mode, threads)
    shapes = [tuple(P.sorted_cells()) for P in polygons]
    logger.info(f"Verifying {len(shapes)} polygons (max_area={max_area}, mode={mode}, threads={threads})")

    if threads > 1 and len(shapes) > threads:
        with multiprocessing.Pool(threads) as pool:
            chunksize = max(1, len(shapes) // (threads * 8))
            results = pool.map(partial(_analyze_cells, mode=mode), shapes, chunksize=chunksize)
    else:
        results = [_analyze_cells(shape, mode) for shape in shapes]

    results.sort(key=lambda r: (r[0].area, r[0].canonical_hash))
    counts = {area: 0 for area in range(1, max_area + 1)}
    violations = {check: [] for check in THEOREM_CHECKS + (PERIM_CONJECTURE,)}
    equality_cases = []
    offenders = {}
    for record, failed, cells in results:
        counts[record.area] = counts.get(record.area, 0) + 1
        if record.area_slack == 0:
            equality_cases.append(record.canonical_hash)
        for check in failed:
            violations[check].append(record.canonical_hash)
            offenders[record.canonical_hash] = cells

    report = VerificationReport(
        max_area=max_area,
        mode=mode,
        counts=counts,
        records=[r[0] for r in results],
        violations=violations,
        equality_cases=equality_cases,
        offenders=offenders,
    )
    elapsed = time.time() - start_time
    if report.theorem_violations:
        logger.error(f"Verification found violations: {sorted(report.theorem_violations)} ({elapsed:.2f}s)")
    elif report.exit_code == EXIT_CONJECTURE_VIOLATION:
        logger.warning(f"Perimeter conjecture fails on {violations[PERIM_CONJECTURE]} ({elapsed:.2f}s)")
    else:
        logger.info(f"Verification clean over {len(results)} polygons in {elapsed:.2f}s")
    if strict:
        report.raise_for_violations()
    return report


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def records_frame(records: list[PolygonRecord]) -> pd.DataFrame:
    return pd.DataFrame([r.model_dump() for r in records], columns=CSV_COLUMNS)


def write_csv(report: VerificationReport, path: Union[str, Path, None] = None) -> str:
    """CSV text of the report rows; also written to path when given."""
    text = records_frame(report.records).to_csv(index=False)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def summary_json(report: VerificationReport) -> str:
    summary = report.summary()
    return json.dumps(summary.model_dump(mode="json"), indent=2, sort_keys=True) + "\n"
