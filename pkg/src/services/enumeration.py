"""
Exhaustive enumeration of simply connected polyiamonds.

Shapes grow one cell at a time from a single cell. Every connected shape of
area a + 1 arises from some connected shape of area a, so each level keeps all
connected shapes (holes and pinches included) and only the yielded polygons are
validated.
"""
import multiprocessing
import time
from typing import Iterator, Literal, NamedTuple

from src.geometry.grid import D, U, cell_neighbors
from src.geometry.polygon import (
    GridPolygon,
    Mode,
    PolygonValidationError,
    canonical_cells,
    canonical_hash,
    from_cells,
    orbit_size,
)
from src.services.billiards import billiards_permutation
from src.utils.logger import get_logger

logger = get_logger("services.enumeration")

Objective = Literal["min_area_slack", "min_perim_slack"]


class ExtremalEntry(NamedTuple):
    polygon: GridPolygon
    canonical_hash: str
    cyc: int
    slack: int


def _children(shape: tuple, mode: Mode) -> set:
    members = set(shape)
    found = set()
    for c in shape:
        for n in cell_neighbors(c):
            if n not in members:
                found.add(canonical_cells(shape + (n,), mode))
    return found


def _grow_chunk(args: tuple[list, str]) -> set:
    shapes, mode = args
    found = set()
    for shape in shapes:
        found |= _children(shape, mode)
    return found


def _grow(level: list, mode: Mode, threads: int) -> list:
    if threads <= 1 or len(level) < threads:
        found = _grow_chunk((level, mode))
    else:
        chunks = [(level[k::threads], mode) for k in range(threads)]
        with multiprocessing.Pool(threads) as pool:
            found = set().union(*pool.map(_grow_chunk, chunks))
    return sorted(found)


def _seeds(mode: Mode) -> list:
    return sorted({canonical_cells([c], mode) for c in (U(0, 0), D(0, 0))})


def connected_shapes(max_area: int, mode: Mode = "free", threads: int = 1) -> Iterator[tuple[int, list]]:
    """Yield (area, sorted canonical cell tuples) for every connected shape, area by area."""
    level = _seeds(mode)
    for area in range(1, max_area + 1):
        yield area, level
        if area < max_area:
            level = _grow(level, mode, threads)


def enumerate_polyiamonds(max_area: int, mode: Mode = "free", threads: int = 1) -> Iterator[GridPolygon]:
    """
    Enumerate simply connected polyiamonds up to a given area.

    Args:
        max_area: Largest area to include (>= 1)
        mode: "fixed" (up to translation) or "free" (up to all 12 symmetries)
        threads: Worker processes used to grow each level

    Yields:
        Grid polygons in canonical form, by area and then by cell list

    Raises:
        ValueError: If max_area < 1
    """
    if max_area < 1:
        raise ValueError(f"max_area must be at least 1, got {max_area}")
    start_time = time.time()
    total = 0
    for area, level in connected_shapes(max_area, mode, threads):
        kept = 0
        for shape in level:
            try:
                polygon = from_cells(shape)
            except PolygonValidationError:
                continue
            kept += 1
            yield polygon
        total += kept
        logger.debug(f"Area {area}: {len(level)} connected shapes, {kept} polygons ({mode})")
    logger.info(f"Enumerated {total} {mode} polygons up to area {max_area} in {time.time() - start_time:.2f}s")


def count_by_area(max_area: int, mode: Mode = "free", threads: int = 1) -> dict[int, int]:
    counts = {area: 0 for area in range(1, max_area + 1)}
    for polygon in enumerate_polyiamonds(max_area, mode, threads):
        counts[polygon.area] += 1
    return counts


def reconcile_orbits(max_area: int, threads: int = 1) -> dict[int, tuple[int, int]]:
    """
    Per area, the fixed count next to the sum of orbit sizes of the free shapes.

    The two numbers agree when both enumerations are complete and duplicate-free.
    """
    fixed = count_by_area(max_area, "fixed", threads)
    orbits = {area: 0 for area in range(1, max_area + 1)}
    for polygon in enumerate_polyiamonds(max_area, "free", threads):
        orbits[polygon.area] += orbit_size(polygon.cells)
    return {area: (fixed[area], orbits[area]) for area in fixed}


def _slack(polygon: GridPolygon, cyc: int, objective: Objective) -> int:
    if objective == "min_area_slack":
        return polygon.area - (6 * cyc - 6)
    return polygon.perim - (4 * cyc - 2)


def extremal_search(max_area: int, objective: Objective, threads: int = 1) -> list[ExtremalEntry]:
    """
    All free polygons attaining the smallest slack.

    "min_area_slack" minimizes area - (6 cyc - 6); "min_perim_slack" minimizes
    perim - (4 cyc - 2). Ties are all returned in enumeration order.
    """
    if objective not in ("min_area_slack", "min_perim_slack"):
        raise ValueError(f"Unknown objective: {objective}")
    best = None
    entries = []
    for polygon in enumerate_polyiamonds(max_area, "free", threads):
        cyc = billiards_permutation(polygon).cyc
        slack = _slack(polygon, cyc, objective)
        if best is None or slack < best:
            best = slack
            entries = []
        if slack == best:
            entries.append(ExtremalEntry(polygon, canonical_hash(polygon), cyc, slack))
    if best is not None and best < 0 and objective == "min_perim_slack":
        logger.warning(f"Negative perimeter slack {best} found: {[e.canonical_hash for e in entries]}")
    return entries
