"""
Independent fixed polyiamond counter (Redelmeier's algorithm), used as a
completeness oracle for the enumeration service.

Cells are plain (i, j, orientation) tuples with orientation 0 for up and 1 for
down, so nothing here depends on the geometry package.
"""


def _neighbors(cell):
    i, j, o = cell
    if o == 0:
        return [(i, j - 1, 1), (i - 1, j, 1), (i, j, 1)]
    return [(i, j, 0), (i + 1, j, 0), (i, j + 1, 0)]


def _row_major(cell):
    i, j, o = cell
    return (j, i, o)


def _grow_from(origin, max_area, visit):
    lowest = _row_major(origin)
    seen = {origin}
    shape = []

    def extend(untried):
        untried = list(untried)
        while untried:
            cell = untried.pop()
            shape.append(cell)
            visit(tuple(shape))
            if len(shape) < max_area:
                new = [n for n in _neighbors(cell) if _row_major(n) > lowest and n not in seen]
                seen.update(new)
                extend(untried + new)
                seen.difference_update(new)
            shape.pop()

    extend([origin])


def _grow_all(max_area, visit):
    # Every shape has a unique lowest cell in row-major order; it is either up or down.
    _grow_from((0, 0, 0), max_area, visit)
    _grow_from((0, 0, 1), max_area, visit)


def count_fixed_polyiamonds(max_area):
    """Number of edge-connected cell sets up to translation, per area 1..max_area."""
    counts = [0] * (max_area + 1)

    def visit(shape):
        counts[len(shape)] += 1

    _grow_all(max_area, visit)
    return {area: counts[area] for area in range(1, max_area + 1)}


def fixed_polyiamonds(max_area):
    """Every edge-connected cell set up to translation, as a list of cell tuples."""
    shapes = []
    _grow_all(max_area, shapes.append)
    return shapes
