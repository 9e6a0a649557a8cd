"""
Exact lattice primitives for the triangular grid.

Points are stored in doubled coordinates: DPoint(a, b) is the point
(a/2)*e1 + (b/2)*e2 with e1 = (1, 0) and e2 = (1/2, sqrt(3)/2). Grid vertices
p(i, j) = i*e1 + j*e2 are DPoint(2i, 2j); pane midpoints and chord crossings
always land on integer DPoints.
"""
import math
from enum import Enum, IntEnum
from typing import NamedTuple, Union


class Orient(IntEnum):
    U = 0
    D = 1


class PaneType(IntEnum):
    H = 0
    R = 1
    L = 2


class DPoint(NamedTuple):
    a: int
    b: int

    def __add__(self, other: "DPoint") -> "DPoint":  # type: ignore[override]
        return DPoint(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DPoint") -> "DPoint":
        return DPoint(self.a - other.a, self.b - other.b)


class Cell(NamedTuple):
    i: int
    j: int
    orient: Orient

    def __repr__(self) -> str:
        return f"{self.orient.name}({self.i},{self.j})"


class Pane(NamedTuple):
    i: int
    j: int
    ptype: PaneType

    def __repr__(self) -> str:
        return f"{self.ptype.name}({self.i},{self.j})"


class Direction(Enum):
    """Unit lattice directions; value is (angle in degrees, lattice step)."""

    E = (0, (1, 0))
    NE = (60, (0, 1))
    NW = (120, (-1, 1))
    W = (180, (-1, 0))
    SW = (240, (0, -1))
    SE = (300, (1, -1))

    @property
    def angle(self) -> int:
        return self.value[0]

    @property
    def step(self) -> DPoint:
        """One cell crossing moves the beam by this much in doubled coordinates."""
        return DPoint(*self.value[1])

    @property
    def parallel_type(self) -> PaneType:
        return _PARALLEL[self.angle % 180]

    @classmethod
    def from_angle(cls, angle: int) -> "Direction":
        return _BY_ANGLE[angle % 360]


_PARALLEL = {0: PaneType.H, 60: PaneType.R, 120: PaneType.L}
_BY_ANGLE = {d.angle: d for d in Direction}

# Line angle of each pane family, used for mirror reflections.
PANE_ANGLE = {PaneType.H: 0, PaneType.R: 60, PaneType.L: 120}


def U(i: int, j: int) -> Cell:
    return Cell(i, j, Orient.U)


def D(i: int, j: int) -> Cell:
    return Cell(i, j, Orient.D)


def H(i: int, j: int) -> Pane:
    return Pane(i, j, PaneType.H)


def R(i: int, j: int) -> Pane:
    return Pane(i, j, PaneType.R)


def L(i: int, j: int) -> Pane:
    return Pane(i, j, PaneType.L)


def vertex(i: int, j: int) -> DPoint:
    """Doubled coordinates of the grid vertex p(i, j)."""
    return DPoint(2 * i, 2 * j)


def pane_key(p: Pane) -> tuple[int, int, int]:
    """Project-wide total order on panes: ptype (H < R < L), then i, then j."""
    return (p.ptype, p.i, p.j)


def cell_key(c: Cell) -> tuple[int, int, int]:
    return (c.i, c.j, c.orient)


# ---------------------------------------------------------------------------
# Incidence
# ---------------------------------------------------------------------------

def pane_cells(p: Pane) -> tuple[Cell, Cell]:
    """Return the (U-side cell, D-side cell) bordering a pane."""
    i, j, t = p
    if t == PaneType.H:
        return U(i, j), D(i, j - 1)
    if t == PaneType.R:
        return U(i, j), D(i - 1, j)
    return U(i, j), D(i, j)


def cell_panes(c: Cell) -> tuple[Pane, Pane, Pane]:
    i, j, o = c
    if o == Orient.U:
        return H(i, j), R(i, j), L(i, j)
    return L(i, j), R(i + 1, j), H(i, j + 1)


def cell_neighbors(c: Cell) -> tuple[Cell, Cell, Cell]:
    """The three cells sharing a pane with c, in cell_panes order."""
    i, j, o = c
    if o == Orient.U:
        return D(i, j - 1), D(i - 1, j), D(i, j)
    return U(i, j), U(i + 1, j), U(i, j + 1)


def other_cell(p: Pane, c: Cell) -> Cell:
    up, down = pane_cells(p)
    return down if c == up else up


def pane_of_type(c: Cell, t: PaneType) -> Pane:
    for p in cell_panes(c):
        if p.ptype == t:
            return p
    raise ValueError(f"{c!r} has no pane of type {t.name}")  # unreachable


def pane_endpoints(p: Pane) -> tuple[DPoint, DPoint]:
    i, j, t = p
    if t == PaneType.H:
        return vertex(i, j), vertex(i + 1, j)
    if t == PaneType.R:
        return vertex(i, j), vertex(i, j + 1)
    return vertex(i + 1, j), vertex(i, j + 1)


def pane_midpoint(p: Pane) -> DPoint:
    s, t = pane_endpoints(p)
    return DPoint((s.a + t.a) // 2, (s.b + t.b) // 2)


def cell_vertices(c: Cell) -> tuple[DPoint, DPoint, DPoint]:
    i, j, o = c
    if o == Orient.U:
        return vertex(i, j), vertex(i + 1, j), vertex(i, j + 1)
    return vertex(i + 1, j), vertex(i, j + 1), vertex(i + 1, j + 1)


def cells_around(v: DPoint) -> tuple[Cell, ...]:
    """The six cells incident to grid vertex v, counterclockwise from angle 0."""
    i, j = v.a // 2, v.b // 2
    return (
        U(i, j),
        D(i - 1, j),
        U(i - 1, j),
        D(i - 1, j - 1),
        U(i, j - 1),
        D(i, j - 1),
    )


def pane_from_endpoints(s: DPoint, t: DPoint) -> Pane:
    i, j = min(s.a, t.a) // 2, min(s.b, t.b) // 2
    da, db = (t.a - s.a) // 2, (t.b - s.b) // 2
    if db == 0 and abs(da) == 1:
        return H(i, j)
    if da == 0 and abs(db) == 1:
        return R(i, j)
    if da == -db and abs(da) == 1:
        return L(i, j)
    raise ValueError(f"{s} and {t} are not the endpoints of a pane")


def cross(u: DPoint, v: DPoint) -> int:
    """Lattice determinant; same sign as the Cartesian cross product."""
    return u.a * v.b - u.b * v.a


def to_cartesian(p: DPoint) -> tuple[float, float]:
    return p.a / 2 + p.b / 4, p.b * math.sqrt(3) / 4


# ---------------------------------------------------------------------------
# Symmetries
# ---------------------------------------------------------------------------

# 60 degree counterclockwise rotation about p(0,0): e1 -> e2, e2 -> e2 - e1.
_ROT = ((0, -1), (1, 1))
# Reflection across the horizontal axis: e1 -> e1, e2 -> e1 - e2.
_REF = ((1, 1), (0, -1))


def _matmul(m: tuple, n: tuple) -> tuple:
    return tuple(
        tuple(sum(m[r][k] * n[k][c] for k in range(2)) for c in range(2))
        for r in range(2)
    )


def _rotation_power(k: int) -> tuple:
    m = ((1, 0), (0, 1))
    for _ in range(k % 6):
        m = _matmul(_ROT, m)
    return m


# LINEAR[(k, reflect)] is rot^k composed after the optional reflection.
LINEAR = {
    (k, r): _matmul(_rotation_power(k), _REF) if r else _rotation_power(k)
    for k in range(6)
    for r in (False, True)
}


class Symmetry(NamedTuple):
    """x -> rot^rotation(ref^reflect(x)) + p(ti, tj), fixing p(0,0) before translation."""

    rotation: int = 0
    reflect: bool = False
    ti: int = 0
    tj: int = 0

    @property
    def matrix(self) -> tuple:
        return LINEAR[(self.rotation % 6, self.reflect)]

    @property
    def preserves_orientation(self) -> bool:
        return not self.reflect


IDENTITY = Symmetry()
POINT_GROUP = tuple(Symmetry(k, r) for r in (False, True) for k in range(6))


def _apply_linear(m: tuple, x: int, y: int) -> tuple[int, int]:
    return m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y


def compose(g: Symmetry, h: Symmetry) -> Symmetry:
    """Return g o h (apply h first)."""
    sign = -1 if g.reflect else 1
    rotation = (g.rotation + sign * h.rotation) % 6
    ta, tb = _apply_linear(g.matrix, h.ti, h.tj)
    return Symmetry(rotation, g.reflect != h.reflect, ta + g.ti, tb + g.tj)


def inverse(g: Symmetry) -> Symmetry:
    linear_inverse = Symmetry(g.rotation if g.reflect else (-g.rotation) % 6, g.reflect)
    ta, tb = _apply_linear(linear_inverse.matrix, -g.ti, -g.tj)
    return linear_inverse._replace(ti=ta, tj=tb)


def _cell_from_tripled_centroid(x: int, y: int) -> Cell:
    if x % 3 == 1:
        return U((x - 1) // 3, (y - 1) // 3)
    return D((x - 2) // 3, (y - 2) // 3)


def transform_cell(m: tuple, c: Cell) -> Cell:
    """Apply a linear part to a cell via its tripled centroid."""
    offset = 1 if c.orient == Orient.U else 2
    x, y = _apply_linear(m, 3 * c.i + offset, 3 * c.j + offset)
    return _cell_from_tripled_centroid(x, y)


def apply_symmetry(g: Symmetry, x: Union[Cell, Pane, DPoint]) -> Union[Cell, Pane, DPoint]:
    if isinstance(x, Cell):
        c = transform_cell(g.matrix, x)
        return Cell(c.i + g.ti, c.j + g.tj, c.orient)
    if isinstance(x, Pane):
        s, t = pane_endpoints(x)
        return pane_from_endpoints(apply_symmetry(g, s), apply_symmetry(g, t))
    if isinstance(x, DPoint):
        a, b = _apply_linear(g.matrix, x.a, x.b)
        return DPoint(a + 2 * g.ti, b + 2 * g.tj)
    raise TypeError(f"cannot apply a symmetry to {type(x).__name__}")
