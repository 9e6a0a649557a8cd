"""
Unit tests for grid polygon validation, cutting, canonical forms and gluing.
"""
import pytest

from src.geometry.grid import D, H, L, POINT_GROUP, R, Symmetry, U, cells_around, vertex
from src.geometry.polygon import (
    CutPane,
    DisconnectedError,
    EmptyInputError,
    HasHoleError,
    OverlapError,
    PinchPointError,
    PolygonValidationError,
    canonical_cells,
    canonical_form,
    canonical_hash,
    cut_panes,
    from_cells,
    glue,
    interior_panes,
    is_primitive,
    is_tree_of_unit_hexagons,
    orbit_size,
    primitive_pieces,
    signed_area2,
    split,
    transformed,
    vertex_angle,
)
from src.geometry.shapes import HEX, TRI, TRI_DOWN, hexagon_tree

# Ring around the missing cell D(0,0); every vertex fan is contiguous.
RING = (
    set(cells_around(vertex(1, 0))) | set(cells_around(vertex(0, 1))) | set(cells_around(vertex(1, 1)))
) - {D(0, 0)}

# Cells around p(1,1) split into two pairs, joined by a detour around D(0,0).
PINCHED = [
    D(0, 1), U(0, 1), U(1, 0), D(1, 0),
    D(-1, 1), U(-1, 1), D(-1, 0), U(0, 0), D(0, -1), U(1, -1), D(1, -1),
]


class TestFromCells:
    """Tests for polygon validation."""

    def test_triangle(self, tri):
        """A single up cell has three boundary panes starting at the H pane."""
        assert tri.area == 1
        assert tri.perim == 3
        assert tri.boundary == (H(0, 0), R(0, 0), L(0, 0))

    def test_boundary_is_clockwise(self, hexagon, hex_with_tail):
        """The boundary walk is closed and clockwise."""
        for P in (hexagon, hex_with_tail):
            assert P.walk[0] == P.walk[-1]
            assert signed_area2(P.walk) < 0
            # doubled coordinates: one cell has signed_area2 -4
            assert signed_area2(P.walk) == -4 * P.area

    def test_boundary_index(self, hexagon):
        """boundary_index inverts the boundary tuple."""
        for k, p in enumerate(hexagon.boundary):
            assert hexagon.boundary_index[p] == k

    def test_hexagon_boundary_order(self, hexagon):
        """The hexagon starts at its smallest pane and runs clockwise."""
        assert hexagon.boundary == (H(0, 2), L(1, 1), R(2, 0), H(1, 0), L(0, 0), R(0, 1))

    def test_empty(self):
        """No cells is an error."""
        with pytest.raises(EmptyInputError):
            from_cells([])

    def test_disconnected(self):
        """Cells sharing only a vertex are not connected."""
        with pytest.raises(DisconnectedError) as exc_info:
            from_cells([U(0, 0), U(1, 0)])
        assert "2 components" in str(exc_info.value)

    def test_pinch_point(self):
        """Two fans at one vertex are rejected."""
        with pytest.raises(PinchPointError) as exc_info:
            from_cells(PINCHED)
        assert "p(1,1)" in str(exc_info.value)

    def test_hole(self):
        """A ring with a missing middle cell is not simply connected."""
        with pytest.raises(HasHoleError):
            from_cells(RING)

    def test_errors_share_a_base(self):
        """Every validation failure is a PolygonValidationError."""
        for bad in ([], [U(0, 0), U(5, 5)], PINCHED, RING):
            with pytest.raises(PolygonValidationError):
                from_cells(bad)

    def test_equality_ignores_input_order(self, hexagon):
        """Polygons built from the same cells compare equal."""
        assert from_cells(reversed(hexagon.sorted_cells())) == hexagon


class TestAngles:
    """Tests for vertex angles and interior panes."""

    def test_hexagon_angles(self, hexagon):
        """The hexagon has 120 degree corners and a full center."""
        assert vertex_angle(hexagon, vertex(1, 1)) == 360
        assert all(vertex_angle(hexagon, v) == 120 for v in hexagon.walk)

    def test_interior_pane_count(self, hexagon, hex_with_tail):
        """Every cell has three panes; each interior pane is counted by two cells."""
        for P in (hexagon, hex_with_tail):
            assert 2 * len(interior_panes(P)) + P.perim == 3 * P.area


class TestCutting:
    """Tests for cut panes and primitive pieces."""

    def test_rhombus_has_one_cut(self, rhomb):
        """The shared pane of a rhombus is a cut pane."""
        assert cut_panes(rhomb) == frozenset({CutPane(L(0, 0))})
        assert not is_primitive(rhomb)

    def test_hexagon_is_primitive(self, hexagon, double_hexagon):
        """Interior panes of the hexagon all touch its center."""
        assert is_primitive(hexagon)
        assert is_primitive(double_hexagon)

    def test_split_rhombus(self, rhomb):
        """Cutting a rhombus leaves two triangles sharing the cut pane."""
        first, second = split(rhomb, CutPane(L(0, 0)))
        assert first.cells == frozenset({U(0, 0)})
        assert second.cells == frozenset({D(0, 0)})
        assert L(0, 0) in first.boundary_index
        assert L(0, 0) in second.boundary_index

    def test_primitive_pieces_of_hexagon_tree(self):
        """A tree of three hexagons decomposes into three unit hexagons."""
        pieces = primitive_pieces(hexagon_tree(3))
        assert len(pieces) == 3
        assert all(piece == canonical_form(HEX, "free") for piece in pieces)

    def test_tree_detection(self, hexagon, rhomb, hex_with_tail):
        """Only trees of unit hexagons are detected."""
        assert is_tree_of_unit_hexagons(hexagon)
        assert is_tree_of_unit_hexagons(hexagon_tree(4))
        assert not is_tree_of_unit_hexagons(rhomb)
        assert not is_tree_of_unit_hexagons(hex_with_tail)


class TestCanonicalForms:
    """Tests for canonical forms, hashes and orbit sizes."""

    def test_free_forms_agree_under_symmetry(self, hex_with_tail):
        """All 12 images of a polygon share one free form and hash."""
        base = canonical_cells(hex_with_tail.cells, "free")
        for g in POINT_GROUP:
            moved = transformed(hex_with_tail, g._replace(ti=3, tj=-1))
            assert canonical_cells(moved.cells, "free") == base
            assert canonical_hash(moved) == canonical_hash(hex_with_tail)

    def test_fixed_form_is_translation_only(self):
        """Up and down triangles differ as fixed shapes but not as free ones."""
        assert canonical_cells(TRI.cells, "fixed") != canonical_cells(TRI_DOWN.cells, "fixed")
        assert canonical_cells(TRI.cells, "free") == canonical_cells(TRI_DOWN.cells, "free")

    def test_fixed_form_starts_at_origin(self):
        """Translation moves the smallest cell to (0, 0)."""
        cells = canonical_cells([U(4, 7), D(4, 7)], "fixed")
        assert cells == (U(0, 0), D(0, 0))

    def test_hash_format(self, hexagon):
        """Hashes are 12 lowercase hex digits."""
        h = canonical_hash(hexagon)
        assert len(h) == 12
        assert int(h, 16) >= 0

    def test_orbit_sizes(self, tri, rhomb, hexagon):
        """Triangle: 2 fixed forms; rhombus: 3; hexagon: 1."""
        assert orbit_size(tri.cells) == 2
        assert orbit_size(rhomb.cells) == 3
        assert orbit_size(hexagon.cells) == 1

    def test_transformed_keeps_sizes(self, hex_with_tail):
        """Symmetries preserve area and perimeter."""
        moved = transformed(hex_with_tail, Symmetry(rotation=2, reflect=True, ti=5))
        assert moved.area == hex_with_tail.area
        assert moved.perim == hex_with_tail.perim


class TestGlue:
    """Tests for gluing two polygons along a pane."""

    def test_two_triangles_make_a_rhombus(self, tri, rhomb):
        """Gluing two triangles along a pane gives the rhombus."""
        union = glue(tri, tri.boundary[0], tri, tri.boundary[0])
        assert union.area == 2
        assert union.perim == 4
        assert canonical_hash(union) == canonical_hash(rhomb)

    def test_first_polygon_stays_in_place(self, hexagon):
        """The first polygon's cells are kept as they are."""
        union = glue(hexagon, hexagon.boundary[2], hexagon, hexagon.boundary[4])
        assert hexagon.cells <= union.cells
        assert union.area == 12
        assert union.perim == 10

    def test_non_boundary_pane(self, hexagon, tri):
        """Interior panes cannot be glued."""
        with pytest.raises(PolygonValidationError) as exc_info:
            glue(hexagon, H(1, 1), tri, tri.boundary[0])
        assert "not a boundary pane" in str(exc_info.value)

    def test_glue_into_a_notch(self, tri):
        """A triangle filling a notch touches two panes and is rejected."""
        notched = from_cells(set(cells_around(vertex(1, 1))) - {U(1, 1)})
        with pytest.raises(OverlapError):
            glue(notched, H(1, 1), tri, tri.boundary[0])
