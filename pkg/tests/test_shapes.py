"""
Unit tests for named shapes and hexagon trees.
"""
import pytest

from src.geometry.polygon import is_tree_of_unit_hexagons
from src.geometry.shapes import (
    HEX,
    HEX_WITH_TAIL,
    RHOMB,
    TRI,
    TRI_DOWN,
    hexagon_tree,
    is_exceptional_primitive,
    unit_hexagon,
)
from src.services.billiards import billiards_permutation


class TestNamedShapes:
    """Tests for the fixed building blocks."""

    def test_sizes(self):
        """Area and perimeter of each named shape."""
        assert (TRI.area, TRI.perim) == (1, 3)
        assert (TRI_DOWN.area, TRI_DOWN.perim) == (1, 3)
        assert (RHOMB.area, RHOMB.perim) == (2, 4)
        assert (HEX.area, HEX.perim) == (6, 6)
        assert (HEX_WITH_TAIL.area, HEX_WITH_TAIL.perim) == (9, 9)

    def test_unit_hexagon_translates(self):
        """unit_hexagon(i, j) is HEX moved by p(i - 1, j - 1)."""
        moved = unit_hexagon(4, -2)
        assert moved.area == 6
        assert {(c.i - 3, c.j + 3, c.orient) for c in moved.cells} == set(HEX.cells)


class TestHexagonTree:
    """Tests for trees of unit hexagons."""

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
    def test_tree_sizes(self, k):
        """A tree of k hexagons has area 6k, perimeter 4k + 2 and k + 1 cycles."""
        tree = hexagon_tree(k)
        assert tree.area == 6 * k
        assert tree.perim == 4 * k + 2
        assert billiards_permutation(tree).cyc == k + 1
        assert is_tree_of_unit_hexagons(tree)

    def test_nine_hexagons(self):
        """Nine hexagons: 10 cycles, area 54, perimeter 38."""
        tree = hexagon_tree(9)
        assert (billiards_permutation(tree).cyc, tree.area, tree.perim) == (10, 54, 38)

    def test_needs_a_hexagon(self):
        """k must be positive."""
        with pytest.raises(ValueError):
            hexagon_tree(0)


class TestExceptionalPrimitives:
    """Tests for the shapes exempt from the primitive bounds."""

    def test_triangle_and_hexagon(self):
        """Triangles of either orientation and the hexagon are exempt."""
        assert is_exceptional_primitive(TRI)
        assert is_exceptional_primitive(TRI_DOWN)
        assert is_exceptional_primitive(HEX)

    def test_other_shapes(self, double_hexagon):
        """Non-primitive shapes and ordinary primitives are not exempt."""
        assert not is_exceptional_primitive(RHOMB)
        assert not is_exceptional_primitive(hexagon_tree(2))
        assert not is_exceptional_primitive(double_hexagon)
