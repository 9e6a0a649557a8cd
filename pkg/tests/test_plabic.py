"""
Unit tests for plabic graphs, trips and their serialization.
"""
import json

import pytest

from src.geometry.shapes import hexagon_tree
from src.services.billiards import billiards_permutation
from src.services.plabic import (
    NonTrivalentError,
    PlabicFormatError,
    dual,
    export,
    from_json,
    trip,
    trip_permutation,
)


class TestDual:
    """Tests for the dual plabic graph of a polygon."""

    def test_triangle(self, tri):
        """One black vertex joined to three boundary points."""
        G = dual(tri)
        assert G.colors == ("black",)
        assert G.n == 3
        assert len(G.edges) == 3
        assert G.rotation == ((1, 2, 0),)

    def test_counts(self, hex_with_tail):
        """One vertex per cell, one edge per pane."""
        G = dual(hex_with_tail)
        assert len(G.colors) == hex_with_tail.area
        assert G.n == hex_with_tail.perim
        assert 2 * len(G.edges) == 3 * hex_with_tail.area + hex_with_tail.perim

    def test_colors_follow_orientation(self, hexagon):
        """The hexagon has three black and three white vertices."""
        G = dual(hexagon)
        assert sorted(G.colors) == ["black"] * 3 + ["white"] * 3


class TestTrips:
    """Tests for trips and the trip permutation."""

    def test_triangle_trip(self, tri):
        """The trip from the bottom boundary point ends at the L side."""
        t = trip(dual(tri), 0)
        assert t.end == 2
        assert t.path == (0, 2)

    def test_trip_permutation_matches_billiards(self, tri, rhomb, hexagon, hex_with_tail, double_hexagon):
        """Trips on the dual graph reproduce the billiards permutation."""
        for P in (tri, rhomb, hexagon, hex_with_tail, double_hexagon, hexagon_tree(3)):
            assert trip_permutation(dual(P)) == billiards_permutation(P)

    def test_pentagon_fan(self, pentagon_fan_json):
        """A graph given directly as json has trip permutation (1 3 5 2 4)."""
        G = from_json(pentagon_fan_json)
        assert trip_permutation(G).cycle_notation() == "(1 3 5 2 4)"

    def test_reverse_trips_invert(self, pentagon_fan_json, hex_with_tail):
        """Swapping the turning rules gives the inverse permutation."""
        for G in (from_json(pentagon_fan_json), dual(hex_with_tail)):
            backwards = tuple(trip(G, i, reverse=True).end for i in range(G.n))
            assert backwards == trip_permutation(G).inverse().next


class TestSerialization:
    """Tests for json and dot export and json parsing."""

    def test_json_reparses(self, hex_with_tail):
        """Exported json parses back to the same graph."""
        G = dual(hex_with_tail)
        text = export(G, "json")
        assert json.loads(text)["version"] == "plabic-v1"
        assert from_json(text) == G

    def test_export_is_deterministic(self, hexagon):
        """Two exports of the same polygon are byte-identical."""
        assert export(dual(hexagon)) == export(dual(hexagon))

    def test_dot(self, tri):
        """Dot output names vertices v* and boundary points b*."""
        text = export(dual(tri), "dot")
        assert text.startswith("graph plabic {")
        assert "b1 -- v0;" in text
        assert "fillcolor=black" in text

    def test_unknown_format(self, tri):
        """Only json and dot are supported."""
        with pytest.raises(ValueError):
            export(dual(tri), "svg")

    def test_malformed_json(self):
        """Documents that are not plabic graphs are rejected."""
        with pytest.raises(PlabicFormatError):
            from_json("not json")
        with pytest.raises(PlabicFormatError):
            from_json(json.dumps({"colors": ["red"], "edges": [], "rotation": [], "boundary_count": 1}))

    def test_edge_index_out_of_range(self):
        """Rotation lists must refer to existing edges."""
        document = {
            "colors": ["black"],
            "edges": [[["boundary", 0], ["vertex", 0]], [["boundary", 1], ["vertex", 0]], [["boundary", 2], ["vertex", 0]]],
            "rotation": [[0, 1, 5]],
            "boundary_count": 3,
        }
        with pytest.raises(PlabicFormatError):
            from_json(json.dumps(document))

    def test_non_trivalent(self):
        """Vertices need exactly three edges."""
        document = {
            "colors": ["black"],
            "edges": [[["boundary", 0], ["vertex", 0]], [["boundary", 1], ["vertex", 0]]],
            "rotation": [[0, 1]],
            "boundary_count": 2,
        }
        with pytest.raises(NonTrivalentError):
            from_json(json.dumps(document))
