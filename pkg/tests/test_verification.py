"""
Tests for the verification sweep and its reports.
"""
import io
import json

import pandas as pd
import pytest

import src.services.verification as verification
from src.geometry.grid import H, L
from src.geometry.polygon import CutPane, canonical_hash, cut_panes, split
from src.geometry.shapes import HEX, TRI, hexagon_tree
from src.services.verification import (
    AREA_BOUND,
    CSV_COLUMNS,
    EXIT_CLEAN,
    EXIT_CONJECTURE_VIOLATION,
    EXIT_THEOREM_VIOLATION,
    PERIM_CONJECTURE,
    BadDecompositionError,
    SuiteFailure,
    VerificationReport,
    analyze_for_suite,
    check_cut_lemma,
    summary_json,
    verify_suite,
    write_csv,
)


def report_with(violations):
    return VerificationReport(
        max_area=1,
        mode="free",
        counts={1: 1},
        records=[],
        violations=violations,
        equality_cases=[],
        offenders={"abc": [[0, 0, "U"]]},
    )


class TestAnalyzeForSuite:
    """Tests for the per-polygon checks."""

    def test_clean_shapes(self, tri, rhomb, hexagon, hex_with_tail, double_hexagon):
        """Known shapes pass every check."""
        for P in (tri, rhomb, hexagon, hex_with_tail, double_hexagon, hexagon_tree(2)):
            record, failed = analyze_for_suite(P)
            assert failed == [], record.canonical_hash

    def test_record_fields(self, hex_with_tail):
        """The report row carries the slacks and cycle type."""
        record, _ = analyze_for_suite(hex_with_tail)
        assert record.canonical_hash == canonical_hash(hex_with_tail)
        assert (record.area, record.perim, record.cyc) == (9, 9, 2)
        assert record.cycle_type == "6 3"
        assert (record.area_slack, record.perim_slack, record.conjecture_slack) == (3, 3.5, 3)


class TestCutLemma:
    """Tests for gluing two pieces along shared panes."""

    def test_rhombus_pieces(self, rhomb):
        """Two triangles along one pane: equality cyc = cyc1 + cyc2 - 1."""
        first, second = split(rhomb, CutPane(L(0, 0)))
        record = check_cut_lemma(first, [L(0, 0)], second, [L(0, 0)])
        assert (record.eta, record.delta1, record.delta2) == (1, 1, 1)
        assert (record.cyc1, record.cyc2, record.cyc) == (1, 1, 1)
        assert record.inequality_holds
        assert record.single_pane_equality

    def test_hexagon_tree_pieces(self):
        """Cutting a two-hexagon tree at its cut pane."""
        tree = hexagon_tree(2)
        cut = next(iter(cut_panes(tree)))
        first, second = split(tree, cut)
        record = check_cut_lemma(first, [cut.pane], second, [cut.pane])
        assert record.cyc == 3
        assert record.single_pane_equality

    def test_overlapping_pieces(self):
        """Pieces sharing cells are rejected."""
        with pytest.raises(BadDecompositionError):
            check_cut_lemma(TRI, [H(0, 0)], TRI, [H(0, 0)])

    def test_mismatched_panes(self, rhomb):
        """Both pieces must list the same panes."""
        first, second = split(rhomb, CutPane(L(0, 0)))
        with pytest.raises(BadDecompositionError):
            check_cut_lemma(first, [L(0, 0)], second, [H(0, 1)])


class TestReport:
    """Tests for report exit codes and output."""

    def test_exit_codes(self):
        """Theorem violations outrank the conjecture."""
        assert report_with({}).exit_code == EXIT_CLEAN
        assert report_with({PERIM_CONJECTURE: ["abc"]}).exit_code == EXIT_CONJECTURE_VIOLATION
        assert report_with({PERIM_CONJECTURE: ["abc"], AREA_BOUND: ["abc"]}).exit_code == EXIT_THEOREM_VIOLATION

    def test_raise_for_violations(self):
        """The first violated check is raised with its polygon."""
        report_with({}).raise_for_violations()
        with pytest.raises(SuiteFailure) as exc_info:
            report_with({AREA_BOUND: ["abc"]}).raise_for_violations()
        assert exc_info.value.check == AREA_BOUND
        assert exc_info.value.cells == [[0, 0, "U"]]

    def test_small_sweep(self):
        """Up to area 6 the sweep is clean and the hexagon is the only equality case."""
        report = verify_suite(6)
        assert report.exit_code == EXIT_CLEAN
        assert report.counts == {1: 1, 2: 1, 3: 1, 4: 3, 5: 4, 6: 12}
        assert report.equality_cases == [canonical_hash(HEX)]
        assert not any(report.violations.values())
        assert report.minima()["area_slack"] == 0

    def test_strict_sweep_raises(self, monkeypatch, hexagon):
        """A strict sweep stops with the first failing polygon."""
        checks = verification.analyze_for_suite

        def failing(P, mode):
            record, _ = checks(P, mode)
            return record, [AREA_BOUND]

        monkeypatch.setattr(verification, "analyze_for_suite", failing)
        with pytest.raises(SuiteFailure) as exc_info:
            verify_suite(6, polygons=[hexagon], strict=True)
        assert exc_info.value.check == AREA_BOUND
        assert exc_info.value.polygon_hash == canonical_hash(hexagon)
        assert len(exc_info.value.cells) == 6

    def test_strict_sweep_clean(self):
        """A clean strict sweep returns its report."""
        assert verify_suite(5, strict=True).exit_code == EXIT_CLEAN

    def test_fixed_mode_hashes_are_distinct(self):
        """Each fixed polygon gets its own hash in a fixed sweep."""
        report = verify_suite(4, mode="fixed")
        hashes = [r.canonical_hash for r in report.records]
        assert [r.area for r in report.records] == [1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 3] + [4] * 14
        assert len(set(hashes)) == len(hashes)

    def test_explicit_polygons(self, hexagon, hex_with_tail):
        """A sweep can run over a given list of polygons."""
        report = verify_suite(9, polygons=[hex_with_tail, hexagon])
        assert [r.area for r in report.records] == [6, 9]
        assert report.counts[9] == 1

    def test_csv(self, tmp_path):
        """CSV has the fixed columns and one row per polygon."""
        report = verify_suite(4)
        path = tmp_path / "sweep.csv"
        text = write_csv(report, path)
        assert path.read_text(encoding="utf-8") == text
        frame = pd.read_csv(io.StringIO(text))
        assert list(frame.columns) == CSV_COLUMNS
        assert len(frame) == 6

    def test_summary_json(self):
        """The json summary lists counts by area as strings."""
        summary = json.loads(summary_json(verify_suite(3)))
        assert summary["counts"] == {"1": 1, "2": 1, "3": 1}
        assert summary["exit_code"] == 0
        assert summary["mode"] == "free"


@pytest.mark.slow
class TestFullSweeps:
    """Exhaustive sweeps."""

    def test_area_ten_is_clean(self):
        """No check fails on any polygon up to area 10."""
        report = verify_suite(10, strict=True)
        assert report.exit_code == EXIT_CLEAN

    def test_area_twelve_equality_cases(self):
        """Up to area 12 equality holds exactly for the hexagon and the two-hexagon tree."""
        report = verify_suite(12, threads=2, strict=True)
        assert report.exit_code == EXIT_CLEAN
        assert sorted(report.equality_cases) == sorted([canonical_hash(HEX), canonical_hash(hexagon_tree(2))])
        assert report.minima()["conjecture_slack"] >= 0
