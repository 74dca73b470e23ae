"""Tests for catalog module."""

from pathlib import Path

import pandas as pd
import pytest

from src.catalog import (
    RECORD_COLUMNS,
    CatalogStore,
    LoopFileReader,
    analyze,
    analyze_all,
    census_summary,
    enumerate_right_bol,
    histogram_frame,
    in_nu_population,
    nu_histogram,
    nu_set,
    read_loops,
    records_to_frame,
    run_selftest,
    table_digest,
    write_loops,
    write_tsv,
)
from src.exceptions import (
    NotLatin,
    ParseError,
    PopulationFilterViolated,
    SearchBudgetExceeded,
)
from src.extension import extend
from src.loopcore import (
    Loop,
    are_isomorphic,
    has_central_squares,
    is_associative,
    is_right_bol,
    small_groups,
)


class TestLoopFileReader:
    """Tests for LoopFileReader."""

    def test_single_trivial_loop(self) -> None:
        """Test that comments are skipped and a one-element block is read."""
        loops = LoopFileReader(Path("unused")).parse("# comment\nloop T\norder 1\n1\n")
        assert len(loops) == 1
        assert loops[0].order == 1
        assert loops[0].name == "T"

    def test_blocks_and_one_based_entries(self) -> None:
        """Test that blank-line separated blocks are read with 1-based entries."""
        text = "loop A\norder 2\n1 2\n2 1\n\nloop B\norder 3\n1 2 3\n2 3 1\n3 1 2\n"
        loops = LoopFileReader(Path("unused")).parse(text)
        assert [loop.name for loop in loops] == ["A", "B"]
        assert loops[1].mul(1, 1) == 2

    def test_short_row(self) -> None:
        """파싱 오류는 줄 번호를 포함한다."""
        with pytest.raises(ParseError) as info:
            LoopFileReader(Path("unused")).parse("loop A\norder 2\n1 2\n2\n")
        assert info.value.line == 4

    def test_entry_out_of_range(self) -> None:
        """Test that an entry larger than the order is rejected."""
        with pytest.raises(ParseError):
            LoopFileReader(Path("unused")).parse("loop A\norder 2\n1 2\n2 3\n")

    def test_missing_rows(self) -> None:
        """Test that a block with too few rows is rejected."""
        with pytest.raises(ParseError):
            LoopFileReader(Path("unused")).parse("loop A\norder 3\n1 2 3\n")

    def test_row_outside_block(self) -> None:
        """Test that rows before any loop header are rejected."""
        with pytest.raises(ParseError):
            LoopFileReader(Path("unused")).parse("1 2\n2 1\n")

    def test_not_latin_names_the_loop(self) -> None:
        """Test that a non-Latin table error names its loop."""
        with pytest.raises(NotLatin, match="Bad"):
            LoopFileReader(Path("unused")).parse("loop Bad\norder 2\n1 2\n2 2\n")

    def test_missing_file(self, test_data_dir: Path) -> None:
        """Test that a missing file raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            read_loops(test_data_dir / "missing.txt")


class TestLoopFileWriter:
    """Tests for write_loops."""

    def test_written_file_reads_back(self, test_data_dir: Path, q8: Loop, s3: Loop) -> None:
        """Test that written loops read back equal and named."""
        path = test_data_dir / "loops.txt"
        write_loops(path, [q8, s3])
        loops = read_loops(path)
        assert loops == [q8, s3]
        assert [loop.name for loop in loops] == ["Q8", "S3"]

    def test_output_is_deterministic(self, test_data_dir: Path, d4: Loop, c3: Loop) -> None:
        """Test that rewriting a read file gives identical bytes."""
        first = test_data_dir / "first.txt"
        second = test_data_dir / "second.txt"
        write_loops(first, [d4, c3])
        write_loops(second, read_loops(first))
        assert first.read_bytes() == second.read_bytes()

    def test_unnamed_loops_get_positional_names(self, test_data_dir: Path, c2: Loop) -> None:
        """Test that unnamed loops are named by position."""
        path = test_data_dir / "unnamed.txt"
        write_loops(path, [c2.with_name(None)])
        assert path.read_text(encoding="utf-8").startswith("loop loop1\norder 2\n1 2\n2 1\n")


class TestAnalysis:
    """Tests for analyze and TSV reports."""

    def test_cyclic_group_of_order_two(self, c2: Loop) -> None:
        """Test the analysis record of C2."""
        record = analyze(c2)
        assert record.right_bol and record.associative and record.aip
        assert record.exponent == 2
        assert record.core_orbits == 2
        assert record.center == 2
        assert record.nu is None

    def test_right_nucleus_of_q8_extension(self, q8: Loop) -> None:
        """Test that the Q8 extension has a right nucleus of size 4."""
        record = analyze(extend(q8).carrier)
        assert record.right_bol
        assert not record.associative
        assert record.right_nucleus == 4

    def test_non_bol_loop_has_undefined_values(self, non_bol: Loop) -> None:
        """Test that Bol-only values are undefined for a non-Bol loop."""
        record = analyze(non_bol)
        assert not record.right_bol
        assert record.exponent is None
        assert record.core_orbits is None
        assert record.nu is None

    def test_frame_columns(self, c3: Loop, non_bol: Loop) -> None:
        """Test report columns and the nullable exponent column."""
        frame = records_to_frame(analyze_all([c3, non_bol]))
        assert list(frame.columns) == RECORD_COLUMNS
        assert frame["exponent"].dtype == "Int64"
        assert pd.isna(frame.loc[1, "exponent"])
        assert frame.loc[0, "exponent"] == 3

    def test_write_tsv(self, test_data_dir: Path, c3: Loop, s3: Loop) -> None:
        """Test that the TSV report has a header and one row per loop."""
        path = test_data_dir / "report" / "loops.tsv"
        write_tsv(analyze_all([c3, s3]), path)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0].split("\t") == RECORD_COLUMNS
        assert len(lines) == 3
        assert lines[1].startswith("C3\t3\tTrue")


class TestCatalogStore:
    """Tests for CatalogStore on SQLite."""

    @pytest.fixture
    def store(self, tmp_path: Path) -> CatalogStore:
        store = CatalogStore(f"sqlite:///{tmp_path / 'catalog.db'}")
        store.create_tables()
        return store

    def test_insert_then_update(self, store: CatalogStore, c4: Loop, q8: Loop) -> None:
        """Test that saving twice updates instead of inserting."""
        pairs = [(loop, analyze(loop)) for loop in (c4, q8)]
        assert store.save_records(pairs) == {"inserted": 2, "updated": 0}
        assert store.save_records(pairs) == {"inserted": 0, "updated": 2}

    def test_load_records(self, store: CatalogStore, c4: Loop, s3: Loop) -> None:
        """Test that saved records load back and filter by order."""
        store.save_records([(loop, analyze(loop)) for loop in (c4, s3)])
        frame = store.load_records()
        assert list(frame["name"]) == ["C4", "S3"]
        assert list(frame["digest"]) == [table_digest(c4), table_digest(s3)]
        assert len(store.load_records(order=6)) == 1

    def test_invalid_url(self) -> None:
        """Test that a malformed database URL is rejected."""
        with pytest.raises(ValueError):
            CatalogStore("not-a-url")


class TestEnumeration:
    """Tests for enumerate_right_bol."""

    def test_trivial_order(self) -> None:
        """Test that order 1 has only the trivial loop."""
        census = enumerate_right_bol(1)
        assert [loop.order for loop in census.loops] == [1]
        assert enumerate_right_bol(1, nonassociative_only=True).loops == []

    def test_small_orders_are_groups(self) -> None:
        """Below order 8 every right Bol loop is a group."""
        expected = {2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1}
        for n, count in expected.items():
            census = enumerate_right_bol(n)
            assert len(census.loops) == count, n
            assert all(is_associative(loop) for loop in census.loops)
            assert enumerate_right_bol(n, nonassociative_only=True).loops == []

    def test_order_four_classes(self, c4: Loop, klein: Loop) -> None:
        """Test that order 4 yields C4 and C2^2 once each."""
        loops = enumerate_right_bol(4).loops
        assert sum(are_isomorphic(loop, c4) is not None for loop in loops) == 1
        assert sum(are_isomorphic(loop, klein) is not None for loop in loops) == 1

    def test_out_of_range(self) -> None:
        """Test that orders above 16 are rejected."""
        with pytest.raises(ValueError):
            enumerate_right_bol(17)

    def test_node_budget(self) -> None:
        """Test that the node budget stops the search with a partial result."""
        with pytest.raises(SearchBudgetExceeded) as info:
            enumerate_right_bol(8, nonassociative_only=True, node_budget=1)
        assert not info.value.partial.complete

    def test_value_order_and_jobs(self) -> None:
        """Test that value order and worker count do not change the result."""
        serial = enumerate_right_bol(6)
        descending = enumerate_right_bol(6, value_order="descending")
        parallel = enumerate_right_bol(6, jobs=2)
        assert serial.loops == descending.loops == parallel.loops

    @pytest.mark.slow
    def test_order_eight(self, bol8: tuple[Loop, ...]) -> None:
        """Test the six nonassociative right Bol loops of order 8."""
        assert len(bol8) == 6
        assert [loop.name for loop in bol8] == [f"RightBol8-{i}" for i in range(1, 7)]
        for loop in bol8:
            assert is_right_bol(loop)
            assert not is_associative(loop)
            assert has_central_squares(loop)

    @pytest.mark.slow
    def test_order_eight_central_squares_and_parallel(self, bol8: tuple[Loop, ...]) -> None:
        """Test the central-squares filter and a parallel run at order 8."""
        central = enumerate_right_bol(8, nonassociative_only=True, central_squares_only=True)
        assert central.loops == list(bol8)
        parallel = enumerate_right_bol(8, nonassociative_only=True, jobs=2)
        assert parallel.loops == list(bol8)


class TestCensus:
    """Tests for the vertical left nucleus census."""

    def test_groups_are_outside_the_population(self, q8: Loop, c4: Loop) -> None:
        """Test that groups are excluded from the nu population."""
        for loop in (q8, c4):
            assert not in_nu_population(loop)
            with pytest.raises(PopulationFilterViolated):
                nu_set(loop)

    def test_summary_of_groups(self) -> None:
        """Test the census summary of the small groups."""
        summary = census_summary(small_groups())
        assert summary.total == 14
        assert summary.central_squares == 13
        assert summary.nu_population == 0

    def test_empty_histogram(self) -> None:
        """Test that an empty population gives a single zero bucket."""
        assert nu_histogram([]) == {0: 0}

    def test_histogram_frame(self) -> None:
        """Test that histogram frames are sorted by k."""
        frame = histogram_frame({2: 3, 0: 1, 1: 0})
        assert list(frame.columns) == ["k", "mu_k"]
        assert list(frame["k"]) == [0, 1, 2]
        assert list(frame["mu_k"]) == [1, 0, 3]

    @pytest.mark.slow
    def test_enumerated_population(self, bol8: tuple[Loop, ...]) -> None:
        """Test that the order-8 histogram covers k = 0..8 for all six loops."""
        population = [loop for loop in bol8 if in_nu_population(loop)]
        histogram = nu_histogram(population)
        assert len(population) == 6
        assert list(histogram) == list(range(9))
        assert sum(histogram.values()) == 6
        for loop in population:
            assert nu_set(loop) <= frozenset(loop.elements())


class TestSelftest:
    """Tests for run_selftest."""

    @pytest.mark.slow
    def test_all_checks_pass(self) -> None:
        """Test that every self-test check passes on the full corpus."""
        results = run_selftest(include_enumerated=True)
        failed = [r for r in results if not r.ok]
        assert not failed, failed
        assert results[0].name == "order-8 census"
