"""Tests for coloring documents, text exports and bounds tables."""

import json

import networkx as nx
import pytest
from pydantic import ValidationError

from src.constructions.coloring import CompleteColoring, GraphColoring
from src.constructions.factorization import blowup_min_coloring, round_robin_factorization
from src.constructions.max_span import max_span_coloring
from src.errors import EmptySet, InvalidSpec, MalformedDocument, NotVerified
from src.graphs.base import PartiteSpec
from src.output.document import (
    ColoringDocument,
    DocumentKind,
    Provenance,
    ProvenanceSource,
    load_builtin_bases,
    parse_document,
    read_document,
    write_document,
)
from src.output.export import export_coloring, export_edgelist, export_matrix
from src.output.tables import (
    CSV_COLUMNS,
    BoundsTableRow,
    bounds_row,
    bounds_table,
    parse_range,
    render_bounds_csv,
)


@pytest.fixture
def k4_four():
    return CompleteColoring(m=4, t=4, colors=(1, 2, 3, 3, 2, 4))


def _document_text(**overrides):
    payload = {"format_version": "1", "kind": "kpartite", "k": 2, "n": 2, "t": 2, "colors": [1, 2, 2, 1]}
    payload.update(overrides)
    return json.dumps({k: v for k, v in payload.items() if v is not None})


# ── Documents ──

class TestDocuments:
    def test_write_and_read(self, tmp_path):
        coloring = max_span_coloring(PartiteSpec(k=4, n=2))
        provenance = Provenance(source=ProvenanceSource.MAX_SPAN)
        path = write_document(coloring, tmp_path / "nested" / "k4n2.json", provenance)
        document = read_document(path)
        assert document.kind == DocumentKind.KPARTITE
        assert document.provenance.source == ProvenanceSource.MAX_SPAN
        assert document.to_coloring() == coloring

    def test_complete_document(self, tmp_path, k4_four):
        path = write_document(k4_four, tmp_path / "k4.json")
        raw = json.loads(path.read_text())
        assert raw["kind"] == "complete"
        assert raw["m"] == 4
        assert "k" not in raw
        assert "provenance" not in raw
        assert read_document(path).to_coloring() == k4_four

    def test_json_layout(self):
        text = ColoringDocument.from_coloring(blowup_min_coloring(PartiteSpec(k=2, n=2))).to_json()
        assert text.endswith("}\n")
        assert json.loads(text)["colors"] == [1, 2, 2, 1]

    def test_label(self):
        assert parse_document(_document_text()).label == "K_2^2"

    def test_write_gate(self, tmp_path):
        broken = CompleteColoring(m=4, t=4, colors=(1, 1, 3, 3, 2, 4))
        target = tmp_path / "broken.json"
        with pytest.raises(NotVerified):
            write_document(broken, target)
        assert not target.exists()

    def test_graph_colorings_have_no_document(self, tmp_path):
        cycle = GraphColoring.from_graph(nx.cycle_graph(4), [1, 2, 2, 3], 3)
        with pytest.raises(InvalidSpec):
            write_document(cycle, tmp_path / "cycle.json")

    def test_provenance_rejects_unknown_fields(self):
        with pytest.raises(ValidationError):
            Provenance(source=ProvenanceSource.LIFT, author="someone")


class TestMalformedDocuments:
    def test_not_json(self):
        with pytest.raises(MalformedDocument):
            parse_document("{not json")

    def test_wrong_length(self):
        with pytest.raises(MalformedDocument, match="3 colors for 4 edges"):
            parse_document(_document_text(colors=[1, 2, 2]))

    def test_more_colors_than_edges(self):
        parse_document(_document_text(t=4))
        with pytest.raises(MalformedDocument, match="t=5 exceeds the 4 edges"):
            parse_document(_document_text(t=5))
        with pytest.raises(MalformedDocument, match="exceeds"):
            parse_document(_document_text(k=2, n=1, t=10**6, colors=[1]))

    def test_mixed_kinds(self):
        with pytest.raises(MalformedDocument):
            parse_document(_document_text(m=4))
        with pytest.raises(MalformedDocument):
            parse_document(_document_text(kind="complete"))

    def test_unknown_version(self):
        with pytest.raises(MalformedDocument):
            parse_document(_document_text(format_version="2"))

    def test_unknown_field(self):
        with pytest.raises(MalformedDocument):
            parse_document(_document_text(palette=[1, 2]))

    def test_source_in_message(self):
        with pytest.raises(MalformedDocument, match="input.json"):
            parse_document("[]", source="input.json")

    def test_missing_file(self, tmp_path):
        with pytest.raises(MalformedDocument, match="cannot read"):
            read_document(tmp_path / "missing.json")

    def test_invalid_coloring_still_parses(self):
        document = parse_document(_document_text(colors=[1, 1, 2, 2]))
        assert document.to_coloring().colors == (1, 1, 2, 2)


class TestBuiltinBases:
    def test_shipped_bases(self):
        bases = load_builtin_bases()
        assert {m: base.t for m, base in bases.items()} == {
            2: 1, 4: 4, 6: 7, 8: 11, 10: 13, 12: 18, 16: 26,
        }

    def test_highest_t_wins(self, tmp_path, k4_four):
        write_document(round_robin_factorization(4), tmp_path / "a.json")
        write_document(k4_four, tmp_path / "b.json")
        assert load_builtin_bases(tmp_path)[4].t == 4

    def test_bad_files_are_skipped(self, tmp_path, k4_four):
        write_document(k4_four, tmp_path / "good.json")
        (tmp_path / "garbage.json").write_text("nope")
        (tmp_path / "invalid.json").write_text(
            json.dumps({"kind": "complete", "m": 6, "t": 5, "colors": [1] * 15})
        )
        write_document(blowup_min_coloring(PartiteSpec(k=2, n=2)), tmp_path / "partite.json")
        assert list(load_builtin_bases(tmp_path)) == [4]

    def test_missing_directory(self, tmp_path):
        assert load_builtin_bases(tmp_path / "nothing") == {}


# ── Export ──

class TestExport:
    def test_edgelist_partite(self):
        text = export_edgelist(blowup_min_coloring(PartiteSpec(k=2, n=2)))
        assert text == "1 1 2 1 1\n1 1 2 2 2\n1 2 2 1 2\n1 2 2 2 1\n"

    def test_edgelist_complete(self, k4_four):
        lines = export_edgelist(k4_four).splitlines()
        assert lines[0] == "1 2 1"
        assert lines[-1] == "3 4 4"
        assert len(lines) == 6

    def test_matrix_complete(self, k4_four):
        assert export_matrix(k4_four) == ". 1 2 3\n1 . 3 2\n2 3 . 4\n3 2 4 .\n"

    def test_matrix_partite(self):
        assert export_matrix(blowup_min_coloring(PartiteSpec(k=2, n=2))) == "parts 1-2\n1 2\n2 1\n"

    def test_matrix_blocks_and_width(self):
        text = export_matrix(max_span_coloring(PartiteSpec(k=4, n=2)))
        assert text.count("parts ") == 6
        assert "\n\nparts 3-4\n" in text
        wide = export_matrix(max_span_coloring(PartiteSpec(k=2, n=6))).splitlines()
        assert wide[1] == " 1  2  3  4  5  6"
        assert wide[-1] == " 6  7  8  9 10 11"

    def test_unknown_format(self, k4_four):
        assert export_coloring(k4_four, "matrix") == export_matrix(k4_four)
        with pytest.raises(ValueError):
            export_coloring(k4_four, "dot")


# ── Bounds tables ──

class TestBoundsTable:
    def test_even_row(self):
        row = bounds_row(PartiteSpec(k=8, n=1))
        assert ",".join(row.csv_cells()) == "8,1,7,7,true,7,11,11,11,"

    def test_uncolorable_row(self):
        assert ",".join(bounds_row(PartiteSpec(k=3, n=3)).csv_cells()) == "3,3,6,7,false,,,,,"

    def test_odd_k_row(self):
        assert ",".join(bounds_row(PartiteSpec(k=3, n=2)).csv_cells()) == "3,2,4,4,true,4,,,,"

    def test_oracle_column(self):
        row = bounds_row(PartiteSpec(k=2, n=2), oracle_max_edges=4)
        assert row.oracle_W == 3
        assert row.best_bound == 3
        assert bounds_row(PartiteSpec(k=2, n=3), oracle_max_edges=4).oracle_W is None

    def test_row_consistency(self):
        with pytest.raises(ValidationError):
            BoundsTableRow(k=4, n=1, delta=3, chi_prime=3, colorable=True,
                           thm3_bound=4, thm4_bound=3, best_bound=3)
        with pytest.raises(ValidationError):
            BoundsTableRow(k=4, n=1, delta=3, chi_prime=3, colorable=True,
                           thm3_bound=4, thm4_bound=4, best_bound=4, oracle_W=3)

    def test_table_order(self):
        rows = bounds_table([4, 2], [2, 1])
        assert [(r.k, r.n) for r in rows] == [(2, 1), (2, 2), (4, 1), (4, 2)]

    def test_empty(self):
        with pytest.raises(EmptySet):
            bounds_table([], [1])

    def test_csv(self):
        text = render_bounds_csv(bounds_table([2], [1, 2]))
        lines = text.splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert lines[0] == "k,n,delta,chi_prime,colorable,w,thm3_bound,thm4_bound,best_bound,oracle_W"
        assert len(lines) == 3
        assert text.endswith("\n")
        assert render_bounds_csv(bounds_table([2], [1, 2])) == text


class TestParseRange:
    @pytest.mark.parametrize(
        "text,expected",
        [("2-4", [2, 3, 4]), ("4", [4]), ("2,4,8", [2, 4, 8]), ("2-4,8", [2, 3, 4, 8]), ("3,3", [3])],
    )
    def test_valid(self, text, expected):
        assert parse_range(text) == expected

    def test_not_a_number(self):
        with pytest.raises(InvalidSpec):
            parse_range("two")

    def test_empty(self):
        with pytest.raises(EmptySet):
            parse_range(" , ")
        with pytest.raises(EmptySet):
            parse_range("5-3")
