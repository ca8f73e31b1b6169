import json
import random

import pytest

from teeda.model import (
    Category,
    Corpus,
    DataKind,
    DuplicateIdError,
    validate_jacket,
    validate_request,
)
from teeda.network import build_network
from teeda.persistence import (
    HeaderMismatchError,
    ParseError,
    RecordValidationError,
    document_to_item,
    export_csv,
    export_network,
    import_csv,
    item_to_document,
    load_corpus,
    load_network,
    save_corpus,
)

from .oracles import random_corpus


class TestItemDocuments:
    def test_request_document_shape(self, example_request):
        doc = item_to_document(example_request)
        assert doc["kind"] == "request"
        assert doc["variables"] == sorted(example_request.variables)
        assert "outline" not in doc and "types" not in doc and "sharing" not in doc

    def test_jacket_document_uses_canonical_tokens(self, example_jacket):
        doc = item_to_document(example_jacket)
        assert doc["types"] == ["time series", "numerical value", "table", "image"]
        assert doc["formats"] == ["CSV", "other"]
        assert doc["sharing"] == "generally shareable"

    def test_category_token_round_trip(self):
        request = validate_request(
            "x", ["date", "age"], id="r1", category=Category.INDIVIDUAL_DECISION_MAKING
        )
        doc = item_to_document(request)
        assert doc["category"] == "individual decision-making"
        item, _ = document_to_item(doc)
        assert item == request

    def test_kind_mismatched_fields_rejected(self):
        doc = {"id": "x", "kind": "request", "name": "n", "variables": ["date"],
               "sharing": "generally shareable"}
        with pytest.raises(Exception) as excinfo:
            document_to_item(doc)
        assert "FieldNotAllowedForKind" in str(excinfo.value)

    def test_unknown_field_strict_vs_lenient(self):
        doc = {"id": "x", "kind": "request", "name": "n", "variables": ["date", "age"],
               "note": "keep me"}
        with pytest.raises(Exception):
            document_to_item(doc, strict=True)
        item, extras = document_to_item(doc, strict=False)
        assert extras == {"note": "keep me"}
        assert item.id == "x"


class TestCorpusFiles:
    def test_fixture_round_trip(self, example_corpus, tmp_path):
        path = tmp_path / "corpus.jsonl"
        save_corpus(example_corpus, path)
        loaded = load_corpus(path)
        assert loaded == example_corpus
        assert [i.id for i in loaded] == ["req-needs", "prov-cases"]

    def test_empty_file_and_empty_corpus(self, tmp_path):
        path = tmp_path / "corpus.jsonl"
        path.write_text("", encoding="utf-8")
        assert len(load_corpus(path)) == 0
        save_corpus(Corpus(), path)
        assert path.read_text(encoding="utf-8") == ""

    def test_duplicate_id_rejected(self, tmp_path):
        record = json.dumps(
            {"id": "dup", "kind": "request", "name": "n", "variables": ["date", "age"]}
        )
        path = tmp_path / "corpus.jsonl"
        path.write_text(record + "\n" + record + "\n", encoding="utf-8")
        with pytest.raises(DuplicateIdError):
            load_corpus(path)

    def test_parse_error_carries_line(self, tmp_path):
        path = tmp_path / "corpus.jsonl"
        good = json.dumps(
            {"id": "a", "kind": "request", "name": "n", "variables": ["date", "age"]}
        )
        path.write_text(good + "\n{broken\n", encoding="utf-8")
        with pytest.raises(ParseError) as excinfo:
            load_corpus(path)
        assert excinfo.value.line == 2

    def test_validation_error_carries_line_and_reason(self, tmp_path):
        path = tmp_path / "corpus.jsonl"
        bad = json.dumps({"id": "a", "kind": "request", "name": "", "variables": ["date"]})
        path.write_text(bad + "\n", encoding="utf-8")
        with pytest.raises(RecordValidationError) as excinfo:
            load_corpus(path)
        assert excinfo.value.line == 1
        assert any(e.reason == "MissingName" for e in excinfo.value.errors)

    def test_random_round_trips_with_non_ascii(self, tmp_path):
        rng = random.Random(50)
        for i in range(20):
            corpus = random_corpus(rng, max_items=40)
            path = tmp_path / f"c{i}.jsonl"
            save_corpus(corpus, path)
            assert load_corpus(path) == corpus

    def test_save_load_save_is_byte_identical(self, tmp_path):
        rng = random.Random(51)
        corpus = random_corpus(rng, max_items=60)
        first = tmp_path / "first.jsonl"
        second = tmp_path / "second.jsonl"
        save_corpus(corpus, first)
        save_corpus(load_corpus(first), second)
        assert first.read_bytes() == second.read_bytes()

    def test_non_ascii_labels_survive(self, tmp_path):
        jacket = validate_jacket("感染データ", ["都市名", "感染者数"], id="jp1")
        path = tmp_path / "corpus.jsonl"
        save_corpus(Corpus([jacket]), path)
        assert "都市名" in path.read_text(encoding="utf-8")
        assert load_corpus(path).get("jp1").variables == frozenset({"都市名", "感染者数"})

    def test_lenient_extras_preserved_on_save(self, tmp_path):
        doc = {"id": "x", "kind": "request", "name": "n",
               "variables": ["age", "date"], "note": "keep me"}
        path = tmp_path / "corpus.jsonl"
        path.write_text(json.dumps(doc) + "\n", encoding="utf-8")
        corpus = load_corpus(path, strict=False)
        out = tmp_path / "out.jsonl"
        save_corpus(corpus, out)
        assert json.loads(out.read_text(encoding="utf-8"))["note"] == "keep me"


class TestCsvImport:
    def _write(self, tmp_path, text):
        path = tmp_path / "rows.csv"
        path.write_text(text, encoding="utf-8")
        return path

    def test_jacket_row(self, tmp_path):
        path = self._write(
            tmp_path,
            "name,variables,outline,types,formats,sharing\n"
            'Trends in the number of positive cases,'
            "total number of cases;daily number of cases;date,"
            ",time series;number,CSV;others,generally shareable\n",
        )
        result = import_csv(path, DataKind.PROVIDABLE)
        assert result.errors == ()
        (jacket,) = result.items
        assert jacket.variables == frozenset(
            {"total number of cases", "daily number of cases", "date"}
        )
        assert item_to_document(jacket)["formats"] == ["CSV", "other"]

    def test_blank_variables_is_row_error(self, tmp_path):
        path = self._write(
            tmp_path,
            "name,variables,purpose\nok name,,some purpose\nother,date;age,\n",
        )
        result = import_csv(path, DataKind.REQUEST)
        assert len(result.items) == 1
        assert len(result.errors) == 1
        assert result.errors[0].row == 2
        assert any(e.reason == "MissingVariables" for e in result.errors[0].errors)

    def test_mixed_file_counts(self, tmp_path):
        rows = ["name,variables,purpose"]
        expected_good = 0
        for i in range(20):
            if i % 4 == 0:
                rows.append(f",date;age,row {i}")  # missing name
            else:
                rows.append(f"request {i},date;var{i},purpose {i}")
                expected_good += 1
        path = self._write(tmp_path, "\n".join(rows) + "\n")
        result = import_csv(path, DataKind.REQUEST)
        assert len(result.items) == expected_good == 15
        assert len(result.errors) == 5

    def test_header_mismatch(self, tmp_path):
        path = self._write(tmp_path, "title,vars\nx,date\n")
        with pytest.raises(HeaderMismatchError):
            import_csv(path, DataKind.REQUEST)

    def test_kind_specific_headers(self, tmp_path):
        path = self._write(tmp_path, "name,variables,purpose\nx,date;age,\n")
        with pytest.raises(HeaderMismatchError):
            import_csv(path, DataKind.PROVIDABLE)


class TestCsvExport:
    def test_round_trip(self, tmp_path, example_corpus):
        path = tmp_path / "jackets.csv"
        export_csv(example_corpus, path, DataKind.PROVIDABLE)
        result = import_csv(path, DataKind.PROVIDABLE)
        assert result.errors == ()
        (jacket,) = result.items
        original = example_corpus.get("prov-cases")
        assert jacket.variables == original.variables
        assert jacket.types == original.types
        assert jacket.sharing == original.sharing

    def test_semicolon_label_rejected(self, tmp_path):
        request = validate_request("x", ["a;b", "date"], id="r1")
        with pytest.raises(ValueError):
            export_csv([request], tmp_path / "out.csv", DataKind.REQUEST)


class TestNetworkDocuments:
    def test_two_node_fixture(self, tmp_path, example_corpus):
        network = build_network(example_corpus)
        path = tmp_path / "network.json"
        export_network(network, path)
        doc = json.loads(path.read_text(encoding="utf-8"))
        assert len(doc["nodes"]) == 2
        assert doc["edges"] == []

    def test_empty_network(self, tmp_path):
        path = tmp_path / "network.json"
        export_network(build_network(Corpus()), path)
        doc = json.loads(path.read_text(encoding="utf-8"))
        assert doc == {"nodes": [], "edges": []}

    def test_round_trip_random(self, tmp_path):
        rng = random.Random(52)
        for i in range(10):
            network = build_network(random_corpus(rng, max_items=30))
            path = tmp_path / f"n{i}.json"
            export_network(network, path)
            assert load_network(path) == network
