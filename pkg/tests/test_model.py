import pytest
from hypothesis import given
from hypothesis import strategies as st

from teeda.model import (
    Category,
    Corpus,
    DataFormat,
    DataJacket,
    DataKind,
    DataRequest,
    DataType,
    DuplicateIdError,
    EmptyLabelError,
    FewVariablesWarning,
    SharingCondition,
    ValidationFailed,
    normalize_label,
    validate_jacket,
    validate_request,
)


class TestNormalizeLabel:
    def test_strips_and_lowercases(self):
        assert normalize_label("  Date ") == "date"

    def test_collapses_internal_whitespace(self):
        assert normalize_label("Area   Name") == "area name"

    def test_synonyms_stay_distinct(self):
        assert normalize_label("address") != normalize_label("location")

    @pytest.mark.parametrize("raw", ["", "   ", "\t\n"])
    def test_blank_rejected(self, raw):
        with pytest.raises(EmptyLabelError):
            normalize_label(raw)

    @given(st.text())
    def test_idempotent_or_rejected(self, raw):
        try:
            once = normalize_label(raw)
        except EmptyLabelError:
            assert not raw.strip()
            return
        assert normalize_label(once) == once
        assert once == once.strip()
        assert "  " not in once


class TestEnums:
    def test_cardinalities(self):
        assert len(DataKind) == 2
        assert len(DataType) == 9
        assert len(DataFormat) == 9
        assert len(SharingCondition) == 7
        assert len(Category) == 3

    @pytest.mark.parametrize("enum", [DataType, DataFormat, SharingCondition, Category])
    def test_canonical_tokens_round_trip(self, enum):
        for member in enum:
            assert enum.parse(member.value) is member
            assert enum.parse(member.value).value == member.value

    def test_case_insensitive_parse(self):
        assert DataType.parse("Time Series") is DataType.TIME_SERIES
        assert DataFormat.parse("csv") is DataFormat.CSV
        assert SharingCondition.parse("NON-SHAREABLE") is SharingCondition.NON_SHAREABLE

    def test_aliases(self):
        assert DataType.parse("number") is DataType.NUMERICAL_VALUE
        assert DataType.parse("others") is DataType.OTHER
        assert DataFormat.parse("others") is DataFormat.OTHER
        assert (
            SharingCondition.parse("shareable by purchased")
            is SharingCondition.SHAREABLE_BY_PURCHASE
        )

    def test_unknown_tokens_rejected(self):
        with pytest.raises(ValueError):
            DataType.parse("hologram")
        with pytest.raises(ValueError):
            DataFormat.parse("xlsx")
        with pytest.raises(ValueError):
            SharingCondition.parse("free for all")


class TestValidateRequest:
    def test_worked_example(self, example_request):
        assert example_request.name.startswith("Needs of countries")
        assert len(example_request.variables) == 8
        assert "age group" in example_request.variables
        assert example_request.purpose.startswith("There was hoarding")

    def test_dedup_after_normalization(self):
        with pytest.warns(FewVariablesWarning):
            request = validate_request("x", ["date", "Date"])
        assert request.variables == frozenset({"date"})

    def test_missing_name(self):
        with pytest.raises(ValidationFailed) as excinfo:
            validate_request("", ["date"])
        assert any(e.reason == "MissingName" for e in excinfo.value.errors)

    def test_missing_variables(self):
        with pytest.raises(ValidationFailed) as excinfo:
            validate_request("x", [])
        assert any(e.reason == "MissingVariables" for e in excinfo.value.errors)

    def test_all_errors_collected(self):
        with pytest.raises(ValidationFailed) as excinfo:
            validate_request("  ", ["   "])
        reasons = {e.reason for e in excinfo.value.errors}
        assert "MissingName" in reasons
        assert "MissingVariables" in reasons

    def test_purpose_optional_and_unbounded(self):
        request = validate_request("x", ["date", "age"], "word " * 10_000)
        assert len(request.purpose) > 40_000

    def test_variables_order_insensitive(self):
        a = validate_request("x", ["date", "age"], id="same")
        b = validate_request("x", ["age", "date"], id="same")
        assert a == b


class TestValidateJacket:
    def test_worked_example_with_aliases(self, example_jacket):
        assert example_jacket.variables == frozenset(
            {"total number of cases", "daily number of cases", "date"}
        )
        assert example_jacket.types == frozenset(
            {DataType.TIME_SERIES, DataType.NUMERICAL_VALUE, DataType.TABLE, DataType.IMAGE}
        )
        assert example_jacket.formats == frozenset({DataFormat.CSV, DataFormat.OTHER})
        assert example_jacket.sharing is SharingCondition.GENERALLY_SHAREABLE

    def test_empty_metadata_is_fine(self):
        jacket = validate_jacket("x", ["date", "age"])
        assert jacket.types == frozenset()
        assert jacket.formats == frozenset()
        assert jacket.sharing is None
        assert jacket.outline is None

    def test_unknown_sharing_condition(self):
        with pytest.raises(ValidationFailed) as excinfo:
            validate_jacket("x", ["date", "age"], sharing="free for all")
        assert any("UnknownSharingCondition" in e.reason for e in excinfo.value.errors)

    def test_unknown_type_and_format(self):
        with pytest.raises(ValidationFailed) as excinfo:
            validate_jacket("x", ["date", "age"], types=["hologram"], formats=["xlsx"])
        reasons = [e.reason for e in excinfo.value.errors]
        assert any(r.startswith("UnknownType") for r in reasons)
        assert any(r.startswith("UnknownFormat") for r in reasons)

    def test_single_variable_warns_but_passes(self):
        with pytest.warns(FewVariablesWarning):
            jacket = validate_jacket("x", ["date"])
        assert jacket.variables == frozenset({"date"})


@st.composite
def _any_fields(draw):
    name = draw(st.text(max_size=30))
    variables = draw(st.lists(st.text(max_size=15), max_size=8))
    purpose = draw(st.one_of(st.none(), st.text(max_size=30)))
    return name, variables, purpose


class TestValidationNeverProducesInvalidItems:
    @given(_any_fields())
    def test_request_invariants(self, fields):
        name, variables, purpose = fields
        try:
            request = validate_request(name, variables, purpose)
        except ValidationFailed:
            return
        assert request.name.strip()
        assert len(request.variables) >= 1
        for label in request.variables:
            assert label == normalize_label(label)

    @given(_any_fields())
    def test_jacket_invariants(self, fields):
        name, variables, outline = fields
        try:
            jacket = validate_jacket(name, variables, outline)
        except ValidationFailed:
            return
        assert jacket.name.strip()
        assert len(jacket.variables) >= 1
        for label in jacket.variables:
            assert label == normalize_label(label)


class TestCorpus:
    def test_duplicate_ids_rejected(self, example_request):
        corpus = Corpus([example_request])
        with pytest.raises(DuplicateIdError):
            corpus.add(example_request)

    def test_duplicate_across_kinds_rejected(self):
        request = validate_request("r", ["date", "age"], id="shared")
        jacket = validate_jacket("j", ["date", "age"], id="shared")
        corpus = Corpus([request])
        with pytest.raises(DuplicateIdError):
            corpus.add(jacket)

    def test_insertion_order_preserved(self, example_request, example_jacket):
        corpus = Corpus([example_jacket, example_request])
        assert [item.id for item in corpus] == ["prov-cases", "req-needs"]

    def test_kind_partitions(self, example_corpus):
        assert [r.id for r in example_corpus.requests] == ["req-needs"]
        assert [j.id for j in example_corpus.jackets] == ["prov-cases"]

    def test_snapshot_isolated(self, example_corpus):
        snap = example_corpus.snapshot()
        example_corpus.remove("req-needs")
        assert "req-needs" in snap
        assert "req-needs" not in example_corpus

    def test_items_are_immutable(self, example_request):
        with pytest.raises(AttributeError):
            example_request.name = "other"
