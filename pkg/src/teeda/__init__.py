"""TEEDA: a registry that matches calls for data with providable data
through shared variable labels, analyzes the gap between them, and reports
per-category scenarios for designing data that does not exist yet."""

from .analytics import (
    BreakdownComparison,
    BreakdownReport,
    CorpusStats,
    FrequencyTable,
    UnmetRequest,
    breakdown,
    common_variable_types,
    compare_breakdowns,
    corpus_stats,
    singleton_ratio,
    unmet_requests,
    variable_frequency,
)
from .model import (
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
    FieldError,
    SharingCondition,
    TeedaError,
    UnknownItemError,
    ValidationFailed,
    normalize_label,
    validate_jacket,
    validate_request,
)
from .network import (
    Edge,
    ExchangeNetwork,
    SatisfactionReport,
    UnknownNodeError,
    build_network,
    neighbors,
    rank_candidates,
    satisfaction,
    shared_variables,
)
from .persistence import (
    HeaderMismatchError,
    ImportResult,
    ParseError,
    RecordValidationError,
    export_csv,
    export_network,
    import_csv,
    load_corpus,
    load_network,
    save_corpus,
)
from .registry import Event, Registry, ReplayGapError, UnknownRequestError, replay
from .scenario import (
    CategoryScenario,
    NotARequestError,
    ScenarioReport,
    assign_category,
    category_profile,
    scenario_report,
    suggest_category,
)

__version__ = "0.1.0"
