import pytest

from teeda.model import Category, Corpus, validate_jacket, validate_request


@pytest.fixture
def example_request():
    """The worked data-request example: 8 variables plus a purpose."""
    return validate_request(
        "Needs of countries in the world during COVID-19 pandemic",
        [
            "Country",
            "needs",
            "product name",
            "service name",
            "reason",
            "age",
            "age group",
            "address",
        ],
        "There was hoarding and a toilet paper shortage. We must clarify what "
        "products were really needed and lacking in practice.",
        id="req-needs",
    )


@pytest.fixture
def example_jacket():
    """The worked providable-data example, with the non-canonical 'number'
    and 'others' spellings kept on purpose."""
    return validate_jacket(
        "Trends in the number of positive cases by date of confirmation",
        ["Total number of cases", "daily number of cases", "date"],
        "Open data provided by the Tokyo Metropolitan Government. For more "
        "accurate analysis of the trends of new COVID-19 cases, information on "
        "new COVID-19 cases reported from public health centers was organized "
        "by the date of confirmation by physicians through PCR testing.",
        ["Time series", "number", "table", "image"],
        ["CSV", "others"],
        "Generally shareable",
        id="prov-cases",
    )


@pytest.fixture
def example_corpus(example_request, example_jacket):
    return Corpus([example_request, example_jacket])


_CATEGORIZED_REQUESTS = [
    # (name, variables, category)
    (
        "Needs of countries in the world during COVID-19 pandemic",
        ["country", "needs", "product name", "date"],
        Category.PHENOMENON_UNDERSTANDING,
    ),
    (
        "Number of tests in countries around the world",
        ["country", "number of tests", "date"],
        Category.PHENOMENON_UNDERSTANDING,
    ),
    (
        "Business status impacted by COVID-19",
        ["type of business", "area name", "date"],
        Category.PHENOMENON_UNDERSTANDING,
    ),
    (
        "MeSH population by time of day",
        ["area name", "time of day", "population"],
        Category.PHENOMENON_UNDERSTANDING,
    ),
    (
        "Recommended frequency of going out",
        ["date", "area name", "frequency of going out"],
        Category.INDIVIDUAL_DECISION_MAKING,
    ),
    (
        "Data on the number of contacts",
        ["date", "number of contacts", "address"],
        Category.INDIVIDUAL_DECISION_MAKING,
    ),
    (
        "Behavioral history of those infected with COVID-19",
        ["date", "address", "behavioral history"],
        Category.INDIVIDUAL_DECISION_MAKING,
    ),
    (
        "Travel records of infected persons",
        ["date", "address", "travel destination"],
        Category.INDIVIDUAL_DECISION_MAKING,
    ),
    (
        "Impact of the postponement of the 2020 Olympics on society",
        ["date", "sex", "age", "economic impact"],
        Category.ORGANIZATIONAL_DECISION_MAKING,
    ),
    (
        "The rate of self-restraint due to COVID-19",
        ["date", "area name", "rate of self-restraint"],
        Category.ORGANIZATIONAL_DECISION_MAKING,
    ),
    (
        "Coping with anxiety during COVID-19 pandemic by age, sex, and prefecture",
        ["age", "sex", "prefecture name", "type of anxiety"],
        Category.ORGANIZATIONAL_DECISION_MAKING,
    ),
    (
        "People's preference changed after the COVID-19 pandemic",
        ["age", "sex", "preference"],
        Category.ORGANIZATIONAL_DECISION_MAKING,
    ),
]


@pytest.fixture
def categorized_corpus():
    """Twelve categorized example requests, four per purpose category."""
    corpus = Corpus()
    for i, (name, variables, category) in enumerate(_CATEGORIZED_REQUESTS, start=1):
        corpus.add(
            validate_request(name, variables, id=f"q{i:02d}", category=category)
        )
    return corpus


