"""Smoke tests for the compiled module: the bindings surface, not the logic.

The C++ suites own correctness; these only prove the package imports, the
JSON payloads become dicts, and errors map onto Python exceptions.
"""
import pytest

import proslm

STATEMENT = (
    "UCSC has three dining halls: College Nine/Ten Dining Hall, "
    "Cowell/Stevenson Dining Hall, and Crown/Merrill Dining Hall."
)


def test_solve_returns_plain_dicts():
    result = proslm.solve("p(a).\np(b).\nq(X) :- p(X).", "q(Y)")
    assert result["truth"] is True
    assert result["resource_error"] is None
    assert result["answer"] == {"Y": "a"}
    assert result["steps"] > 0
    assert result["tree"]["kind"] == "goal"
    assert result["tree"]["goal"] == "q(Y)"
    assert result["rendered_tree"].startswith("+ q(a)")


def test_solve_reports_depth_cutoff_with_partial_tree():
    result = proslm.solve("loop(X) :- loop(X).", "loop(a)", depth_limit=16)
    assert result["truth"] is False
    assert result["resource_error"] == "depth"
    assert result["tree"]["children"]


def test_parse_errors_are_value_errors():
    assert issubclass(proslm.ParseError, ValueError)
    with pytest.raises(proslm.ParseError, match="syntax error"):
        proslm.solve("p(a).", "p(")


def test_canonicalize_program_round_trips():
    canonical = proslm.canonicalize_program("p( a ,B) :- q(B),r( a ).")
    assert canonical == "p(a, B) :- q(B), r(a).\n"
    assert proslm.canonicalize_program(canonical) == canonical


def test_parse_goals_splits_conjunctions():
    assert proslm.parse_goals("p(X), q(X, [a, b])") == ["p(X)", "q(X, [a, b])"]


@pytest.fixture(scope="module")
def engine():
    return proslm.Engine("config/proslm.conf")


def test_engine_exposes_kb_shape(engine):
    assert engine.predicates()[:3] == ["status/4", "isOpen/3", "study_place/2"]
    assert engine.kb_size() == 15
    assert engine.domain() == "ucsc"


def test_engine_ask_carries_context_and_response(engine):
    bundle = engine.ask("Is the pool busy?")
    assert bundle["question"] == "Is the pool busy?"
    assert bundle["context_nl"] == ["The weather is sunny"]
    assert bundle["response"].startswith("The weather is sunny.")
    assert bundle["results"][0]["truth"] is True


def test_engine_validate_reports_verdicts(engine):
    report = engine.validate(STATEMENT)
    assert [v["verdict"] for v in report["verdicts"]] == [
        "not_proven",
        "proved",
        "not_proven",
        "proved",
    ]
    assert report["overall"] is False
    assert report["caveat"]


def test_engine_query_returns_solver_payload(engine):
    result = engine.query("openingHours(pool, monday, X, Y)")
    assert result["truth"] is True
    assert result["answer"] == {"X": "900", "Y": "1900"}
