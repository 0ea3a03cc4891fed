"""Lint pipeline: clean fixtures stay clean, defects trip their code."""

import json

import pytest
from hypothesis import given, strategies as st

from a2uikit.lint import LEVELS, LINT_CODES, lint_response, lint_text
from a2uikit.protocol import parse_response

from conftest import defect_manifest, defect_text, golden_paths

MANIFEST = defect_manifest()


@pytest.mark.parametrize("path", golden_paths(), ids=lambda p: p.stem)
def test_golden_fixtures_are_clean(path):
    report = lint_text(path.read_text())
    assert report.parse_ok
    assert report.issues == []
    assert report.is_clean


@pytest.mark.parametrize("entry", MANIFEST, ids=lambda e: e["code"])
def test_defect_trips_exactly_its_code(entry):
    report = lint_text(defect_text(entry["code"]))
    assert [i.code for i in report.issues] == [entry["code"]]
    assert report.issues[0].location == entry["location"]


def test_manifest_covers_every_code():
    assert {e["code"] for e in MANIFEST} == set(LINT_CODES)


def test_levels_are_ordered():
    assert LEVELS == ("format", "structure", "binding", "semantic")


@pytest.mark.parametrize("entry", MANIFEST, ids=lambda e: e["code"])
def test_issue_level_and_severity_match_registry(entry):
    report = lint_text(defect_text(entry["code"]))
    issue = report.issues[0]
    level, severity, category = LINT_CODES[entry["code"]]
    assert issue.level == level
    assert issue.severity == severity


def test_parse_failure_reports_format_only():
    report = lint_text('{"text_response": "x", "a2ui": [')
    assert not report.parse_ok
    assert [i.code for i in report.issues] == ["FORMAT_PARSE"]
    assert report.response is None


def test_error_and_warning_split():
    # dangling ref is an error; an unwritten binding is only a warning
    report = lint_text(defect_text("BIND_DANGLING_REF"))
    assert report.has_errors
    assert len(report.errors()) == 1 and report.warnings() == []
    report = lint_text(defect_text("BIND_UNWRITTEN"))
    assert not report.has_errors
    assert len(report.warnings()) == 1


def test_compact_rendering_mentions_code_and_location():
    report = lint_text(defect_text("STRUCT_UNKNOWN_COMPONENT"))
    line = report.compact()
    assert "STRUCT_UNKNOWN_COMPONENT" in line
    assert "Lable" in line


def test_known_surfaces_suppress_unbegun_warning():
    raw = defect_text("SEM_UNBEGUN_SURFACE")
    assert not lint_text(raw, known_surfaces=frozenset({"s9"})).issues
    assert lint_text(raw).issues


def test_no_submit_flags_the_needy_component():
    report = lint_text(defect_text("SEM_NO_SUBMIT"))
    issue = report.issues[0]
    assert issue.code == "SEM_NO_SUBMIT"
    assert "components/0" in issue.location
    assert "Button" in issue.message


def test_self_submitting_component_satisfies_submit_rule():
    # keypad submits itself, so a surface of one keypad raises nothing
    doc = {
        "text_response": "x",
        "a2ui": [
            {"beginRendering": {"surfaceId": "s", "root": "k"}},
            {"surfaceUpdate": {"surfaceId": "s", "components": [
                {"id": "k", "component": {"PasswordKeypad": {
                    "value": {"path": "/pin"},
                    "action": {"name": "go", "context": []}}}},
            ]}},
            {"dataModelUpdate": {"surfaceId": "s", "path": "/", "contents": [
                {"key": "pin", "valueString": "0"}]}},
        ],
    }
    assert lint_text(json.dumps(doc)).is_clean


def test_warning_counts_by_category():
    report = lint_text(defect_text("SEM_EMPTY_VALUE"))
    assert report.warning_counts_by_category() == {"value-format": 1}


def test_lint_response_matches_lint_text():
    raw = golden_paths()[0].read_text()
    via_text = lint_text(raw)
    via_resp = lint_response(parse_response(raw))
    assert [i.code for i in via_text.issues] == [i.code for i in via_resp.issues]


@given(st.text(max_size=40).filter(lambda s: not s.strip().startswith("{")))
def test_arbitrary_non_json_never_raises(raw):
    report = lint_text(raw)
    assert not report.parse_ok
    assert report.issues[0].code in ("FORMAT_PARSE", "FORMAT_SHAPE")
