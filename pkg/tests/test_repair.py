"""Deterministic repairs and the lint-feedback retry loop."""

import json

import pytest

from a2uikit.clients import GeneratorUnavailable, StubModel
from a2uikit.lint import lint_text
from a2uikit.protocol import parse_response, serialize_response
from a2uikit.repair import (
    FEEDBACK_PREFIX,
    REPAIR_KINDS,
    repair_response,
    run_with_retry,
)

from conftest import CANNED_UI, defect_manifest, defect_text, golden_paths


def _repair_raw(doc: dict):
    return repair_response(parse_response(json.dumps(doc)))


def test_enum_case_normalized():
    out = _repair_raw({
        "text_response": "x",
        "a2ui": [
            {"beginRendering": {"surfaceId": "s", "root": "t"}},
            {"surfaceUpdate": {"surfaceId": "s", "components": [
                {"id": "t", "component": {"Label": {
                    "text": "hi", "size": "BodyMedium"}}},
            ]}},
        ],
    })
    assert [a.kind for a in out.actions] == ["enum_normalize"]
    raw = serialize_response(out.response)
    assert '"size":"bodyMedium"' in raw


def test_icon_alias_applied():
    out = _repair_raw({
        "text_response": "x",
        "a2ui": [
            {"beginRendering": {"surfaceId": "s", "root": "i"}},
            {"surfaceUpdate": {"surfaceId": "s", "components": [
                {"id": "i", "component": {"Icon": {
                    "name": "calendar", "style": "line"}}},
            ]}},
        ],
    })
    assert [a.kind for a in out.actions] == ["enum_normalize"]
    assert '"name":"calendar-thirty"' in serialize_response(out.response)


def test_unknown_enum_left_alone():
    # no alias, no casefold match: repair must not guess
    out = repair_response(parse_response(defect_text("STRUCT_ENUM")))
    assert not out.changed


def test_numeric_literal_coerced():
    out = repair_response(parse_response(defect_text("STRUCT_VALUE_TYPE")))
    kinds = [a.kind for a in out.actions]
    assert "binding_type_fix" in kinds
    assert '"literalNumber":3' in serialize_response(out.response)
    assert lint_text(serialize_response(out.response)).is_clean


def test_data_write_coerced_to_binding_type():
    out = repair_response(parse_response(defect_text("BIND_TYPE")))
    assert [a.kind for a in out.actions] == ["binding_type_fix"]
    assert '"valueNumber":3' in serialize_response(out.response)
    assert not lint_text(serialize_response(out.response)).has_errors


def test_boolean_string_coerced():
    out = _repair_raw({
        "text_response": "x",
        "a2ui": [
            {"beginRendering": {"surfaceId": "s", "root": "d"}},
            {"surfaceUpdate": {"surfaceId": "s", "components": [
                {"id": "d", "component": {"DateTimeInput": {
                    "value": {"path": "/when", "literalString": "2026-01-01"},
                    "enableDate": "true"}}},
                {"id": "blbl", "component": {"Label": {"text": "Go"}}},
                {"id": "b", "component": {"Button": {
                    "child": "blbl", "action": {"name": "go", "context": []}}}},
                {"id": "c", "component": {"Column": {"children": ["d", "b"]}}},
            ]}},
        ],
    })
    assert [a.kind for a in out.actions] == ["binding_type_fix"]
    assert '"enableDate":true' in serialize_response(out.response)


def test_bare_selection_path_completed():
    out = _repair_raw({
        "text_response": "x",
        "a2ui": [
            {"beginRendering": {"surfaceId": "s", "root": "c"}},
            {"surfaceUpdate": {"surfaceId": "s", "components": [
                {"id": "sel", "component": {"SelectionWrap": {
                    "selection": {"path": "/pick"},
                    "items": [{"label": "A", "value": "a"}]}}},
                {"id": "blbl", "component": {"Label": {"text": "Go"}}},
                {"id": "b", "component": {"Button": {
                    "child": "blbl", "action": {"name": "go", "context": []}}}},
                {"id": "c", "component": {"Column": {"children": ["sel", "b"]}}},
            ]}},
        ],
    })
    assert [a.kind for a in out.actions] == ["field_complete"]
    assert '"literalArray":[]' in serialize_response(out.response)


def test_missing_defaulted_required_field_filled():
    out = _repair_raw({
        "text_response": "x",
        "a2ui": [
            {"beginRendering": {"surfaceId": "s", "root": "d"}},
            {"surfaceUpdate": {"surfaceId": "s", "components": [
                {"id": "d", "component": {"Divider": {}}},
            ]}},
        ],
    })
    assert [a.kind for a in out.actions] == ["field_complete"]
    assert '"axis":"horizontal"' in serialize_response(out.response)


def test_slider_in_row_gets_wrapped():
    doc = {
        "text_response": "x",
        "a2ui": [
            {"beginRendering": {"surfaceId": "s", "root": "row"}},
            {"surfaceUpdate": {"surfaceId": "s", "components": [
                {"id": "sl", "component": {"TickSlider": {
                    "value": {"path": "/v", "literalNumber": 1}, "max": 5}}},
                {"id": "blbl", "component": {"Label": {"text": "Go"}}},
                {"id": "b", "component": {"Button": {
                    "child": "blbl", "action": {"name": "go", "context": []}}}},
                {"id": "row", "component": {"Row": {
                    "children": ["sl", "b"]}}},
            ]}},
        ],
    }
    out = _repair_raw(doc)
    assert [a.kind for a in out.actions] == ["layout_constraint"]
    raw = serialize_response(out.response)
    assert '"sl_wrap"' in raw
    from a2uikit.renderguard import render_check
    assert render_check(out.response).passed


def test_repair_never_touches_judgment_defects():
    for code in ("STRUCT_UNKNOWN_COMPONENT", "BIND_DANGLING_REF",
                 "SEM_ROOT_UNDEFINED", "SEM_MULTI_SURFACE"):
        out = repair_response(parse_response(defect_text(code)))
        assert not out.changed, code


@pytest.mark.parametrize("entry", defect_manifest(), ids=lambda e: e["code"])
def test_repair_is_idempotent_on_defects(entry):
    if entry["code"] in ("FORMAT_PARSE", "FORMAT_SHAPE"):
        pytest.skip("unparsable input never reaches repair")
    once = repair_response(parse_response(defect_text(entry["code"])))
    twice = repair_response(once.response)
    assert twice.actions == []
    assert serialize_response(twice.response) == serialize_response(once.response)


@pytest.mark.parametrize("path", golden_paths(), ids=lambda p: p.stem)
def test_repair_is_noop_on_clean_input(path):
    out = repair_response(parse_response(path.read_text()))
    assert not out.changed


def test_action_kinds_are_registered():
    assert REPAIR_KINDS == ("enum_normalize", "binding_type_fix",
                            "field_complete", "layout_constraint")


# -- retry driver -------------------------------------------------------------


def test_retry_succeeds_second_attempt_with_feedback():
    bad = defect_text("STRUCT_UNKNOWN_COMPONENT")
    stub = StubModel(outputs=[bad, CANNED_UI])
    outcome = run_with_retry(stub, [{"role": "user", "content": "go"}])
    assert outcome.ok and outcome.attempts == 2
    follow_up = stub.calls[1]
    assert follow_up[1] == {"role": "assistant", "content": bad}
    assert follow_up[2]["role"] == "user"
    assert follow_up[2]["content"].startswith(FEEDBACK_PREFIX + "\n")
    assert "STRUCT_UNKNOWN_COMPONENT" in follow_up[2]["content"]


def test_retry_gives_up_after_three():
    bad = defect_text("BIND_DANGLING_REF")
    stub = StubModel(outputs=[bad, bad, bad])
    outcome = run_with_retry(stub, [{"role": "user", "content": "go"}])
    assert not outcome.ok and outcome.attempts == 3
    assert len(outcome.reports) == 3
    assert outcome.final.has_errors


def test_retry_does_not_mutate_caller_messages():
    messages = [{"role": "user", "content": "go"}]
    run_with_retry(StubModel(outputs=[CANNED_UI]), messages)
    assert messages == [{"role": "user", "content": "go"}]


def test_retry_repair_first_rescues_mechanical_defect():
    fixable = defect_text("BIND_TYPE")
    stub = StubModel(outputs=[fixable])
    outcome = run_with_retry(stub, [{"role": "user", "content": "go"}],
                             repair_first=True)
    assert outcome.ok and outcome.attempts == 1


def test_retry_propagates_unavailable_generator():
    stub = StubModel(outputs=[])
    with pytest.raises(GeneratorUnavailable):
        run_with_retry(stub, [{"role": "user", "content": "go"}])
