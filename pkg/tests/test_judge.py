"""Judge prompt assembly and strict reply parsing."""

import json

import pytest

from a2uikit.clients import GeneratorUnavailable
from a2uikit.judge import (
    JUDGE_RETRY_ATTEMPTS,
    L2_EXPECTED,
    L3_EXPECTED,
    JudgeReplyError,
    MissingPlaceholder,
    assemble_judge_prompt,
    component_schema_context,
    format_dialogue_context,
    judge_with_retry,
    load_template,
    parse_judge_reply,
    step_line,
    summarize_a2ui,
)
from a2uikit.protocol import parse_response

from conftest import golden_text


# -- template assembly ---------------------------------------------------------


def test_substitution_is_literal():
    out = assemble_judge_prompt("Task: {task}", {"task": 'has {braces} and "quotes"'})
    assert out == 'Task: has {braces} and "quotes"'


def test_doubled_braces_stay_literal():
    out = assemble_judge_prompt('{{"scores": {x}}}', {"x": "1"})
    assert out == '{"scores": 1}'


def test_missing_token_raises():
    with pytest.raises(MissingPlaceholder):
        assemble_judge_prompt("needs {gone}", {})


def test_extra_values_are_ignored():
    assert assemble_judge_prompt("plain", {"unused": "x"}) == "plain"


@pytest.mark.parametrize("name", ["system_minimal", "system_full",
                                  "judge_l2", "judge_l3", "judge_v"])
def test_bundled_templates_load(name):
    text = load_template(name)
    assert text.strip()


def test_unknown_template_rejected():
    with pytest.raises(KeyError):
        load_template("judge_l9")


def test_template_root_override(tmp_path):
    (tmp_path / "judge_l2.md").write_text("custom {a2ui_summary}")
    assert load_template("judge_l2", str(tmp_path)) == "custom {a2ui_summary}"


def test_l2_template_assembles_with_runner_values(catalog):
    resp = parse_response(golden_text("g02_selection_confirm"))
    prompt = assemble_judge_prompt(load_template("judge_l2"), {
        "component_schema_context": component_schema_context(catalog),
        "rubric_hints": "(none)",
        "scenario_id": "decision_support",
        "scenario_def": "help choose",
        "task_description": "pick a cuisine",
        "dialogue_context": "(no prior turns)",
        "user_message": "what should we eat",
        "text_response": resp.text_response,
        "a2ui_summary": summarize_a2ui(resp),
        "a2ui_raw_json": "[]",
    })
    # assembly raises on any unfilled token, so reaching here means the
    # template's placeholder set matches what the runner supplies
    assert "D2-1" in prompt
    assert "pick a cuisine" in prompt


# -- context helpers ------------------------------------------------------------


def test_step_line():
    assert step_line(None) == ""
    assert step_line(3) == "- Step: 03\n"


def test_dialogue_context_formatting():
    assert format_dialogue_context([]) == "(no prior turns)"
    out = format_dialogue_context([
        {"speaker": "user", "text": "hi"},
        {"speaker": "assistant", "text": "hello"},
    ])
    assert out == "user: hi\nassistant: hello"


def test_summarize_mentions_every_message_kind():
    resp = parse_response(golden_text("g02_selection_confirm"))
    digest = summarize_a2ui(resp)
    assert digest.startswith("[A2UI: begin s2")
    assert "SelectionList(sel)" in digest
    assert "data s2 /form: title" in digest


def test_summarize_empty_payload():
    resp = parse_response('{"text_response": "x", "a2ui": []}')
    assert summarize_a2ui(resp) == "[A2UI: none]"


def test_summarize_truncates_component_list():
    comps = [{"id": f"c{i}", "component": {"Label": {"text": str(i)}}}
             for i in range(12)]
    comps.append({"id": "col", "component": {
        "Column": {"children": [f"c{i}" for i in range(12)]}}})
    resp = parse_response(json.dumps({"text_response": "x", "a2ui": [
        {"beginRendering": {"surfaceId": "s", "root": "col"}},
        {"surfaceUpdate": {"surfaceId": "s", "components": comps}},
    ]}))
    assert "+3 more" in summarize_a2ui(resp)


def test_schema_context_is_json_with_roles(catalog):
    doc = json.loads(component_schema_context(catalog))
    assert doc["Label"]["role"] == "display"
    assert doc["TickSlider"]["fields"]["max"]["required"] is True
    assert doc["Icon"]["fields"]["name"]["oneOf"] == "registered icon names"


# -- reply parsing ----------------------------------------------------------------


def _l2_reply(**overrides) -> str:
    doc = {d: 4 for d in L2_EXPECTED}
    doc.update(overrides)
    return json.dumps(doc)


def test_valid_reply_parses():
    scores = parse_judge_reply(_l2_reply(), L2_EXPECTED)
    assert scores == {d: 4 for d in L2_EXPECTED}


def test_fenced_reply_parses():
    scores = parse_judge_reply(f"```json\n{_l2_reply()}\n```", L2_EXPECTED)
    assert scores["D2-1"] == 4


def test_score_with_evidence_object():
    raw = _l2_reply(**{"D2-1": {"score": 5, "evidence": "clear labels"}})
    assert parse_judge_reply(raw, L2_EXPECTED)["D2-1"] == 5


@pytest.mark.parametrize("bad", [
    "not json",
    "[1,2,3]",
    _l2_reply(**{"D2-1": 0}),
    _l2_reply(**{"D2-1": 6}),
    _l2_reply(**{"D2-1": 3.5}),
    _l2_reply(**{"D2-1": "4"}),
    _l2_reply(**{"D2-1": True}),
    json.dumps({d: 4 for d in L2_EXPECTED[1:]}),  # one dimension omitted
])
def test_invalid_replies_rejected(bad):
    with pytest.raises(JudgeReplyError):
        parse_judge_reply(bad, L2_EXPECTED)


# -- retry contract -----------------------------------------------------------------


class ScriptedJudge:
    def __init__(self, replies):
        self.replies = list(replies)
        self.calls = 0

    def __call__(self, messages):
        self.calls += 1
        reply = self.replies.pop(0)
        if reply is GeneratorUnavailable:
            raise GeneratorUnavailable("down")
        return reply


def test_retry_recovers_from_bad_reply():
    judge = ScriptedJudge(["nonsense", _l2_reply()])
    scores = judge_with_retry(judge, [], L2_EXPECTED)
    assert scores == {d: 4 for d in L2_EXPECTED}
    assert judge.calls == 2


def test_retry_recovers_from_out_of_range():
    judge = ScriptedJudge([_l2_reply(**{"D2-3": 9}), _l2_reply()])
    assert judge_with_retry(judge, [], L2_EXPECTED) is not None


def test_judge_failure_after_three():
    judge = ScriptedJudge(["no", "still no", "never"])
    assert judge_with_retry(judge, [], L2_EXPECTED) is None
    assert judge.calls == JUDGE_RETRY_ATTEMPTS


def test_transport_failures_consume_attempts():
    judge = ScriptedJudge([GeneratorUnavailable, GeneratorUnavailable,
                           GeneratorUnavailable])
    assert judge_with_retry(judge, [], L3_EXPECTED) is None
    assert judge.calls == 3


def test_retry_budget_is_configurable():
    judge = ScriptedJudge(["no", _l2_reply()])
    assert judge_with_retry(judge, [], L2_EXPECTED, max_attempts=1) is None
    assert judge.calls == 1
