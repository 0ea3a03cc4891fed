"""Score regimes, reward composition, advantages, and aggregation."""

import json

import pytest
from hypothesis import given, strategies as st

from a2uikit.lint import lint_text
from a2uikit.protocol import parse_response
from a2uikit.scoring import (
    EmptyCohort,
    L1_DIMS,
    L2_DIMS,
    L3_DIMS,
    RewardConfig,
    RewardInputs,
    SampleScores,
    aggregate,
    compose_reward,
    floor_for_render_failure,
    group_advantages,
    level_value,
    overload_flags,
    score_l1,
    zero_for_structure_failure,
)

from conftest import defect_text, golden_paths

FIVES_L1 = {d: 5.0 for d in L1_DIMS}
FIVES_L2 = {d: 5.0 for d in L2_DIMS}
FIVES_L3 = {d: 5.0 for d in L3_DIMS}


# -- format-level scoring -------------------------------------------------------


def test_unparsable_zeroes_every_dimension():
    report = lint_text('{"text_response": "x", "a2ui": [')
    assert score_l1(report) == {d: 0.0 for d in L1_DIMS}


def test_lint_error_credits_parse_dimension_only():
    report = lint_text(defect_text("BIND_DANGLING_REF"))
    assert score_l1(report) == {"D1-1": 5.0, "D1-2": 0.0, "D1-3": 0.0,
                                "D1-4": 0.0, "D1-5": 0.0}


def test_clean_payload_scores_fives():
    report = lint_text(golden_paths()[0].read_text())
    assert score_l1(report) == FIVES_L1


def test_value_format_warning_deducts_one():
    report = lint_text(defect_text("SEM_EMPTY_VALUE"))
    assert score_l1(report) == {"D1-1": 5.0, "D1-2": 5.0, "D1-3": 5.0,
                                "D1-4": 5.0, "D1-5": 4.0}


def test_structure_warning_hits_its_dimension():
    report = lint_text(defect_text("SEM_NO_SUBMIT"))
    assert score_l1(report)["D1-2"] == 4.0


def test_reference_warning_hits_its_dimension():
    report = lint_text(defect_text("BIND_UNWRITTEN"))
    assert score_l1(report)["D1-3"] == 4.0


def test_warning_deduction_floors_at_zero():
    entries = [{"key": f"k{i}", "valueString": ""} for i in range(6)]
    doc = {
        "text_response": "x",
        "a2ui": [
            {"beginRendering": {"surfaceId": "s", "root": "t"}},
            {"surfaceUpdate": {"surfaceId": "s", "components": [
                {"id": "t", "component": {"Label": {"text": "hi"}}}]}},
            {"dataModelUpdate": {"surfaceId": "s", "path": "/",
                                 "contents": entries}},
        ],
    }
    report = lint_text(json.dumps(doc))
    assert len(report.warnings()) == 6
    assert score_l1(report)["D1-5"] == 0.0


# -- helpers -------------------------------------------------------------------


def test_render_floor_caps_at_one():
    floored = floor_for_render_failure({"D2-1": 5.0, "D2-2": 0.5})
    assert floored == {"D2-1": 1.0, "D2-2": 0.5}


def test_structure_zeroes():
    assert zero_for_structure_failure(L3_DIMS) == {d: 0.0 for d in L3_DIMS}


def test_level_value_normalizes():
    assert level_value(FIVES_L1) == 1.0
    assert level_value({"a": 0.0}) == 0.0
    with pytest.raises(EmptyCohort):
        level_value({})


def test_weight_sum_enforced():
    with pytest.raises(ValueError):
        RewardConfig(w_l1=0.5, w_l2=0.5, w_l3=0.5)
    RewardConfig(w_l1=0.3, w_l2=0.3, w_l3=0.4)


# -- reward table ---------------------------------------------------------------

L1_ERRORS = {"D1-1": 5.0, "D1-2": 0.0, "D1-3": 0.0, "D1-4": 0.0, "D1-5": 0.0}
L1_ONE_WARN = {"D1-1": 5.0, "D1-2": 5.0, "D1-3": 5.0, "D1-4": 5.0, "D1-5": 4.0}

REWARD_TABLE = [
    # (inputs, closed-form expected)
    (RewardInputs(parse_ok=False, ui_expected=True, a2ui_empty=True,
                  lint_error_count=0, render_pass=True, l1={}),
     0.0),
    (RewardInputs(parse_ok=True, ui_expected=True, a2ui_empty=True,
                  lint_error_count=0, render_pass=True, l1=FIVES_L1),
     0.0),
    (RewardInputs(parse_ok=True, ui_expected=True, a2ui_empty=False,
                  lint_error_count=2, render_pass=True, l1=L1_ERRORS),
     0.0),
    (RewardInputs(parse_ok=True, ui_expected=True, a2ui_empty=False,
                  lint_error_count=0, render_pass=False, l1=FIVES_L1,
                  l2=FIVES_L2, l3=FIVES_L3),
     0.0),
    (RewardInputs(parse_ok=True, ui_expected=True, a2ui_empty=False,
                  lint_error_count=0, render_pass=True, l1=FIVES_L1,
                  l2=FIVES_L2, l3=FIVES_L3),
     1.0),
    (RewardInputs(parse_ok=True, ui_expected=True, a2ui_empty=False,
                  lint_error_count=0, render_pass=True, l1=L1_ONE_WARN,
                  l2={d: 4.0 for d in L2_DIMS}, l3={d: 3.0 for d in L3_DIMS}),
     0.2 * (24 / 25) + 0.4 * (4 / 5) + 0.4 * (3 / 5)),
    (RewardInputs(parse_ok=True, ui_expected=True, a2ui_empty=False,
                  lint_error_count=0, render_pass=True, l1=FIVES_L1),
     0.2),
    (RewardInputs(parse_ok=True, ui_expected=False, a2ui_empty=True,
                  lint_error_count=0, render_pass=True, l1=FIVES_L1),
     0.7),
    (RewardInputs(parse_ok=True, ui_expected=False, a2ui_empty=False,
                  lint_error_count=0, render_pass=True, l1=FIVES_L1),
     0.2),
    (RewardInputs(parse_ok=True, ui_expected=False, a2ui_empty=True,
                  lint_error_count=1, render_pass=True, l1=L1_ERRORS),
     0.0),
]


@pytest.mark.parametrize("inp,expected", REWARD_TABLE,
                         ids=[f"case{i:02d}" for i in range(len(REWARD_TABLE))])
def test_reward_matches_closed_form(inp, expected):
    assert abs(compose_reward(inp) - expected) < 1e-12


def test_reward_weights_configurable():
    inp = RewardInputs(parse_ok=True, ui_expected=True, a2ui_empty=False,
                       lint_error_count=0, render_pass=True, l1=FIVES_L1,
                       l2=FIVES_L2, l3=None)
    cfg = RewardConfig(w_l1=0.5, w_l2=0.25, w_l3=0.25)
    assert abs(compose_reward(inp, cfg) - 0.75) < 1e-12


# -- group advantages -----------------------------------------------------------


def test_advantages_mean_center():
    assert group_advantages([1.0, 0.0]) == [0.5, -0.5]
    assert group_advantages([]) == []
    assert group_advantages([0.7]) == [0.0]


@given(st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1, max_size=8))
def test_advantages_sum_to_zero(rewards):
    assert abs(sum(group_advantages(rewards))) < 1e-9


# -- overload detection -----------------------------------------------------------


def _buttons_doc(n: int) -> dict:
    comps = []
    for i in range(n):
        comps.append({"id": f"l{i}", "component": {"Label": {"text": f"B{i}"}}})
        comps.append({"id": f"b{i}", "component": {"Button": {
            "child": f"l{i}", "action": {"name": f"a{i}", "context": []}}}})
    comps.append({"id": "col", "component": {"Column": {
        "children": [f"b{i}" for i in range(n)]}}})
    return {"text_response": "x", "a2ui": [
        {"beginRendering": {"surfaceId": "s", "root": "col"}},
        {"surfaceUpdate": {"surfaceId": "s", "components": comps}},
    ]}


def test_interactive_count_boundary():
    ok = parse_response(json.dumps(_buttons_doc(4)))
    assert overload_flags(ok) == (4, 0, False)
    too_many = parse_response(json.dumps(_buttons_doc(5)))
    assert overload_flags(too_many) == (5, 0, True)


def _options_doc(counts: list[int]) -> dict:
    comps = []
    for i, n in enumerate(counts):
        comps.append({"id": f"s{i}", "component": {"SelectionList": {
            "selection": {"path": f"/p{i}", "literalArray": []},
            "items": [{"label": f"o{j}", "value": f"v{j}"} for j in range(n)],
        }}})
    comps.append({"id": "col", "component": {"Column": {
        "children": [f"s{i}" for i in range(len(counts))]}}})
    return {"text_response": "x", "a2ui": [
        {"beginRendering": {"surfaceId": "s", "root": "col"}},
        {"surfaceUpdate": {"surfaceId": "s", "components": comps}},
    ]}


def test_option_count_boundary():
    ok = parse_response(json.dumps(_options_doc([4, 4])))
    assert overload_flags(ok) == (2, 8, False)
    too_many = parse_response(json.dumps(_options_doc([5, 4])))
    assert overload_flags(too_many) == (2, 9, True)


# -- aggregation ------------------------------------------------------------------


def _samples():
    return [
        SampleScores(task_id="a", family="atomic", dataset="x",
                     l1=FIVES_L1, l2=FIVES_L2, l3=FIVES_L3,
                     v={"V1": 5.0, "V2": 4.0, "V3": 3.0}, visual_eligible=True),
        SampleScores(task_id="b", family="atomic", dataset="x",
                     l1={"D1-1": 5.0, "D1-2": 0.0, "D1-3": 0.0, "D1-4": 0.0,
                         "D1-5": 0.0},
                     l2=None, l3={d: 0.0 for d in L3_DIMS}),
        SampleScores(task_id="c", family="width", dataset="y",
                     l1=FIVES_L1, l2={d: 1.0 for d in L2_DIMS}, l3=FIVES_L3),
    ]


def test_aggregate_means_and_exclusions():
    report = aggregate(_samples())
    assert report.l1.included == 3 and report.l1.excluded == 0
    assert report.l2.included == 2 and report.l2.excluded == 1
    assert abs(report.l1.mean - (1.0 + 0.2 + 1.0) / 3) < 1e-12
    assert abs(report.l2.mean - (1.0 + 0.2) / 2) < 1e-12
    assert abs(report.l3.mean - (1.0 + 0.0 + 1.0) / 3) < 1e-12
    expected = (report.l1.mean + report.l2.mean + report.l3.mean) / 3 * 100
    assert abs(report.overall - expected) < 1e-12


def test_aggregate_cohorts_and_visual():
    report = aggregate(_samples())
    assert set(report.per_family) == {"atomic", "width"}
    assert set(report.per_dataset) == {"x", "y"}
    assert report.visual == {"V1": 5.0, "V2": 4.0, "V3": 3.0}


def test_aggregate_rejects_empty():
    with pytest.raises(EmptyCohort):
        aggregate([])
