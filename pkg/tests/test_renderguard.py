"""Render-critical checks: each rule fires alone on its fixture."""

import json

import pytest

from a2uikit.protocol import parse_response
from a2uikit.renderguard import RULES, render_check

from conftest import FIXTURES, golden_paths, renderguard_manifest

MANIFEST = renderguard_manifest()


def _load(name: str):
    raw = (FIXTURES / "renderguard" / f"{name}.json").read_text()
    return parse_response(raw)


@pytest.mark.parametrize("path", golden_paths(), ids=lambda p: p.stem)
def test_golden_fixtures_pass(path):
    report = render_check(parse_response(path.read_text()))
    assert report.passed
    assert report.rules_failed() == []


@pytest.mark.parametrize("entry", MANIFEST, ids=lambda e: e["name"])
def test_fixture_fails_exactly_its_rules(entry):
    report = render_check(_load(entry["name"]))
    assert report.rules_failed() == entry["rules"]
    assert not report.passed


def test_every_rule_has_a_fixture():
    covered = {rule for e in MANIFEST for rule in e["rules"]}
    assert covered == set(RULES)


def test_combo_fixture_reports_both():
    combos = [e for e in MANIFEST if len(e["rules"]) > 1]
    assert combos, "expected at least one multi-rule fixture"
    assert combos[0]["rules"] == ["RC1", "RC4"]


def test_compact_names_failed_rules():
    report = render_check(_load("rc1_selection_no_array"))
    assert "RC1" in report.compact()


def test_clean_compact_message():
    report = render_check(parse_response(golden_paths()[0].read_text()))
    assert report.compact() == "render checks passed"


def test_delete_only_passes():
    doc = {"text_response": "x",
           "a2ui": [{"deleteSurface": {"surfaceId": "s"}}]}
    assert render_check(parse_response(json.dumps(doc))).passed
