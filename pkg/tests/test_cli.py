"""End-to-end checks for the command-line surface.

Exit-code contract: 0 success, 1 input failed validation, 2 usage error.
"""

import json
import urllib.parse

import pytest
from click.testing import CliRunner

from a2uikit.cli import main

from conftest import (
    CANNED_UI,
    FIXTURES,
    TASKS_PATH,
    defect_manifest,
    golden_text,
    parity_cases,
    renderguard_manifest,
)

runner = CliRunner()


def golden(name: str) -> str:
    return str(FIXTURES / "golden" / f"{name}.json")


def defect(code: str) -> str:
    return str(FIXTURES / "defects" / f"{code}.json")


def rc_file(rules: list[str]) -> str:
    for entry in renderguard_manifest():
        if entry["rules"] == rules:
            return str(FIXTURES / "renderguard" / entry["file"])
    raise AssertionError(f"no renderguard fixture for {rules}")


# --- lint -------------------------------------------------------------------

def test_lint_clean_golden():
    result = runner.invoke(main, ["lint", golden("g01_card_basic")])
    assert result.exit_code == 0
    assert "no issues" in result.output


def test_lint_error_defect_exits_one():
    result = runner.invoke(main, ["lint", defect("BIND_DANGLING_REF")])
    assert result.exit_code == 1
    assert "BIND_DANGLING_REF" in result.output


def test_lint_warning_only_exits_zero():
    result = runner.invoke(main, ["lint", defect("BIND_UNWRITTEN")])
    assert result.exit_code == 0
    assert "BIND_UNWRITTEN" in result.output


def test_lint_json_output_carries_issue_fields():
    result = runner.invoke(main,
                           ["lint", defect("STRUCT_ENUM"), "--format", "json"])
    assert result.exit_code == 1
    payload = json.loads(result.output)
    assert payload["parseOk"] is True
    (issue,) = payload["issues"]
    assert issue["code"] == "STRUCT_ENUM"
    assert issue["severity"] == "error"
    assert issue["category"] == "value-format"
    expected = next(e for e in defect_manifest() if e["code"] == "STRUCT_ENUM")
    assert issue["location"] == expected["location"]


def test_lint_level_filter_hides_later_levels():
    # Semantic-level error disappears below the cutoff; exit code follows
    # the filtered view, not the full report.
    src = defect("SEM_ROOT_UNDEFINED")
    unfiltered = runner.invoke(main, ["lint", src])
    assert unfiltered.exit_code == 1
    filtered = runner.invoke(main, ["lint", src, "--level", "binding"])
    assert filtered.exit_code == 0
    assert "no issues" in filtered.output


def test_lint_known_surface_suppresses_unbegun_warning():
    src = defect("SEM_UNBEGUN_SURFACE")
    plain = runner.invoke(main, ["lint", src])
    assert "SEM_UNBEGUN_SURFACE" in plain.output
    known = runner.invoke(main, ["lint", src, "--known-surface", "s9"])
    assert known.exit_code == 0
    assert "no issues" in known.output


def test_lint_reads_stdin_dash():
    result = runner.invoke(main, ["lint", "-"], input=CANNED_UI)
    assert result.exit_code == 0
    assert "no issues" in result.output


# --- repair -----------------------------------------------------------------

REPAIRABLE = json.dumps({
    "text_response": "pick a day",
    "a2ui": [
        {"beginRendering": {"surfaceId": "s1", "root": "row"}},
        {"surfaceUpdate": {"surfaceId": "s1", "components": [
            {"id": "ic", "component": {"Icon": {"name": "calendar"}}},
            {"id": "lbl", "component": {"Label": {"text": "When suits you?"}}},
            {"id": "row", "component": {"Row": {"children": ["ic", "lbl"]}}},
        ]}},
    ],
})


def test_repair_prints_fixed_document(tmp_path):
    src = tmp_path / "doc.json"
    src.write_text(REPAIRABLE)
    result = runner.invoke(main, ["repair", str(src)])
    assert result.exit_code == 0
    assert '"calendar-thirty"' in result.output
    assert "enum_normalize" in result.stderr


def test_repair_out_writes_file(tmp_path):
    src = tmp_path / "doc.json"
    src.write_text(REPAIRABLE)
    dst = tmp_path / "fixed.json"
    result = runner.invoke(main, ["repair", str(src), "--out", str(dst)])
    assert result.exit_code == 0
    text = dst.read_text()
    assert text.endswith("\n")
    assert '"calendar-thirty"' in text
    # document goes to the file, not stdout
    assert '"calendar-thirty"' not in result.output


def test_repair_json_format(tmp_path):
    src = tmp_path / "doc.json"
    src.write_text(REPAIRABLE)
    result = runner.invoke(main, ["repair", str(src), "--format", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["changed"] is True
    kinds = {a["kind"] for a in payload["actions"]}
    assert "enum_normalize" in kinds
    assert payload["response"]["a2ui"][1]["surfaceUpdate"]["components"][0][
        "component"]["Icon"]["name"] == "calendar-thirty"


def test_repair_refuses_unparsable(tmp_path):
    src = tmp_path / "broken.json"
    src.write_text('{"text_response": "x", "a2ui": [')
    result = runner.invoke(main, ["repair", str(src)])
    assert result.exit_code == 1
    assert "cannot repair" in result.stderr


# --- render-check -----------------------------------------------------------

def test_render_check_golden_passes():
    result = runner.invoke(main, ["render-check", golden("g04_slider")])
    assert result.exit_code == 0
    assert "render checks passed" in result.output


def test_render_check_reports_rule():
    result = runner.invoke(main, ["render-check", rc_file(["RC2"])])
    assert result.exit_code == 1
    assert "RC2" in result.output


def test_render_check_unparsable(tmp_path):
    src = tmp_path / "broken.json"
    src.write_text("{")
    result = runner.invoke(main, ["render-check", str(src)])
    assert result.exit_code == 1
    assert "unparsable" in result.output


# --- process ----------------------------------------------------------------

def test_process_materializes_and_dispatches(tmp_path):
    case = next(c for c in parity_cases()
                if c["name"] == "p01_button_literal_context")
    doc = tmp_path / "doc.json"
    doc.write_text(json.dumps(
        {"text_response": "ok", "a2ui": case["messages"]}))
    steps = tmp_path / "steps.json"
    steps.write_text(json.dumps(case["interactions"]))
    result = runner.invoke(main,
                           ["process", str(doc), "--interact", str(steps)])
    assert result.exit_code == 0
    out = json.loads(result.output)
    assert out["faults"] == []
    assert out["surfaces"]["s1"]["type"] == "Card"
    assert out["events"] == case["expectedEvents"]


def test_process_export_round_trips(tmp_path):
    doc = tmp_path / "doc.json"
    doc.write_text(CANNED_UI)
    snap = tmp_path / "state.json"
    result = runner.invoke(main,
                           ["process", str(doc), "--export", str(snap)])
    assert result.exit_code == 0
    state = json.loads(snap.read_text())
    assert state["surfaces"]["s1"]["begun"] is True
    assert state["surfaces"]["s1"]["root"] == "card"
    from a2uikit.processor import Processor
    proc = Processor.import_state(state)
    assert proc.export_state() == state


def test_process_unparsable(tmp_path):
    src = tmp_path / "broken.json"
    src.write_text("not json at all")
    result = runner.invoke(main, ["process", str(src)])
    assert result.exit_code == 1
    assert "unparsable" in result.output


# --- score ------------------------------------------------------------------

def test_score_clean_ui_reward():
    result = runner.invoke(main, ["score", golden("g01_card_basic")])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["parseOk"] is True
    assert payload["lintErrors"] == 0
    assert payload["renderPass"] is True
    assert payload["l1"] == {f"D1-{i}": 5.0 for i in range(1, 6)}
    # only the format term contributes without judge scores
    assert payload["reward"] == pytest.approx(0.2, abs=1e-12)


def test_score_text_only_bonus():
    result = runner.invoke(main,
                           ["score", golden("g19_text_only"), "--text-only"])
    payload = json.loads(result.output)
    assert payload["reward"] == pytest.approx(0.7, abs=1e-12)


def test_score_unparsable_is_zero():
    result = runner.invoke(main, ["score", defect("FORMAT_PARSE")])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["parseOk"] is False
    assert payload["reward"] == 0.0


def test_score_rejects_bad_config(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"w_l1": 0.9, "w_l2": 0.9, "w_l3": 0.9}))
    result = runner.invoke(main,
                           ["score", golden("g01_card_basic"),
                            "--config", str(cfg)])
    assert result.exit_code == 2


# --- bench ------------------------------------------------------------------

def test_bench_requires_model_endpoint(tmp_path):
    result = runner.invoke(main,
                           ["bench", str(TASKS_PATH),
                            "--out", str(tmp_path / "run")])
    assert result.exit_code == 2
    assert "no model endpoint configured" in result.stderr


def test_bench_missing_tasks_file(tmp_path):
    result = runner.invoke(main,
                           ["bench", str(tmp_path / "absent.jsonl"),
                            "--out", str(tmp_path / "run")])
    assert result.exit_code == 2


# --- corpus -----------------------------------------------------------------

def test_corpus_writes_samples_and_stats(tmp_path):
    out = tmp_path / "samples.jsonl"
    stats_file = tmp_path / "stats.json"
    result = runner.invoke(main, [
        "corpus", str(FIXTURES / "dialogues" / "seed.jsonl"),
        "--out", str(out), "--stats", str(stats_file),
        "--quota", "Tabs=2", "--seed", "7",
    ])
    assert result.exit_code == 0
    stats = json.loads(result.output)
    lines = [l for l in out.read_text().splitlines() if l]
    assert len(lines) == stats["total"]
    assert stats["component_sample_counts"]["Tabs"] >= 2
    assert json.loads(stats_file.read_text()) == stats


def test_corpus_rejects_bad_quota(tmp_path):
    result = runner.invoke(main, [
        "corpus", str(FIXTURES / "dialogues" / "seed.jsonl"),
        "--out", str(tmp_path / "samples.jsonl"),
        "--quota", "Tabs=two",
    ])
    assert result.exit_code == 2
    assert "bad quota" in result.stderr


# --- render-export ----------------------------------------------------------

def test_render_export_prints_url():
    result = runner.invoke(main, ["render-export", golden("g01_card_basic")])
    assert result.exit_code == 0
    url = result.output.strip()
    assert url.startswith("http://localhost:5173/render?messages=")
    encoded = url.split("messages=", 1)[1]
    decoded = json.loads(urllib.parse.unquote(encoded))
    original = json.loads(golden_text("g01_card_basic"))
    assert decoded == original["a2ui"]


def test_render_export_bundle_file(tmp_path):
    bundle_path = tmp_path / "bundle.json"
    result = runner.invoke(main, [
        "render-export", golden("g22_width_form"),
        "--out", str(bundle_path), "--base-url", "http://host:9/",
        "--target-id", "demo",
    ])
    assert result.exit_code == 0
    assert result.output.startswith("http://host:9/render?messages=")
    bundle = json.loads(bundle_path.read_text())
    assert bundle["targetId"] == "demo"
    assert isinstance(bundle["textResponse"], str)
    assert bundle["a2ui"] == json.loads(golden_text("g22_width_form"))["a2ui"]


def test_render_export_refuses_empty_interface():
    result = runner.invoke(main, ["render-export", golden("g19_text_only")])
    assert result.exit_code == 1
    assert "no interface messages" in result.output


def test_render_export_refuses_render_failure():
    result = runner.invoke(main, ["render-export", rc_file(["RC1"])])
    assert result.exit_code == 1
    assert "render checks failed" in result.output
    assert "RC1" in result.output


# --- shared plumbing --------------------------------------------------------

def test_unknown_option_is_usage_error():
    result = runner.invoke(main, ["lint", "--no-such-flag", "x"])
    assert result.exit_code == 2


def test_version_flag():
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert "0.1.0" in result.output
