"""Evaluation bench: task loading, prompt assembly, runs, and reports.

Tasks live in JSONL, one object per line, and come in three families:

  atomic -- one user message, one reply
  width  -- one user message that legitimately needs several widgets
  depth  -- a fixed sequence of user steps; the conversation rolls forward
            using the model's own prior replies

Depth rolling substitutes each prior assistant turn with its text response
plus a bracketed interface digest; passing ``roll_raw=True`` replays raw
payloads instead. Step prompts are pure functions of the task and prior
outputs, so reruns produce byte-identical prompts.

A run scores every reply deterministically (lint, render checks, L1) and
through judge callables when provided. Screenshots are taken by an external
command template; without one the visual track reports null with a reason.
"""

from __future__ import annotations

import json
import subprocess
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from a2uikit.catalog import Catalog, load_catalog
from a2uikit.clients import GeneratorUnavailable, image_content
from a2uikit.crop import crop_png_bytes
from a2uikit.judge import (
    L2_EXPECTED,
    L3_EXPECTED,
    V_EXPECTED,
    assemble_judge_prompt,
    component_schema_context,
    format_dialogue_context,
    judge_with_retry,
    load_template,
    step_line,
    summarize_a2ui,
)
from a2uikit.lint import LintReport, lint_text
from a2uikit.protocol import serialize_message, serialize_response
from a2uikit.renderguard import RenderCheckReport, render_check
from a2uikit.repair import RetryOutcome, run_with_retry
from a2uikit.scoring import (
    RewardConfig,
    RewardInputs,
    SampleScores,
    aggregate,
    compose_reward,
    floor_for_render_failure,
    score_l1,
    zero_for_structure_failure,
)

FAMILIES = ("atomic", "width", "depth")

SCENARIO_DEFS: dict[str, str] = {
    "param_collection": "gather the concrete values needed to carry out a request",
    "info_grounding": "present looked-up facts so the user can verify them",
    "booking_confirmation": "show a pending reservation and let the user confirm it",
    "decision_support": "lay out options with trade-offs to help the user choose",
    "self_assessment": "let the user rate or measure something about themselves",
    "action_commitment": "get an explicit go-ahead before acting on the user's behalf",
    "multi_part_organization": "structure a multi-part answer into navigable sections",
    "tie_breaking": "resolve an ambiguous request by offering the interpretations",
    "no_ui_chat": "a conversational turn that is best served by plain text",
}

RUBRIC_HINTS: dict[str, str] = {
    "param_collection": "Every slot the task names should be collectable in one pass.",
    "info_grounding": "Facts shown should be the ones the user asked to verify.",
    "booking_confirmation": "The pending details must be visible before any confirm control.",
    "decision_support": "Options need enough attached context to compare them.",
    "self_assessment": "The scale should match the granularity the task implies.",
    "action_commitment": "Consent must be explicit, not buried in a default.",
    "multi_part_organization": "Sections should partition the content without overlap.",
    "tie_breaking": "Each interpretation should be one unambiguous choice.",
    "no_ui_chat": "Any interface at all is overreach here.",
}


class TaskFormatError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class BenchTask:
    task_id: str
    family: str
    scenario_id: str
    dataset: str
    task_description: str
    difficulty_level: str = "atomic"
    dialogue_context: tuple[dict[str, str], ...] = ()
    user_message: str | None = None
    steps: tuple[str, ...] = ()
    ui_expected: bool = True

    def step_messages(self) -> tuple[str, ...]:
        if self.family == "depth":
            return self.steps
        return (self.user_message or "",)


def load_tasks(path: str | Path) -> list[BenchTask]:
    tasks: list[BenchTask] = []
    seen: set[str] = set()
    for line_no, line in enumerate(Path(path).read_text().splitlines(), start=1):
        if not line.strip():
            continue
        try:
            doc = json.loads(line)
        except json.JSONDecodeError as e:
            raise TaskFormatError(line_no, f"invalid JSON: {e.msg}") from e
        if not isinstance(doc, dict):
            raise TaskFormatError(line_no, "task must be an object")
        for key in ("task_id", "family", "scenario_id", "dataset",
                    "task_description"):
            if not isinstance(doc.get(key), str) or not doc[key]:
                raise TaskFormatError(line_no, f"missing or invalid '{key}'")
        if doc["family"] not in FAMILIES:
            raise TaskFormatError(line_no, f"unknown family '{doc['family']}'")
        if doc["scenario_id"] not in SCENARIO_DEFS:
            raise TaskFormatError(line_no, f"unknown scenario '{doc['scenario_id']}'")
        if doc["task_id"] in seen:
            raise TaskFormatError(line_no, f"duplicate task_id '{doc['task_id']}'")
        seen.add(doc["task_id"])
        if doc["family"] == "depth":
            steps = doc.get("steps")
            if not isinstance(steps, list) or not steps or not all(
                isinstance(s, str) and s for s in steps
            ):
                raise TaskFormatError(line_no, "depth task needs non-empty 'steps'")
        else:
            if not isinstance(doc.get("user_message"), str) or not doc["user_message"]:
                raise TaskFormatError(line_no, "task needs 'user_message'")
        ctx = doc.get("dialogue_context", [])
        if not isinstance(ctx, list) or not all(
            isinstance(t, dict) and isinstance(t.get("speaker"), str)
            and isinstance(t.get("text"), str) for t in ctx
        ):
            raise TaskFormatError(line_no, "dialogue_context must be speaker/text turns")
        tasks.append(BenchTask(
            task_id=doc["task_id"],
            family=doc["family"],
            scenario_id=doc["scenario_id"],
            dataset=doc["dataset"],
            task_description=doc["task_description"],
            difficulty_level=doc.get("difficulty_level", doc["family"]),
            dialogue_context=tuple({"speaker": t["speaker"], "text": t["text"]}
                                   for t in ctx),
            user_message=doc.get("user_message"),
            steps=tuple(doc.get("steps", ())),
            ui_expected=doc.get("ui_expected",
                                doc["scenario_id"] != "no_ui_chat"),
        ))
    tasks.sort(key=lambda t: t.task_id)
    return tasks


# ---------------------------------------------------------------------------
# Prompt assembly


def system_prompt(mode: str, catalog: Catalog | None = None) -> str:
    catalog = catalog or load_catalog()
    if mode == "minimal":
        template = load_template("system_minimal")
        schemas = component_schema_context(catalog, subset=catalog.eval_subset())
    elif mode == "full":
        template = load_template("system_full")
        schemas = component_schema_context(catalog)
    else:
        raise ValueError(f"unknown prompt mode '{mode}'")
    return assemble_judge_prompt(template, {"component_schemas_json": schemas})


def _context_turns(task: BenchTask) -> list[dict[str, str]]:
    out = []
    for t in task.dialogue_context:
        role = "assistant" if t["speaker"] == "assistant" else "user"
        out.append({"role": role, "content": t["text"]})
    return out


def build_atomic_messages(task: BenchTask, *, prompt_mode: str = "minimal",
                          catalog: Catalog | None = None) -> list[dict[str, str]]:
    return [
        {"role": "system", "content": system_prompt(prompt_mode, catalog)},
        *_context_turns(task),
        {"role": "user", "content": task.user_message or ""},
    ]


def build_depth_messages(task: BenchTask, step_index: int,
                         prior_outputs: list[dict[str, str]], *,
                         prompt_mode: str = "minimal",
                         roll_raw: bool = False,
                         catalog: Catalog | None = None) -> list[dict[str, str]]:
    """Prompt for 1-based ``step_index``, given prior step outputs.

    ``prior_outputs`` entries carry ``text``, ``summary``, and ``raw`` for
    each completed step, in order.
    """
    msgs = [
        {"role": "system", "content": system_prompt(prompt_mode, catalog)},
        *_context_turns(task),
    ]
    for k in range(step_index - 1):
        msgs.append({"role": "user", "content": task.steps[k]})
        prior = prior_outputs[k]
        if roll_raw:
            msgs.append({"role": "assistant", "content": prior["raw"]})
        else:
            msgs.append({"role": "assistant",
                         "content": f"{prior['text']} {prior['summary']}".strip()})
    msgs.append({"role": "user", "content": task.steps[step_index - 1]})
    return msgs


# ---------------------------------------------------------------------------
# Results


@dataclass
class VisualResult:
    target_id: str
    screenshot: str | None = None
    scores: dict[str, int] | None = None
    reason: str | None = None

    def to_json(self) -> dict[str, Any]:
        return {"targetId": self.target_id, "screenshot": self.screenshot,
                "scores": self.scores, "reason": self.reason}


@dataclass
class TargetResult:
    """Outcome for one judged target (a task, or one step of a depth task)."""

    target_id: str
    task_id: str
    family: str
    scenario_id: str
    dataset: str
    step: int | None = None
    status: str = "ok"  # ok | infrastructure-failed | aborted
    attempts: int = 0
    raw_output: str = ""
    text_response: str = ""
    parse_ok: bool = False
    a2ui_empty: bool = True
    lint_codes: list[str] = field(default_factory=list)
    lint_error_count: int = 0
    render_pass: bool = True
    render_rules: list[str] = field(default_factory=list)
    l1: dict[str, float] = field(default_factory=dict)
    l2: dict[str, float] | None = None
    l3: dict[str, float] | None = None
    judge_skipped: str | None = None  # reason L2/L3 were not consulted
    judge_failures: list[str] = field(default_factory=list)
    visual: VisualResult | None = None
    reward: float = 0.0

    def to_json(self) -> dict[str, Any]:
        return {
            "targetId": self.target_id,
            "taskId": self.task_id,
            "family": self.family,
            "scenarioId": self.scenario_id,
            "dataset": self.dataset,
            "step": self.step,
            "status": self.status,
            "attempts": self.attempts,
            "parseOk": self.parse_ok,
            "a2uiEmpty": self.a2ui_empty,
            "lintCodes": self.lint_codes,
            "lintErrorCount": self.lint_error_count,
            "renderPass": self.render_pass,
            "renderRules": self.render_rules,
            "l1": self.l1,
            "l2": self.l2,
            "l3": self.l3,
            "judgeSkipped": self.judge_skipped,
            "judgeFailures": self.judge_failures,
            "visual": self.visual.to_json() if self.visual else None,
            "reward": self.reward,
            "textResponse": self.text_response,
            "rawOutput": self.raw_output,
        }

    def sample_scores(self) -> SampleScores:
        return SampleScores(
            task_id=self.target_id,
            family=self.family,
            dataset=self.dataset,
            l1=self.l1,
            l2=self.l2,
            l3=self.l3,
            v={k: float(v) for k, v in self.visual.scores.items()}
            if self.visual and self.visual.scores else None,
            visual_eligible=self.parse_ok and not self.a2ui_empty
            and self.render_pass,
        )


# ---------------------------------------------------------------------------
# Runner


Judges = dict[str, Callable[[list[dict[str, Any]]], str]]


@dataclass
class BenchRunner:
    generate: Callable[[list[dict[str, Any]]], str]
    judges: Judges | None = None
    prompt_mode: str = "minimal"
    roll_raw: bool = False
    lint_attempts: int = 3
    screenshot_cmd: str | None = None
    reward_config: RewardConfig = field(default_factory=RewardConfig)
    concurrency: int = 8
    catalog: Catalog = field(default_factory=load_catalog)

    def run(self, tasks: list[BenchTask]) -> list[TargetResult]:
        results: list[TargetResult] = []
        if self.concurrency <= 1:
            for t in tasks:
                results.extend(self.run_task(t))
        else:
            with ThreadPoolExecutor(max_workers=self.concurrency) as pool:
                for chunk in pool.map(self.run_task, tasks):
                    results.extend(chunk)
        results.sort(key=lambda r: r.target_id)
        return results

    def run_task(self, task: BenchTask) -> list[TargetResult]:
        if task.family == "depth":
            return self.run_depth(task)
        return [self.run_atomic(task)]

    def run_atomic(self, task: BenchTask) -> TargetResult:
        result = TargetResult(
            target_id=task.task_id, task_id=task.task_id, family=task.family,
            scenario_id=task.scenario_id, dataset=task.dataset)
        messages = build_atomic_messages(task, prompt_mode=self.prompt_mode,
                                         catalog=self.catalog)
        outcome = self._generate(messages)
        if outcome is None:
            result.status = "infrastructure-failed"
            return result
        self._score(task, result, outcome, step=None)
        return result

    def run_depth(self, task: BenchTask) -> list[TargetResult]:
        results: list[TargetResult] = []
        prior: list[dict[str, str]] = []
        failed = False
        for k in range(1, len(task.steps) + 1):
            target_id = f"{task.task_id}__step{k:02d}"
            result = TargetResult(
                target_id=target_id, task_id=task.task_id, family=task.family,
                scenario_id=task.scenario_id, dataset=task.dataset, step=k)
            if failed:
                result.status = "aborted"
                results.append(result)
                continue
            messages = build_depth_messages(
                task, k, prior, prompt_mode=self.prompt_mode,
                roll_raw=self.roll_raw, catalog=self.catalog)
            outcome = self._generate(messages)
            if outcome is None:
                result.status = "infrastructure-failed"
                failed = True
                results.append(result)
                continue
            self._score(task, result, outcome, step=k)
            if not result.parse_ok:
                failed = True
                results.append(result)
                continue
            resp = outcome.final.response
            prior.append({
                "text": resp.text_response,
                "summary": summarize_a2ui(resp),
                "raw": outcome.raw_outputs[-1],
            })
            results.append(result)
        return results

    def _generate(self, messages: list[dict[str, Any]]) -> RetryOutcome | None:
        """Lint-retry generation; one extra shot at pure transport failures."""
        for _ in range(2):
            try:
                return run_with_retry(self.generate, messages,
                                      max_attempts=self.lint_attempts,
                                      catalog=self.catalog)
            except GeneratorUnavailable:
                continue
        return None

    def _score(self, task: BenchTask, result: TargetResult,
               outcome: RetryOutcome, step: int | None) -> None:
        report = outcome.final
        result.attempts = outcome.attempts
        result.raw_output = outcome.raw_outputs[-1]
        result.parse_ok = report.parse_ok
        result.lint_codes = report.codes()
        result.lint_error_count = len(report.errors())
        result.l1 = score_l1(report)

        rc = RenderCheckReport()
        if report.parse_ok:
            resp = report.response
            result.text_response = resp.text_response
            result.a2ui_empty = not resp.a2ui
            rc = render_check(resp, catalog=self.catalog)
        result.render_pass = rc.passed
        result.render_rules = rc.rules_failed()

        self._judge(task, result, report, rc, step)
        result.reward = compose_reward(RewardInputs(
            parse_ok=result.parse_ok,
            ui_expected=task.ui_expected,
            a2ui_empty=result.a2ui_empty,
            lint_error_count=result.lint_error_count,
            render_pass=result.render_pass,
            l1=result.l1,
            l2=result.l2,
            l3=result.l3,
        ), self.reward_config)

    def _judge(self, task: BenchTask, result: TargetResult,
               report: LintReport, rc: RenderCheckReport,
               step: int | None) -> None:
        if not task.ui_expected:
            result.judge_skipped = "text-only task"
            return
        if not report.parse_ok:
            result.l2 = zero_for_structure_failure(L2_EXPECTED)
            result.l3 = zero_for_structure_failure(L3_EXPECTED)
            result.judge_skipped = "unparsable output"
            return
        if result.a2ui_empty:
            result.l2 = zero_for_structure_failure(L2_EXPECTED)
            result.l3 = zero_for_structure_failure(L3_EXPECTED)
            result.judge_skipped = "no interface to judge"
            return
        if result.lint_error_count > 0:
            result.l2 = zero_for_structure_failure(L2_EXPECTED)
            result.l3 = zero_for_structure_failure(L3_EXPECTED)
            result.judge_skipped = "lint errors"
            return
        if self.judges is None:
            result.judge_skipped = "no judges configured"
            return

        resp = report.response
        common = {
            "component_schema_context": component_schema_context(
                self.catalog, subset=self.catalog.eval_subset()),
            "rubric_hints": RUBRIC_HINTS.get(task.scenario_id, "(none)"),
            "scenario_id": task.scenario_id,
            "scenario_def": SCENARIO_DEFS[task.scenario_id],
            "task_description": task.task_description,
            "dialogue_context": format_dialogue_context(
                list(task.dialogue_context)),
            "user_message": task.step_messages()[(step or 1) - 1],
            "text_response": resp.text_response,
        }
        a2ui_json = json.dumps([serialize_message(m) for m in resp.a2ui],
                               ensure_ascii=False, indent=1)
        l2_judge = self.judges.get("l2")
        if l2_judge is not None:
            prompt = assemble_judge_prompt(load_template("judge_l2"), {
                **common,
                "a2ui_summary": summarize_a2ui(resp),
                "a2ui_raw_json": a2ui_json,
            })
            scores = judge_with_retry(
                l2_judge, [{"role": "user", "content": prompt}], L2_EXPECTED)
            if scores is None:
                result.judge_failures.append("l2")
            else:
                result.l2 = {k: float(v) for k, v in scores.items()}
        l3_judge = self.judges.get("l3")
        if l3_judge is not None:
            prompt = assemble_judge_prompt(load_template("judge_l3"), {
                **common,
                "model_output_raw_json": result.raw_output,
            })
            scores = judge_with_retry(
                l3_judge, [{"role": "user", "content": prompt}], L3_EXPECTED)
            if scores is None:
                result.judge_failures.append("l3")
            else:
                result.l3 = {k: float(v) for k, v in scores.items()}

        if not rc.passed:
            if result.l2 is not None:
                result.l2 = floor_for_render_failure(result.l2)
            if result.l3 is not None:
                result.l3 = floor_for_render_failure(result.l3)

        self._visual(task, result, resp, step, common)

    def _visual(self, task: BenchTask, result: TargetResult, resp,
                step: int | None, common: dict[str, str]) -> None:
        visual = VisualResult(target_id=result.target_id)
        result.visual = visual
        if not result.render_pass:
            visual.reason = "render checks failed"
            return
        if self.screenshot_cmd is None:
            visual.reason = "no screenshot tool configured"
            return
        png = self._screenshot(result.target_id, resp)
        if png is None:
            visual.reason = "screenshot command failed"
            return
        visual.screenshot = f"{result.target_id}.png"
        v_judge = (self.judges or {}).get("v")
        if v_judge is None:
            visual.reason = "no visual judge configured"
            return
        prompt = assemble_judge_prompt(load_template("judge_v"), {
            "task.scenario_id": task.scenario_id,
            "eval_api.SCENARIO_DEFS[task.scenario_id]":
                SCENARIO_DEFS[task.scenario_id],
            "step_line": step_line(step),
            "task.difficulty_level": task.difficulty_level,
            "task.task_description": task.task_description,
            "eval_api._format_context(dialogue_context)":
                common["dialogue_context"],
            "user_message": common["user_message"],
            "text_response": resp.text_response,
        })
        scores = judge_with_retry(
            v_judge,
            [{"role": "user", "content": image_content(prompt, png)}],
            V_EXPECTED)
        if scores is None:
            visual.reason = "judge failure"
            result.judge_failures.append("v")
        else:
            visual.scores = scores

    def _screenshot(self, target_id: str, resp) -> bytes | None:
        bundle = {
            "targetId": target_id,
            "textResponse": resp.text_response,
            "a2ui": [serialize_message(m) for m in resp.a2ui],
        }
        with tempfile.TemporaryDirectory(prefix="a2uikit-shot-") as td:
            bundle_path = Path(td) / f"{target_id}.json"
            out_path = Path(td) / f"{target_id}.png"
            bundle_path.write_text(json.dumps(bundle, ensure_ascii=False))
            cmd = (self.screenshot_cmd
                   .replace("{bundle}", str(bundle_path))
                   .replace("{out}", str(out_path)))
            try:
                proc = subprocess.run(cmd, shell=True, capture_output=True,
                                      timeout=120)
            except (subprocess.SubprocessError, OSError):
                return None
            if proc.returncode != 0 or not out_path.exists():
                return None
            return crop_png_bytes(out_path.read_bytes())


# ---------------------------------------------------------------------------
# Reporting


def emit_report(results: list[TargetResult], out_dir: str | Path) -> dict[str, Any]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    with (out / "targets.jsonl").open("w") as fh:
        for r in results:
            fh.write(json.dumps(r.to_json(), ensure_ascii=False) + "\n")

    ok = [r for r in results if r.status == "ok"]
    summary: dict[str, Any] = {
        "targets": len(results),
        "ok": len(ok),
        "infrastructureFailed": sum(
            1 for r in results if r.status == "infrastructure-failed"),
        "aborted": sum(1 for r in results if r.status == "aborted"),
    }
    if ok:
        agg = aggregate([r.sample_scores() for r in ok])
        summary["overall"] = agg.overall
        summary["levels"] = {
            "l1": {"mean": agg.l1.mean, "included": agg.l1.included,
                   "excluded": agg.l1.excluded},
            "l2": {"mean": agg.l2.mean, "included": agg.l2.included,
                   "excluded": agg.l2.excluded},
            "l3": {"mean": agg.l3.mean, "included": agg.l3.included,
                   "excluded": agg.l3.excluded},
        }
        summary["perFamily"] = agg.per_family
        summary["perDataset"] = agg.per_dataset
        summary["visual"] = agg.visual
        if agg.visual is None:
            reasons = sorted({r.visual.reason for r in ok
                              if r.visual and r.visual.reason})
            summary["visualSkipReason"] = "; ".join(reasons) or "no eligible targets"
    (out / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")

    (out / "report.txt").write_text(_text_table(results))
    return summary


def _fmt_level(scores: dict[str, float] | None) -> str:
    if scores is None:
        return "-"
    return f"{sum(scores.values()) / len(scores):.2f}"


def _text_table(results: list[TargetResult]) -> str:
    headers = ("target", "family", "scenario", "status", "L1", "L2", "L3",
               "RC", "reward")
    rows = [headers]
    for r in results:
        rows.append((
            r.target_id, r.family, r.scenario_id, r.status,
            _fmt_level(r.l1 or None), _fmt_level(r.l2), _fmt_level(r.l3),
            "pass" if r.render_pass else ",".join(r.render_rules),
            f"{r.reward:.3f}",
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(headers))]
    lines = []
    for idx, row in enumerate(rows):
        lines.append("  ".join(cell.ljust(widths[i])
                               for i, cell in enumerate(row)).rstrip())
        if idx == 0:
            lines.append("  ".join("-" * widths[i]
                                   for i in range(len(headers))))
    return "\n".join(lines) + "\n"
