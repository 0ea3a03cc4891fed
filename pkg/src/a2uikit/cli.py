"""Command-line entry point.

Exit codes follow one contract across subcommands: 0 success, 1 the input
failed validation (lint errors, render-check violations, refused export),
2 usage or configuration errors.
"""

from __future__ import annotations

import json
import sys
import urllib.parse
from pathlib import Path

import click

from a2uikit.bench import BenchRunner, emit_report, load_tasks
from a2uikit.catalog import load_catalog
from a2uikit.config import Config, ConfigError, load_config
from a2uikit.corpus import (
    augment,
    build_samples,
    component_sample_counts,
    corpus_stats,
    load_dialogues,
    write_samples,
)
from a2uikit.lint import LEVELS as LINT_LEVELS, lint_text
from a2uikit.processor import Processor, materialize_to_json
from a2uikit.protocol import FormatError, parse_response, serialize_response
from a2uikit.renderguard import render_check
from a2uikit.repair import repair_response
from a2uikit.scoring import RewardInputs, compose_reward, score_l1


def _read_source(src: str) -> str:
    if src == "-":
        return sys.stdin.read()
    return Path(src).read_text()


def _load_cfg(path: str | None) -> Config:
    try:
        return load_config(path)
    except ConfigError as e:
        raise click.UsageError(str(e))


@click.group()
@click.version_option(package_name="a2uikit")
def main() -> None:
    """Toolkit for the generative-interface wire protocol."""


@main.command("lint")
@click.argument("src")
@click.option("--level", type=click.Choice(LINT_LEVELS), default=None,
              help="Report issues up to this level only.")
@click.option("--known-surface", "known", multiple=True,
              help="Surface ids assumed begun in earlier turns.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text")
def cmd_lint(src: str, level: str | None, known: tuple[str, ...],
             fmt: str) -> None:
    """Lint a response document; exit 0 iff error-free."""
    report = lint_text(_read_source(src), known_surfaces=frozenset(known))
    issues = report.issues
    if level is not None:
        cutoff = LINT_LEVELS.index(level)
        issues = [i for i in issues if LINT_LEVELS.index(i.level) <= cutoff]
    if fmt == "json":
        click.echo(json.dumps({
            "parseOk": report.parse_ok,
            "issues": [{"code": i.code, "level": i.level,
                        "severity": i.severity, "category": i.category,
                        "location": i.location, "message": i.message}
                       for i in issues],
        }, indent=1))
    else:
        if not issues:
            click.echo("no issues")
        for i in issues:
            click.echo(i.compact())
    sys.exit(1 if any(i.severity == "error" for i in issues) else 0)


@main.command("repair")
@click.argument("src")
@click.option("--out", type=click.Path(), default=None,
              help="Write the repaired document here instead of stdout.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text")
def cmd_repair(src: str, out: str | None, fmt: str) -> None:
    """Apply the deterministic fixes; print the repaired document."""
    try:
        resp = parse_response(_read_source(src))
    except FormatError as e:
        click.echo(f"cannot repair: {e.message}", err=True)
        sys.exit(1)
    result = repair_response(resp)
    doc = serialize_response(result.response)
    if fmt == "json":
        click.echo(json.dumps({
            "changed": result.changed,
            "actions": [{"kind": a.kind, "location": a.location,
                         "before": a.before, "after": a.after}
                        for a in result.actions],
            "response": json.loads(doc),
        }, indent=1))
    elif out is None:
        click.echo(doc)
    if out is not None:
        Path(out).write_text(doc + "\n")
    if fmt == "text":
        for a in result.actions:
            click.echo(f"{a.kind} {a.location}: {a.before} -> {a.after}",
                       err=True)
    sys.exit(0)


@main.command("render-check")
@click.argument("src")
def cmd_render_check(src: str) -> None:
    """Run the render-critical checks; exit 0 iff all pass."""
    try:
        resp = parse_response(_read_source(src))
    except FormatError as e:
        click.echo(f"unparsable: {e.message}")
        sys.exit(1)
    report = render_check(resp)
    click.echo(report.compact())
    sys.exit(0 if report.passed else 1)


@main.command("process")
@click.argument("src")
@click.option("--interact", type=click.Path(exists=True), default=None,
              help="JSON list of {surfaceId, componentId, userValues}.")
@click.option("--export", "export_path", type=click.Path(), default=None,
              help="Write the processor state snapshot here.")
def cmd_process(src: str, interact: str | None,
                export_path: str | None) -> None:
    """Feed messages through the surface processor; print resolved trees."""
    try:
        resp = parse_response(_read_source(src))
    except FormatError as e:
        click.echo(f"unparsable: {e.message}")
        sys.exit(1)
    proc = Processor()
    proc.apply_response(resp)
    out: dict = {"surfaces": {}, "faults": [
        {"kind": f.kind, "surfaceId": f.surface_id, "detail": f.detail}
        for f in proc.faults]}
    for sid in sorted(proc.surfaces):
        surface = proc.surfaces[sid]
        if surface.begun and surface.root:
            out["surfaces"][sid] = materialize_to_json(proc, sid)
        else:
            out["surfaces"][sid] = None
    if interact:
        events = []
        for step in json.loads(Path(interact).read_text()):
            event = proc.dispatch_action(step["surfaceId"],
                                         step["componentId"],
                                         step.get("userValues"))
            events.append(event.to_json())
        out["events"] = events
    if export_path:
        Path(export_path).write_text(json.dumps(proc.export_state(),
                                                indent=1) + "\n")
    click.echo(json.dumps(out, indent=1))
    sys.exit(0)


@main.command("score")
@click.argument("src")
@click.option("--text-only", is_flag=True,
              help="Score as a task where no interface was expected.")
@click.option("--config", "config_path", type=click.Path(), default=None)
def cmd_score(src: str, text_only: bool, config_path: str | None) -> None:
    """Static scoring: lint, render checks, functional dims, reward."""
    cfg = _load_cfg(config_path)
    raw = _read_source(src)
    report = lint_text(raw)
    l1 = score_l1(report)
    if report.parse_ok and report.response is not None:
        rc = render_check(report.response)
        a2ui_empty = not report.response.a2ui
        render_pass = rc.passed
        rules = rc.rules_failed()
    else:
        a2ui_empty, render_pass, rules = True, False, []
    reward = compose_reward(RewardInputs(
        parse_ok=report.parse_ok,
        ui_expected=not text_only,
        a2ui_empty=a2ui_empty,
        lint_error_count=len(report.errors()),
        render_pass=render_pass,
        l1=l1), config=cfg.reward())
    click.echo(json.dumps({
        "parseOk": report.parse_ok,
        "lintErrors": len(report.errors()),
        "lintWarnings": len(report.warnings()),
        "renderPass": render_pass,
        "renderRules": rules,
        "l1": l1,
        "reward": reward,
    }, indent=1))
    sys.exit(0)


@main.command("bench")
@click.argument("tasks_path", type=click.Path(exists=True))
@click.option("--out", "out_dir", type=click.Path(), required=True)
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--prompt-mode", type=click.Choice(["minimal", "full"]),
              default="minimal")
@click.option("--roll-raw", is_flag=True,
              help="Roll full raw outputs into later depth steps.")
@click.option("--concurrency", type=int, default=None)
def cmd_bench(tasks_path: str, out_dir: str, config_path: str | None,
              prompt_mode: str, roll_raw: bool,
              concurrency: int | None) -> None:
    """Run the benchmark harness against the configured model endpoint."""
    cfg = _load_cfg(config_path)
    if cfg.model is None:
        raise click.UsageError("no model endpoint configured")
    try:
        generate = cfg.model.client()
        judges = None
        if cfg.judge is not None:
            judge_client = cfg.judge.client()
            judges = {"l2": judge_client, "l3": judge_client,
                      "v": judge_client}
    except ConfigError as e:
        raise click.UsageError(str(e))
    tasks = load_tasks(tasks_path)
    runner = BenchRunner(
        generate=generate,
        judges=judges,
        prompt_mode=prompt_mode,
        roll_raw=roll_raw,
        lint_attempts=cfg.lint_attempts,
        screenshot_cmd=cfg.screenshot_cmd,
        reward_config=cfg.reward(),
        concurrency=concurrency if concurrency is not None else cfg.concurrency,
    )
    results = runner.run(tasks)
    summary = emit_report(results, out_dir)
    click.echo(json.dumps(summary, indent=1))
    sys.exit(0)


@main.command("corpus")
@click.argument("dialogues_path", type=click.Path(exists=True))
@click.option("--out", "out_path", type=click.Path(), required=True)
@click.option("--stats", "stats_path", type=click.Path(), default=None)
@click.option("--quota", "quota_args", multiple=True, metavar="TYPE=N",
              help="Component quota, e.g. --quota Tabs=5. Repeatable.")
@click.option("--seed", type=int, default=0)
def cmd_corpus(dialogues_path: str, out_path: str, stats_path: str | None,
               quota_args: tuple[str, ...], seed: int) -> None:
    """Generate training samples from annotated dialogues."""
    quotas: dict[str, int] = {}
    for arg in quota_args:
        name, _, count = arg.partition("=")
        if not count.isdigit():
            raise click.UsageError(f"bad quota '{arg}', expected TYPE=N")
        quotas[name] = int(count)
    dialogues = load_dialogues(dialogues_path)
    samples = build_samples(dialogues)
    samples += augment(samples, quotas, seed=seed)
    write_samples(samples, out_path)
    stats = corpus_stats(samples)
    stats["component_sample_counts"] = component_sample_counts(samples)
    if stats_path:
        Path(stats_path).write_text(json.dumps(stats, indent=1) + "\n")
    click.echo(json.dumps(stats, indent=1))
    sys.exit(0)


@main.command("render-export")
@click.argument("src")
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="Write the render bundle JSON here.")
@click.option("--base-url", default="http://localhost:5173",
              show_default=True)
@click.option("--target-id", default="export")
def cmd_render_export(src: str, out_path: str | None, base_url: str,
                      target_id: str) -> None:
    """Package a response for the web renderer; print the /render URL."""
    try:
        resp = parse_response(_read_source(src))
    except FormatError as e:
        click.echo(f"refused: unparsable input: {e.message}")
        sys.exit(1)
    if not resp.a2ui:
        click.echo("refused: response carries no interface messages")
        sys.exit(1)
    rc = render_check(resp)
    if not rc.passed:
        click.echo(f"refused: render checks failed: {rc.compact()}")
        sys.exit(1)
    doc = json.loads(serialize_response(resp))
    bundle = {"targetId": target_id,
              "textResponse": doc["text_response"],
              "a2ui": doc["a2ui"]}
    if out_path:
        Path(out_path).write_text(json.dumps(bundle, indent=1) + "\n")
    encoded = urllib.parse.quote(json.dumps(doc["a2ui"],
                                            separators=(",", ":")), safe="")
    click.echo(f"{base_url.rstrip('/')}/render?messages={encoded}")
    sys.exit(0)


if __name__ == "__main__":
    main()
