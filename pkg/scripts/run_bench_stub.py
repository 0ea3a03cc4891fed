"""Run the bundled 12-task pack against a canned model and judge.

No network, no keys. Exercises the full pipeline (prompt assembly, lint
retry, render checks, judging, reward, report emission) and prints the
summary. Pass an output directory to keep the report files.

    python3 scripts/run_bench_stub.py [out_dir]
"""

import json
import sys
import tempfile
from importlib import resources

from a2uikit.bench import BenchRunner, emit_report, load_tasks
from a2uikit.judge import L2_EXPECTED, L3_EXPECTED

CANNED_UI = json.dumps({
    "text_response": "Here you go.",
    "a2ui": [
        {"beginRendering": {"surfaceId": "s1", "root": "card"}},
        {"surfaceUpdate": {"surfaceId": "s1", "components": [
            {"id": "msg", "component": {"Label": {"text": "All set."}}},
            {"id": "ok_label", "component": {"Label": {"text": "OK"}}},
            {"id": "ok", "component": {"Button": {
                "child": "ok_label",
                "action": {"name": "ack", "context": []}}}},
            {"id": "col", "component": {"Column": {
                "children": ["msg", "ok"], "spacing": 8}}},
            {"id": "card", "component": {"Card": {"child": "col"}}},
        ]}},
    ],
})


def main() -> None:
    tasks_path = resources.files("a2uikit").joinpath(
        "resources/fixtures/tasks/desk12.jsonl")
    tasks = load_tasks(str(tasks_path))
    runner = BenchRunner(
        generate=lambda _messages: CANNED_UI,
        judges={
            "l2": lambda _m: json.dumps({d: 4 for d in L2_EXPECTED}),
            "l3": lambda _m: json.dumps({d: 5 for d in L3_EXPECTED}),
        },
        concurrency=4,
    )
    results = runner.run(tasks)
    out_dir = sys.argv[1] if len(sys.argv) > 1 else tempfile.mkdtemp(
        prefix="bench_stub_")
    summary = emit_report(results, out_dir)
    print(json.dumps(summary, indent=1))
    print(f"\nreport files in {out_dir}", file=sys.stderr)


if __name__ == "__main__":
    main()
