import json
from importlib import resources
from pathlib import Path

import pytest

FIXTURES = Path(str(resources.files("a2uikit").joinpath("resources/fixtures")))


def golden_paths() -> list[Path]:
    return sorted((FIXTURES / "golden").glob("*.json"))


def golden_text(name: str) -> str:
    return (FIXTURES / "golden" / f"{name}.json").read_text()


def defect_manifest() -> list[dict]:
    return json.loads((FIXTURES / "defects" / "manifest.json").read_text())


def defect_text(code: str) -> str:
    return (FIXTURES / "defects" / f"{code}.json").read_text()


def renderguard_manifest() -> list[dict]:
    return json.loads((FIXTURES / "renderguard" / "manifest.json").read_text())


def parity_cases() -> list[dict]:
    return [json.loads(p.read_text())
            for p in sorted((FIXTURES / "parity").glob("*.json"))]


def load_seed_dialogues() -> list[dict]:
    path = FIXTURES / "dialogues" / "seed.jsonl"
    return [json.loads(line) for line in path.read_text().splitlines() if line]


TASKS_PATH = FIXTURES / "tasks" / "desk12.jsonl"


@pytest.fixture(scope="session")
def catalog():
    from a2uikit.catalog import load_catalog
    return load_catalog()


# One canned valid reply a stub model can give to any prompt.
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


# ---------------------------------------------------------------------------
# Acceptance summary: one line per criterion at the end of the run.

_ACCEPTANCE: dict[int, tuple[str, str]] = {}

CRITERIA = {
    1: "lint soundness on golden and defect fixtures",
    2: "render-check rule coverage",
    3: "hierarchical format-score regimes",
    4: "processor replay determinism and path laws",
    5: "reward arithmetic and group advantages",
    6: "judge retry contract and render floor",
    7: "crop box against brute-force oracle",
    8: "depth harness determinism and full bench run",
    9: "corpus generation validity and quotas",
}


def record_criterion(num: int, outcome: str, detail: str = "") -> None:
    _ACCEPTANCE[num] = (outcome, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        outcome, detail = _ACCEPTANCE.get(num, ("FAIL", "not reached"))
        line = f"criterion {num}: {outcome} - {CRITERIA[num]}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
