"""Reward scoring: deterministic level-1 scores, judge-score floors, reward
composition, group advantages, and cohort aggregation.

Three scoring levels feed one reward:

  L1 (D1-1..D1-5)  -- computed from the lint report, no judge involved
  L2 (D2-1..D2-5)  -- text judge on interface quality
  L3 (U3-A..U3-C)  -- text judge on interaction usefulness

plus a visual track (V1..V3) scored from screenshots when available.

L1 has three regimes. An unparsable payload scores zero on every dimension.
A payload that parses but carries lint errors earns the parse dimension
only: (5, 0, 0, 0, 0). An error-free payload starts at fives and loses one
point per lint warning on the matching dimension, floored at zero.

Rewards hard-gate to zero on malformed JSON, on a missing UI when one was
expected, on any lint error, and on render-check failure; otherwise the
reward is the weighted sum of normalized level scores. Tasks that expect a
text-only reply use the simplified form: the L1 term plus a fixed bonus for
staying UI-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from a2uikit.catalog import Catalog, load_catalog
from a2uikit.lint import LintReport
from a2uikit.protocol import AssistantResponse, iter_components

L1_DIMS = ("D1-1", "D1-2", "D1-3", "D1-4", "D1-5")
L2_DIMS = ("D2-1", "D2-2", "D2-3", "D2-4", "D2-5")
L3_DIMS = ("U3-A", "U3-B", "U3-C")
V_DIMS = ("V1", "V2", "V3")

# lint warning category -> L1 dimension that pays for it
_CATEGORY_DIM = {
    "structure": "D1-2",
    "reference": "D1-3",
    "required-field": "D1-4",
    "value-format": "D1-5",
}

MAX_INTERACTIVE = 4   # more independent interactive components overloads a screen
MAX_OPTIONS = 8       # more total options overloads a selection


class EmptyCohort(ValueError):
    """Aggregation requested over zero included samples."""


@dataclass(frozen=True)
class RewardConfig:
    w_l1: float = 0.2
    w_l2: float = 0.4
    w_l3: float = 0.4
    no_ui_bonus: float = 0.5

    def __post_init__(self) -> None:
        total = self.w_l1 + self.w_l2 + self.w_l3
        if not math.isclose(total, 1.0, abs_tol=1e-9):
            raise ValueError(f"level weights must sum to 1, got {total}")


def score_l1(report: LintReport) -> dict[str, float]:
    if not report.parse_ok:
        return {d: 0.0 for d in L1_DIMS}
    if report.has_errors:
        return {"D1-1": 5.0, "D1-2": 0.0, "D1-3": 0.0, "D1-4": 0.0, "D1-5": 0.0}
    scores = {d: 5.0 for d in L1_DIMS}
    for category, count in report.warning_counts_by_category().items():
        dim = _CATEGORY_DIM.get(category)
        if dim is not None:
            scores[dim] = max(0.0, scores[dim] - 1.0 * count)
    return scores


def floor_for_render_failure(scores: dict[str, float]) -> dict[str, float]:
    """Judge scores for a sample that failed render checks cap at 1."""
    return {k: min(v, 1.0) for k, v in scores.items()}


def zero_for_structure_failure(dims: tuple[str, ...]) -> dict[str, float]:
    """Judge levels are not consulted when lint reports errors."""
    return {d: 0.0 for d in dims}


def level_value(scores: dict[str, float]) -> float:
    """Normalized [0, 1] value of one level for one sample."""
    if not scores:
        raise EmptyCohort("no dimensions to average")
    return sum(scores.values()) / len(scores) / 5.0


@dataclass
class RewardInputs:
    parse_ok: bool
    ui_expected: bool
    a2ui_empty: bool
    lint_error_count: int
    render_pass: bool
    l1: dict[str, float]
    l2: dict[str, float] | None = None
    l3: dict[str, float] | None = None


def compose_reward(inp: RewardInputs, config: RewardConfig | None = None) -> float:
    config = config or RewardConfig()
    if not inp.parse_ok:
        return 0.0
    if not inp.ui_expected:
        if inp.lint_error_count > 0 or not inp.render_pass:
            return 0.0
        bonus = config.no_ui_bonus if inp.a2ui_empty else 0.0
        return config.w_l1 * level_value(inp.l1) + bonus
    if inp.a2ui_empty:
        return 0.0
    if inp.lint_error_count > 0:
        return 0.0
    if not inp.render_pass:
        return 0.0
    s_l2 = level_value(inp.l2) if inp.l2 else 0.0
    s_l3 = level_value(inp.l3) if inp.l3 else 0.0
    return (config.w_l1 * level_value(inp.l1)
            + config.w_l2 * s_l2
            + config.w_l3 * s_l3)


def group_advantages(rewards: list[float]) -> list[float]:
    """Mean-centered advantages for one sampling group."""
    if not rewards:
        return []
    mean = sum(rewards) / len(rewards)
    return [r - mean for r in rewards]


def overload_flags(resp: AssistantResponse, *,
                   catalog: Catalog | None = None) -> tuple[int, int, bool]:
    """(interactive component count, total option count, overloaded).

    A screen with more than MAX_INTERACTIVE independently interactive
    components, or more than MAX_OPTIONS total selectable options, is
    treated as overloaded; the usefulness judge is instructed to score the
    ease dimension at 1 in that case.
    """
    catalog = catalog or load_catalog()
    interactive = 0
    options = 0
    for _, _, c in iter_components(resp):
        schema = catalog.get(c.type_name) if c.type_name else None
        if schema is None:
            continue
        if schema.role == "interactive":
            interactive += 1
        items = c.props.get("items")
        if schema.selection_group and items is not None and items.kind == "items":
            options += len(items.value)
    return interactive, options, interactive > MAX_INTERACTIVE or options > MAX_OPTIONS


# ---------------------------------------------------------------------------
# Cohort aggregation


@dataclass
class SampleScores:
    """Per-sample scoring record as produced by the bench."""

    task_id: str
    family: str = ""
    dataset: str = ""
    l1: dict[str, float] = field(default_factory=dict)
    l2: dict[str, float] | None = None  # None = judge failure, excluded
    l3: dict[str, float] | None = None
    v: dict[str, float] | None = None   # None = not judged / not eligible
    visual_eligible: bool = False


@dataclass
class LevelAggregate:
    mean: float
    included: int
    excluded: int


@dataclass
class AggregateReport:
    overall: float
    l1: LevelAggregate
    l2: LevelAggregate
    l3: LevelAggregate
    visual: dict[str, float] | None
    per_family: dict[str, float]
    per_dataset: dict[str, float]


def _level_aggregate(values: list[float | None]) -> LevelAggregate:
    included = [v for v in values if v is not None]
    if not included:
        raise EmptyCohort("every sample was excluded from this level")
    return LevelAggregate(
        mean=sum(included) / len(included),
        included=len(included),
        excluded=len(values) - len(included),
    )


def _sample_levels(s: SampleScores) -> tuple[float, float | None, float | None]:
    return (
        level_value(s.l1),
        level_value(s.l2) if s.l2 is not None else None,
        level_value(s.l3) if s.l3 is not None else None,
    )


def _overall(samples: list[SampleScores]) -> tuple[float, LevelAggregate,
                                                   LevelAggregate, LevelAggregate]:
    if not samples:
        raise EmptyCohort("no samples to aggregate")
    triples = [_sample_levels(s) for s in samples]
    l1 = _level_aggregate([t[0] for t in triples])
    l2 = _level_aggregate([t[1] for t in triples])
    l3 = _level_aggregate([t[2] for t in triples])
    overall = (l1.mean + l2.mean + l3.mean) / 3.0 * 100.0
    return overall, l1, l2, l3


def aggregate(samples: list[SampleScores]) -> AggregateReport:
    overall, l1, l2, l3 = _overall(samples)

    def cohort_overall(subset: list[SampleScores]) -> float:
        return _overall(subset)[0]

    per_family: dict[str, float] = {}
    for fam in sorted({s.family for s in samples if s.family}):
        per_family[fam] = cohort_overall([s for s in samples if s.family == fam])
    per_dataset: dict[str, float] = {}
    for ds in sorted({s.dataset for s in samples if s.dataset}):
        per_dataset[ds] = cohort_overall([s for s in samples if s.dataset == ds])

    visual: dict[str, float] | None = None
    v_samples = [s for s in samples if s.visual_eligible and s.v is not None]
    if v_samples:
        visual = {
            dim: sum(s.v[dim] for s in v_samples) / len(v_samples)
            for dim in V_DIMS
        }
    return AggregateReport(
        overall=overall, l1=l1, l2=l2, l3=l3, visual=visual,
        per_family=per_family, per_dataset=per_dataset,
    )
