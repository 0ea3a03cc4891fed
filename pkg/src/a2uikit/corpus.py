"""Training-corpus generation from annotated dialogues.

Input is JSONL, one dialogue per line:

    {"dialogue_id": "...", "source": "multiwoz|sgd|esconv|annomi",
     "turns": [{"speaker": "user|assistant", "text": "...",
                "action": {...}?}, ...]}

An ``action`` annotation on an assistant turn describes what the turn tries
to accomplish (``kind``) and which values it needs (``slots``, each with a
``value_type``). Slot types pick widget families deterministically:
categorical values get selection widgets, numeric or ordinal values get a
tick slider, booleans get a two-option selection, temporal values get a
date/time input. A Card > Column scaffold wraps the widgets with a prompt
label and, when any interactive widget is present, a confirm button. The
emitted messages follow the surface lifecycle for the annotated phase:
``new`` opens a surface (begin + update + data), ``update`` revises it in
place, ``complete`` deletes it.

Every generated UI turn is asserted clean against lint and the render
checks before it is admitted; a generator bug fails loudly rather than
polluting training data.

Augmentation is targeted rather than uniform: quotas are keyed by component
type name and topped up from seeded template pools until each type appears
in at least the requested number of samples.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from a2uikit.catalog import Catalog, load_catalog
from a2uikit.lint import lint_response
from a2uikit.protocol import (
    ActionSpec,
    AssistantResponse,
    BeginRendering,
    ComponentInstance,
    DataEntry,
    DataModelUpdate,
    DeleteSurface,
    Message,
    PropValue,
    SurfaceUpdate,
    serialize_response,
)
from a2uikit.renderguard import render_check

ACTION_KINDS = ("collect_constraints", "present_options", "confirm_decision",
                "guided_selection", "reflection_support",
                "confidence_elicitation", "action_planning")
SLOT_TYPES = ("categorical", "numeric_ordinal", "boolean", "temporal",
              "free_text")
PHASES = ("new", "update", "complete")

ARCHETYPES = ("text_only", "mixed_form", "selection_slider", "form_input",
              "button_driven", "display")

_SELECTION_FAMILY = {"SelectionList", "SelectionGrid", "SelectionWrap",
                     "OrderedSelectionList", "DropdownSelection",
                     "ActionSelectionList"}

# A wrap of short chips reads better than a list when options are few and
# their labels are compact.
WRAP_MAX_OPTIONS = 4
WRAP_MAX_LABEL = 12


class EmptyDialogue(ValueError):
    """A dialogue with no usable turns."""


class UnsupportedSlotType(ValueError):
    """The annotated slot cannot be rendered with the component catalog."""


class CorpusInvariantError(RuntimeError):
    """A generated turn failed its own validity checks; generator bug."""


def normalize_dialogue(turns: list[dict[str, Any]]) -> list[dict[str, Any]]:
    """Merge consecutive same-speaker turns; drop empty text."""
    merged: list[dict[str, Any]] = []
    for turn in turns:
        speaker = turn.get("speaker")
        text = (turn.get("text") or "").strip()
        if speaker not in ("user", "assistant") or not text:
            continue
        if merged and merged[-1]["speaker"] == speaker:
            merged[-1]["text"] += " " + text
            if "action" not in merged[-1] and turn.get("action") is not None:
                merged[-1]["action"] = turn["action"]
        else:
            entry: dict[str, Any] = {"speaker": speaker, "text": text}
            if turn.get("action") is not None:
                entry["action"] = turn["action"]
            merged.append(entry)
    if not merged:
        raise EmptyDialogue("dialogue has no usable turns")
    return merged


def _widget_for_slot(slot: dict[str, Any]) -> dict[str, Any]:
    name = str(slot.get("name") or "value")
    v_type = slot.get("value_type")
    prompt = str(slot.get("prompt") or name.replace("_", " ").capitalize())
    if v_type == "free_text":
        raise UnsupportedSlotType(
            f"slot '{name}': free-form text entry has no catalog component")
    if v_type == "categorical":
        options = [str(o) for o in slot.get("options") or []]
        if not options:
            raise UnsupportedSlotType(f"slot '{name}': categorical without options")
        compact = (len(options) <= WRAP_MAX_OPTIONS
                   and all(len(o) <= WRAP_MAX_LABEL for o in options))
        return {"slot": name, "prompt": prompt,
                "widget": "SelectionWrap" if compact else "SelectionList",
                "options": options}
    if v_type == "boolean":
        labels = [str(o) for o in slot.get("options") or ["Yes", "No"]][:2]
        if len(labels) < 2:
            labels = ["Yes", "No"]
        return {"slot": name, "prompt": prompt, "widget": "SelectionWrap",
                "options": labels, "max_selections": 1}
    if v_type == "numeric_ordinal":
        rng = slot.get("range") or {}
        lo, hi = rng.get("min", 1), rng.get("max", 5)
        step = rng.get("step", 1)
        divisions = max(1, int(round((hi - lo) / step))) if step else None
        return {"slot": name, "prompt": prompt, "widget": "TickSlider",
                "min": lo, "max": hi, "divisions": divisions}
    if v_type == "temporal":
        mode = slot.get("mode", "date")
        return {"slot": name, "prompt": prompt, "widget": "DateTimeInput",
                "enable_date": mode in ("date", "datetime"),
                "enable_time": mode in ("time", "datetime")}
    raise UnsupportedSlotType(f"slot '{name}': unknown value type '{v_type}'")


def map_action_to_components(action: dict[str, Any]) -> dict[str, Any]:
    """Deterministic widget plan for an annotated action.

    Raises UnsupportedSlotType when nothing in the action can be rendered.
    """
    kind = action.get("kind")
    if kind not in ACTION_KINDS:
        raise UnsupportedSlotType(f"unknown action kind '{kind}'")
    widgets = [_widget_for_slot(s) for s in action.get("slots") or []]
    decision_labels = None
    if kind == "confirm_decision":
        decision_labels = [str(o) for o in
                           (action.get("options") or ["Confirm", "Cancel"])][:2]
        if len(decision_labels) < 2:
            decision_labels = ["Confirm", "Cancel"]
    if not widgets and decision_labels is None:
        raise UnsupportedSlotType(f"action '{kind}' carries no renderable slots")
    return {"kind": kind, "widgets": widgets,
            "decision_labels": decision_labels,
            "confirm": bool(widgets)}


def _lit(value: str) -> PropValue:
    return PropValue("string", value)


def _num(value: float) -> PropValue:
    return PropValue("number", value)


def _bound(path: str, key: str, literal: Any) -> PropValue:
    return PropValue("bound", {"path": path, "literal_key": key,
                               "literal": literal})


def _comp(cid: str, type_name: str, **props: Any) -> ComponentInstance:
    out: dict[str, PropValue] = {}
    for name, value in props.items():
        if isinstance(value, PropValue):
            out[name] = value
        elif isinstance(value, list):
            out[name] = PropValue("children", value)
        elif isinstance(value, ActionSpec):
            out[name] = PropValue("action", value)
        else:
            raise TypeError(f"unsupported prop literal for '{name}'")
    return ComponentInstance(id=cid, type_name=type_name, props=out)


def _selection_items(options: list[str]) -> PropValue:
    return PropValue("items", [
        {"label": _lit(label), "value": _lit(f"opt_{idx}")}
        for idx, label in enumerate(options)
    ])


def _widget_component(wid: str, spec: dict[str, Any]) -> ComponentInstance:
    widget = spec["widget"]
    if widget in ("SelectionWrap", "SelectionList"):
        props: dict[str, PropValue] = {
            "selection": _bound(f"/form/{spec['slot']}", "literalArray", []),
            "items": _selection_items(spec["options"]),
        }
        if spec.get("max_selections"):
            props["maxSelections"] = _num(spec["max_selections"])
        return ComponentInstance(wid, widget, props)
    if widget == "TickSlider":
        props = {
            "value": _bound(f"/form/{spec['slot']}", "literalNumber",
                            spec["min"]),
            "min": _num(spec["min"]),
            "max": _num(spec["max"]),
            "label": _lit(spec["prompt"][:40]),
        }
        if spec.get("divisions"):
            props["divisions"] = _num(spec["divisions"])
        return ComponentInstance(wid, "TickSlider", props)
    if widget == "DateTimeInput":
        return ComponentInstance(wid, "DateTimeInput", {
            "value": _bound(f"/form/{spec['slot']}", "literalString",
                            "2026-01-01"),
            "enableDate": PropValue("boolean", spec["enable_date"]),
            "enableTime": PropValue("boolean", spec["enable_time"]),
        })
    raise UnsupportedSlotType(f"no component builder for '{widget}'")


@dataclass
class GeneratedTurn:
    response: AssistantResponse
    surface_id: str
    action_kind: str
    phase: str


def generate_turn(dialogue_id: str, action: dict[str, Any], phase: str, *,
                  text_response: str,
                  catalog: Catalog | None = None,
                  known_surfaces: frozenset[str] | set[str] = frozenset()
                  ) -> GeneratedTurn:
    """Messages for one annotated assistant turn, asserted clean.

    ``new`` emits beginRendering + surfaceUpdate + dataModelUpdate,
    ``update`` a surfaceUpdate only, ``complete`` a deleteSurface.
    """
    if phase not in PHASES:
        raise ValueError(f"unknown phase '{phase}'")
    catalog = catalog or load_catalog()
    sid = f"surf_{dialogue_id}"
    kind = str(action.get("kind"))

    if phase == "complete":
        resp = AssistantResponse(text_response, [
            Message("deleteSurface", DeleteSurface(sid)),
        ])
        return _validated(resp, sid, kind, phase, catalog, known_surfaces)

    plan = map_action_to_components(action)
    prompt = str(action.get("prompt") or "Your input")

    components: list[ComponentInstance] = []
    column_children: list[str] = []

    if phase == "new":
        # the prompt label binds to the data model; the update phase keeps
        # labels literal so the turn stands alone
        title = PropValue("path", "/form/title")
    else:
        title = _lit(prompt)
    components.append(_comp("title", "Label", text=title,
                            size=_lit("headlineSmall")))
    column_children.append("title")

    first_slot = None
    for spec in plan["widgets"]:
        wid = f"w_{spec['slot']}"
        if first_slot is None:
            first_slot = spec["slot"]
        if len(plan["widgets"]) > 1:
            lid = f"lbl_{spec['slot']}"
            components.append(_comp(lid, "Label", text=_lit(spec["prompt"]),
                                    size=_lit("bodySmall")))
            column_children.append(lid)
        components.append(_widget_component(wid, spec))
        column_children.append(wid)

    if plan["decision_labels"]:
        yes, no = plan["decision_labels"]
        components += [
            _comp("yes_label", "Label", text=_lit(yes)),
            _comp("no_label", "Label", text=_lit(no)),
            _comp("yes_btn", "Button", child=PropValue("child", "yes_label"),
                  style=_lit("primary"),
                  action=ActionSpec("confirm", [
                      {"key": "accepted", "value": True}])),
            _comp("no_btn", "Button", child=PropValue("child", "no_label"),
                  style=_lit("secondary"),
                  action=ActionSpec("cancel", [
                      {"key": "accepted", "value": False}])),
            _comp("buttons", "Row", children=["yes_btn", "no_btn"],
                  spacing=_num(8)),
        ]
        column_children.append("buttons")

    if plan["confirm"]:
        context = [{"key": "slot", "value": first_slot},
                   {"key": "value", "value": {"path": f"/form/{first_slot}"}}]
        components += [
            _comp("submit_label", "Label", text=_lit("Confirm")),
            _comp("submit", "Button", child=PropValue("child", "submit_label"),
                  style=_lit("primary"),
                  action=ActionSpec("submit", context)),
        ]
        column_children.append("submit")

    components.append(_comp("col", "Column", children=column_children,
                            spacing=_num(12)))
    components.append(_comp("card", "Card", child=PropValue("child", "col")))

    msgs = []
    if phase == "new":
        msgs.append(Message("beginRendering", BeginRendering(sid, "card")))
    msgs.append(Message("surfaceUpdate", SurfaceUpdate(sid, components)))
    if phase == "new":
        msgs.append(Message("dataModelUpdate", DataModelUpdate(
            sid, "/form", [DataEntry("title", "string", prompt)])))
    resp = AssistantResponse(text_response, msgs)
    return _validated(resp, sid, kind, phase, catalog, known_surfaces)


def _validated(resp: AssistantResponse, sid: str, kind: str, phase: str,
               catalog: Catalog,
               known_surfaces: frozenset[str] | set[str]) -> GeneratedTurn:
    report = lint_response(resp, catalog=catalog,
                           known_surfaces=frozenset(known_surfaces))
    if not report.is_clean:
        raise CorpusInvariantError(
            f"generated turn is not lint-clean:\n{report.compact()}")
    rc = render_check(resp, catalog=catalog)
    if not rc.passed:
        raise CorpusInvariantError(
            f"generated turn fails render checks:\n{rc.compact()}")
    return GeneratedTurn(resp, sid, kind, phase)


def classify_archetype(resp: AssistantResponse) -> str:
    """First matching archetype; the rule order makes classes disjoint."""
    if not resp.a2ui:
        return "text_only"
    families: set[str] = set()
    has_action_button = False
    for m in resp.a2ui:
        if not isinstance(m.body, SurfaceUpdate):
            continue
        for c in m.body.components:
            if c.type_name in _SELECTION_FAMILY:
                families.add("selection")
            elif c.type_name == "TickSlider":
                families.add("slider")
            elif c.type_name == "DateTimeInput":
                families.add("datetime")
            elif c.type_name == "PasswordKeypad":
                families.add("keypad")
            if c.type_name == "Button" and "action" in c.props:
                has_action_button = True
    if len(families) >= 2:
        return "mixed_form"
    if families & {"selection", "slider"}:
        return "selection_slider"
    if families & {"datetime", "keypad"}:
        return "form_input"
    if has_action_button:
        return "button_driven"
    return "display"


# ---------------------------------------------------------------------------
# Corpus assembly


@dataclass
class Sample:
    dialogue_id: str
    source: str
    turn_index: int
    is_ui_turn: bool
    provenance: str      # "original" | "augmented"
    archetype: str
    action_kind: str | None
    phase: str | None
    context: list[dict[str, str]]
    target: str          # serialized assistant response

    def to_json(self) -> dict[str, Any]:
        return {
            "dialogue_id": self.dialogue_id,
            "source": self.source,
            "turn_index": self.turn_index,
            "is_ui_turn": self.is_ui_turn,
            "provenance": self.provenance,
            "archetype": self.archetype,
            "action_kind": self.action_kind,
            "phase": self.phase,
            "context": self.context,
            "target": self.target,
        }

    @classmethod
    def from_json(cls, doc: dict[str, Any]) -> "Sample":
        return cls(**{k: doc[k] for k in (
            "dialogue_id", "source", "turn_index", "is_ui_turn", "provenance",
            "archetype", "action_kind", "phase", "context", "target")})


def load_dialogues(path: str | Path) -> list[dict[str, Any]]:
    out = []
    for line in Path(path).read_text().splitlines():
        if line.strip():
            out.append(json.loads(line))
    return out


def build_samples(dialogues: list[dict[str, Any]], *,
                  catalog: Catalog | None = None) -> list[Sample]:
    catalog = catalog or load_catalog()
    samples: list[Sample] = []
    for dlg in dialogues:
        dialogue_id = dlg["dialogue_id"]
        source = dlg.get("source", "unknown")
        turns = normalize_dialogue(dlg["turns"])
        context: list[dict[str, str]] = []
        known: set[str] = set()
        for idx, turn in enumerate(turns):
            if turn["speaker"] != "assistant":
                context.append({"speaker": "user", "text": turn["text"]})
                continue
            action = turn.get("action")
            if action is None:
                resp = AssistantResponse(turn["text"], [])
                samples.append(Sample(
                    dialogue_id, source, idx, False, "original", "text_only",
                    None, None, list(context), serialize_response(resp)))
            else:
                phase = action.get("phase", "new")
                gen = generate_turn(dialogue_id, action, phase,
                                    text_response=turn["text"],
                                    catalog=catalog, known_surfaces=known)
                if phase == "new":
                    known.add(gen.surface_id)
                elif phase == "complete":
                    known.discard(gen.surface_id)
                samples.append(Sample(
                    dialogue_id, source, idx, True, "original",
                    classify_archetype(gen.response), gen.action_kind, phase,
                    list(context), serialize_response(gen.response)))
            context.append({"speaker": "assistant", "text": turn["text"]})
    return samples


# ---------------------------------------------------------------------------
# Targeted augmentation
#
# Quotas are keyed by component type name. Slot-driven types ride the normal
# action pipeline; purely presentational types (tabs, modals, icons, images)
# have dedicated builders. Builders never emit each other's signature type,
# so quotas stay independent; all outputs go through the same validity gate.

_AUG_ACTIONS: dict[str, list[dict[str, Any]]] = {
    "TickSlider": [
        {"kind": "confidence_elicitation", "prompt": "How confident are you?",
         "slots": [{"name": "confidence", "value_type": "numeric_ordinal",
                    "prompt": "Confidence", "range": {"min": 1, "max": 5}}]},
        {"kind": "collect_constraints", "prompt": "How many guests?",
         "slots": [{"name": "guests", "value_type": "numeric_ordinal",
                    "prompt": "Guests", "range": {"min": 1, "max": 8}}]},
    ],
    "DateTimeInput": [
        {"kind": "collect_constraints", "prompt": "Pick a reservation date",
         "slots": [{"name": "date", "value_type": "temporal", "mode": "date"}]},
        {"kind": "action_planning", "prompt": "When should I remind you?",
         "slots": [{"name": "remind_at", "value_type": "temporal",
                    "mode": "datetime"}]},
    ],
    "SelectionList": [
        {"kind": "present_options", "prompt": "Choose a room type",
         "slots": [{"name": "room", "value_type": "categorical",
                    "options": ["Single room", "Double room", "Junior suite",
                                "Family apartment", "Penthouse suite"]}]},
        {"kind": "guided_selection", "prompt": "Pick a support topic",
         "slots": [{"name": "topic", "value_type": "categorical",
                    "options": ["Managing stress at work", "Sleep habits",
                                "Family relationships", "Financial worries",
                                "Something else entirely"]}]},
    ],
    "SelectionWrap": [
        {"kind": "collect_constraints", "prompt": "Pick a cuisine",
         "slots": [{"name": "cuisine", "value_type": "categorical",
                    "options": ["Italian", "Thai", "Mexican", "Indian"]}]},
        {"kind": "reflection_support", "prompt": "Include breakfast?",
         "slots": [{"name": "breakfast", "value_type": "boolean"}]},
    ],
    "Row": [
        {"kind": "confirm_decision", "prompt": "Book it now?",
         "options": ["Book now", "Not yet"]},
        {"kind": "confirm_decision", "prompt": "Send the message?",
         "options": ["Send", "Discard"]},
    ],
}

_AUG_USER_LINES = ["I can't decide, help me out.", "What are my options?",
                   "Let's sort this out.", "Can you lay that out for me?"]


def _scaffold_response(sid: str, root: str, comps: list[ComponentInstance],
                       text: str) -> AssistantResponse:
    return AssistantResponse(text, [
        Message("beginRendering", BeginRendering(sid, root)),
        Message("surfaceUpdate", SurfaceUpdate(sid, comps)),
    ])


def _tabs_sample(rng: random.Random, sid: str) -> AssistantResponse:
    panes = [("Overview", "The plan at a glance."),
             ("Details", "Step-by-step breakdown of the plan."),
             ("Notes", "Anything worth remembering later.")]
    comps = []
    items = []
    for i, (tab_title, body) in enumerate(panes):
        lid = f"tab_body_{i}"
        comps.append(_comp(lid, "Label", text=_lit(body)))
        items.append({"title": _lit(tab_title),
                      "child": PropValue("child", lid)})
    comps.append(ComponentInstance("tabs", "Tabs",
                                   {"tabItems": PropValue("items", items)}))
    comps.append(_comp("card", "Card", child=PropValue("child", "tabs")))
    return _scaffold_response(sid, "card", comps, "Here it is, organized.")


def _modal_sample(rng: random.Random, sid: str) -> AssistantResponse:
    comps = [
        _comp("open_label", "Label", text=_lit("View full details")),
        _comp("detail_text", "MarkdownView",
              text=_lit("**Itinerary**\n\n1. Check in\n2. Dinner\n3. Show")),
        _comp("modal", "FullScreenModal",
              entryPointChild=PropValue("child", "open_label"),
              contentChild=PropValue("child", "detail_text")),
        _comp("card", "Card", child=PropValue("child", "modal")),
    ]
    return _scaffold_response(sid, "card", comps,
                              "Tap through for the full details.")


def _icon_sample(rng: random.Random, sid: str) -> AssistantResponse:
    picks = rng.sample(["calendar-thirty", "home", "search", "star",
                        "camera", "book"], 2)
    comps = []
    children = []
    for i, icon in enumerate(picks):
        comps.append(_comp(f"ic_{i}", "Icon", name=_lit(icon),
                           style=_lit("line")))
        comps.append(_comp(f"ic_lbl_{i}", "Label",
                           text=_lit(icon.replace("-", " ").capitalize())))
        children += [f"ic_{i}", f"ic_lbl_{i}"]
    comps.append(_comp("col", "Column", children=children, spacing=_num(4)))
    comps.append(_comp("card", "Card", child=PropValue("child", "col")))
    return _scaffold_response(sid, "card", comps, "Here's what I found.")


def _image_sample(rng: random.Random, sid: str) -> AssistantResponse:
    n = rng.randrange(1000)
    comps = [
        _comp("photo", "Image",
              url=_lit(f"https://img.example/view_{n}.png"),
              size=_lit("full"), alt=_lit("Preview of the venue")),
        _comp("caption", "Label", text=_lit("The venue from the street.")),
        _comp("col", "Column", children=["photo", "caption"], spacing=_num(4)),
        _comp("card", "Card", child=PropValue("child", "col")),
    ]
    return _scaffold_response(sid, "card", comps, "Here's a preview.")


_DISPLAY_BUILDERS: dict[str, Callable[[random.Random, str], AssistantResponse]] = {
    "Tabs": _tabs_sample,
    "FullScreenModal": _modal_sample,
    "Icon": _icon_sample,
    "Image": _image_sample,
}


def _target_components(target: str) -> set[str]:
    resp = json.loads(target)
    out: set[str] = set()
    for m in resp.get("a2ui", []):
        for item in m.get("surfaceUpdate", {}).get("components", []):
            out.update((item.get("component") or {}).keys())
    return out


def component_sample_counts(samples: list[Sample]) -> dict[str, int]:
    """How many samples contain at least one component of each type."""
    counts: dict[str, int] = {}
    for s in samples:
        if not s.is_ui_turn:
            continue
        for type_name in _target_components(s.target):
            counts[type_name] = counts.get(type_name, 0) + 1
    return counts


def augment(samples: list[Sample], quotas: dict[str, int], *, seed: int,
            catalog: Catalog | None = None) -> list[Sample]:
    """Synthesize UI samples until each component quota is met.

    Returns only the additions. Quota keys without a template pool are left
    unmet (source material exhausted); met quotas are a no-op.
    """
    catalog = catalog or load_catalog()
    rng = random.Random(seed)
    added: list[Sample] = []
    for type_name in sorted(quotas):
        have = component_sample_counts(samples + added).get(type_name, 0)
        pool = _AUG_ACTIONS.get(type_name)
        builder = _DISPLAY_BUILDERS.get(type_name)
        if pool is None and builder is None:
            continue
        for n in range(max(0, quotas[type_name] - have)):
            dialogue_id = f"aug_{type_name.lower()}_{n:04d}"
            user_line = rng.choice(_AUG_USER_LINES)
            if pool is not None:
                action = dict(rng.choice(pool))
                gen = generate_turn(dialogue_id, action, "new",
                                    text_response="Here you go.",
                                    catalog=catalog)
                resp, kind = gen.response, gen.action_kind
            else:
                sid = f"surf_{dialogue_id}"
                resp = builder(rng, sid)
                _validated(resp, sid, "present_options", "new", catalog,
                           frozenset())
                kind = "present_options"
            added.append(Sample(
                dialogue_id, "synthetic", 1, True, "augmented",
                classify_archetype(resp), kind, "new",
                [{"speaker": "user", "text": user_line}],
                serialize_response(resp)))
    return added


def corpus_stats(samples: list[Sample]) -> dict[str, Any]:
    total = len(samples)
    ui = sum(1 for s in samples if s.is_ui_turn)
    augmented = sum(1 for s in samples if s.provenance == "augmented")
    per_source: dict[str, dict[str, int]] = {}
    for s in samples:
        bucket = per_source.setdefault(s.source,
                                       {"total": 0, "ui": 0, "text": 0})
        bucket["total"] += 1
        bucket["ui" if s.is_ui_turn else "text"] += 1
    histogram: dict[str, int] = {}
    for s in samples:
        if not s.is_ui_turn:
            continue
        resp = json.loads(s.target)
        for m in resp.get("a2ui", []):
            for item in m.get("surfaceUpdate", {}).get("components", []):
                for type_name in (item.get("component") or {}):
                    histogram[type_name] = histogram.get(type_name, 0) + 1
    archetypes: dict[str, int] = {}
    action_kinds: dict[str, int] = {}
    for s in samples:
        archetypes[s.archetype] = archetypes.get(s.archetype, 0) + 1
        if s.action_kind:
            action_kinds[s.action_kind] = action_kinds.get(s.action_kind, 0) + 1
    return {
        "total": total,
        "ui": ui,
        "text": total - ui,
        "ui_ratio": ui / total if total else 0.0,
        "augmented": augmented,
        "augmented_share": augmented / total if total else 0.0,
        "per_source": {k: per_source[k] for k in sorted(per_source)},
        "component_histogram": {k: histogram[k] for k in sorted(histogram)},
        "archetypes": {k: archetypes[k] for k in sorted(archetypes)},
        "action_kinds": {k: action_kinds[k] for k in sorted(action_kinds)},
    }


def write_samples(samples: list[Sample], path: str | Path) -> None:
    with Path(path).open("w") as fh:
        for s in samples:
            fh.write(json.dumps(s.to_json(), ensure_ascii=False) + "\n")


def read_samples(path: str | Path) -> list[Sample]:
    out = []
    for line in Path(path).read_text().splitlines():
        if line.strip():
            out.append(Sample.from_json(json.loads(line)))
    return out
