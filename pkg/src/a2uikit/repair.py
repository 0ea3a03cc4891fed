"""Deterministic repair of mechanical payload defects, plus the
generate / lint / feedback retry driver.

Repair fixes only what has exactly one correct answer:

  enum_normalize   -- casefold/underscore cleanup of enum strings, plus an
                      explicit icon alias table (never fuzzy matching)
  binding_type_fix -- string literals and valueString writes that encode a
                      number or boolean for a typed binding
  field_complete   -- required fields with a schema default, and the array
                      default on path-bound selections
  layout_constraint -- wrap a TickSlider that sits directly under a Row in
                      a single-child Column

Repair is idempotent: a second pass over repaired output produces no
actions. Anything judgment-shaped (unknown components, dangling refs,
missing text) is left for the retry loop, where lint output is fed back to
the generator verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any, Callable

from a2uikit.catalog import Catalog, load_catalog
from a2uikit.lint import LintReport, join_path, lint_text
from a2uikit.protocol import (
    AssistantResponse,
    ComponentInstance,
    DataEntry,
    DataModelUpdate,
    FormatError,
    Message,
    PropValue,
    SurfaceUpdate,
    parse_response,
    serialize_response,
)

REPAIR_KINDS = ("enum_normalize", "binding_type_fix", "field_complete",
                "layout_constraint")

# Common off-registry icon names with one obvious registered equivalent.
# Extend deliberately; repair must never guess.
ICON_ALIASES: dict[str, str] = {
    "clock": "time",
    "heart": "like",
    "check": "success",
    "checkmark": "success",
    "settings": "setting-three",
    "gear": "setting-three",
    "menu": "hamburger-button",
    "thumbsup": "thumbs-up",
    "thumbsdown": "thumbs-down",
    "calendar": "calendar-thirty",
    "timer": "stopwatch",
    "flame": "fire",
    "bolt": "lightning",
    "shield": "protection",
    "phone": "phone-telephone",
    "mail": "mail-open",
    "photo": "pic-one",
    "picture": "pic-one",
    "location": "local-two",
    "pin": "local-two",
    "shopping-bag": "shopping-bag-one",
    "cart": "shopping-bag-one",
    "book-opened": "book-open",
    "note": "notes",
    "reload": "refresh",
    "back": "arrow-left",
    "forward": "arrow-right",
}


@dataclass(frozen=True)
class RepairAction:
    kind: str
    location: str
    before: str
    after: str


@dataclass
class RepairResult:
    response: AssistantResponse
    actions: list[RepairAction] = field(default_factory=list)

    @property
    def changed(self) -> bool:
        return bool(self.actions)


def _as_number(text: str) -> int | float | None:
    s = text.strip()
    if not s:
        return None
    try:
        return int(s)
    except ValueError:
        pass
    try:
        return float(s)
    except ValueError:
        return None


def _as_boolean(text: str) -> bool | None:
    s = text.strip().casefold()
    if s == "true":
        return True
    if s == "false":
        return False
    return None


class _Repairer:
    def __init__(self, resp: AssistantResponse, catalog: Catalog):
        self.resp = resp
        self.catalog = catalog
        self.actions: list[RepairAction] = []
        # absolute binding path -> expected scalar type, per surface
        self.path_types: dict[tuple[str | None, str], str] = {}
        # ids in use per surface (wrapper id dedupe)
        self.ids: dict[str | None, set[str]] = {}
        # slider id -> wrapper id, per surface
        self.wrappers: dict[tuple[str | None, str], str] = {}

    def note(self, kind: str, location: str, before: Any, after: Any) -> None:
        self.actions.append(RepairAction(kind, location, repr(before), repr(after)))

    def run(self) -> AssistantResponse:
        self.scan()
        msgs = [self.fix_message(i, m) for i, m in enumerate(self.resp.a2ui)]
        msgs = [self.wrap_sliders(i, m) for i, m in enumerate(msgs)]
        return replace(self.resp, a2ui=msgs)

    # -- pass 0: read-only scan for cross-message facts ----------------------

    def scan(self) -> None:
        for m in self.resp.a2ui:
            if not isinstance(m.body, SurfaceUpdate):
                continue
            sid = m.body.surface_id
            for c in m.body.components:
                if c.id is not None:
                    self.ids.setdefault(sid, set()).add(c.id)
                schema = self.catalog.get(c.type_name) if c.type_name else None
                if schema is None:
                    continue
                for name, pv in c.props.items():
                    spec = schema.fields.get(name)
                    if spec is None or spec.kind != "value" or not spec.value_type:
                        continue
                    p = pv.path()
                    if p and p.startswith("/"):
                        self.path_types[(sid, p)] = spec.value_type

    # -- passes 1-3: per-message rewrites ------------------------------------

    def fix_message(self, i: int, m: Message) -> Message:
        if isinstance(m.body, SurfaceUpdate):
            comps = [self.fix_component(i, j, c)
                     for j, c in enumerate(m.body.components)]
            return replace(m, body=replace(m.body, components=comps))
        if isinstance(m.body, DataModelUpdate):
            entries = [self.fix_entry(i, j, m.body, e)
                       for j, e in enumerate(m.body.contents)]
            return replace(m, body=replace(m.body, contents=entries))
        return m

    def fix_component(self, i: int, j: int, c: ComponentInstance
                      ) -> ComponentInstance:
        schema = self.catalog.get(c.type_name) if c.type_name else None
        if schema is None:
            return c
        base = f"/a2ui/{i}/surfaceUpdate/components/{j}/component/{c.type_name}"
        props = dict(c.props)

        for name, spec in schema.fields.items():
            loc = f"{base}/{name}"
            pv = props.get(name)

            if spec.kind == "enum" and pv is not None and pv.kind == "string":
                fixed = self.normalize_enum(c.type_name, spec, pv.value)
                if fixed is not None and fixed != pv.value:
                    self.note("enum_normalize", loc, pv.value, fixed)
                    props[name] = replace(pv, value=fixed)

            if spec.kind == "value" and spec.value_type in ("number", "boolean") \
                    and pv is not None:
                coerced = self.coerce_value(spec.value_type, pv, loc)
                if coerced is not None:
                    props[name] = coerced

            if spec.kind == "selection" and pv is not None and pv.kind == "path":
                self.note("field_complete", loc,
                          {"path": pv.value},
                          {"path": pv.value, "literalArray": []})
                props[name] = PropValue("bound", {
                    "path": pv.value, "literal_key": "literalArray",
                    "literal": []})

            if spec.required and spec.default is not None and name not in props:
                self.note("field_complete", loc, None, spec.default)
                props[name] = PropValue("string", spec.default)

        if props != c.props:
            return replace(c, props=props)
        return c

    def normalize_enum(self, type_name: str | None, spec, value: str) -> str | None:
        allowed = self.catalog.enum_values_for(spec)
        if value in allowed:
            return None
        cleaned = value.strip().casefold().replace("_", "-").replace(" ", "-")
        if cleaned in allowed:
            return cleaned
        # enum values are camelCase for non-icon fields; try case-insensitive
        for v in allowed:
            if cleaned == v.casefold():
                return v
        if spec.enum_ref == "icons":
            alias = ICON_ALIASES.get(cleaned)
            if alias in allowed:
                return alias
        return None

    def coerce_value(self, want: str, pv: PropValue, loc: str) -> PropValue | None:
        if pv.kind == "string":
            out = _as_number(pv.value) if want == "number" else _as_boolean(pv.value)
            if out is not None:
                self.note("binding_type_fix", loc, pv.value, out)
                return PropValue("number" if want == "number" else "boolean",
                                 out, wrapped=pv.wrapped)
        if pv.kind == "bound" and pv.value["literal_key"] == "literalString" \
                and isinstance(pv.value["literal"], str):
            lit = pv.value["literal"]
            out = _as_number(lit) if want == "number" else _as_boolean(lit)
            if out is not None:
                key = "literalNumber" if want == "number" else "literalBoolean"
                self.note("binding_type_fix", loc, lit, out)
                return PropValue("bound", {"path": pv.value["path"],
                                           "literal_key": key, "literal": out})
        return None

    def fix_entry(self, i: int, j: int, body: DataModelUpdate, e: DataEntry
                  ) -> DataEntry:
        if e.key is None or e.value_kind != "string" or not isinstance(e.value, str):
            return e
        want = self.path_types.get((body.surface_id, join_path(body.path, e.key)))
        if want == "number":
            out = _as_number(e.value)
            if out is not None:
                self.note("binding_type_fix",
                          f"/a2ui/{i}/dataModelUpdate/contents/{j}", e.value, out)
                return replace(e, value_kind="number", value=out)
        if want == "boolean":
            out = _as_boolean(e.value)
            if out is not None:
                self.note("binding_type_fix",
                          f"/a2ui/{i}/dataModelUpdate/contents/{j}", e.value, out)
                return replace(e, value_kind="boolean", value=out)
        return e

    # -- pass 4: layout constraint -------------------------------------------

    def wrap_sliders(self, i: int, m: Message) -> Message:
        if not isinstance(m.body, SurfaceUpdate):
            return m
        sid = m.body.surface_id
        type_of = {c.id: c.type_name for msg in self.resp.a2ui
                   if isinstance(msg.body, SurfaceUpdate)
                   and msg.body.surface_id == sid
                   for c in msg.body.components if c.id}

        new_comps = list(m.body.components)
        appended: list[ComponentInstance] = []
        changed = False
        for j, c in enumerate(new_comps):
            if c.type_name != "Row":
                continue
            children = c.props.get("children")
            if children is None or children.kind != "children":
                continue
            refs = list(children.value)
            for k, ref in enumerate(refs):
                if type_of.get(ref) != "TickSlider":
                    continue
                wrap_id = self.wrapper_id(sid, ref)
                loc = (f"/a2ui/{i}/surfaceUpdate/components/{j}"
                       f"/component/Row/children/{k}")
                self.note("layout_constraint", loc, ref, wrap_id)
                refs[k] = wrap_id
                if all(a.id != wrap_id for a in appended):
                    appended.append(ComponentInstance(
                        id=wrap_id, type_name="Column",
                        props={"children": PropValue("children", [ref])}))
                changed = True
            if changed:
                props = dict(c.props)
                props["children"] = PropValue("children", refs)
                new_comps[j] = replace(c, props=props)
        if not changed:
            return m
        return replace(m, body=replace(m.body, components=new_comps + appended))

    def wrapper_id(self, sid: str | None, slider_id: str) -> str:
        key = (sid, slider_id)
        if key in self.wrappers:
            return self.wrappers[key]
        used = self.ids.setdefault(sid, set())
        base = f"{slider_id}_wrap"
        candidate = base
        n = 2
        while candidate in used:
            candidate = f"{base}{n}"
            n += 1
        used.add(candidate)
        self.wrappers[key] = candidate
        return candidate


def repair_response(resp: AssistantResponse, *,
                    catalog: Catalog | None = None) -> RepairResult:
    repairer = _Repairer(resp, catalog or load_catalog())
    fixed = repairer.run()
    return RepairResult(response=fixed, actions=repairer.actions)


# ---------------------------------------------------------------------------
# Retry driver

FEEDBACK_PREFIX = "Previous attempt failed validation:"

Generator = Callable[[list[dict[str, Any]]], str]


@dataclass
class RetryOutcome:
    attempts: int
    ok: bool
    raw_outputs: list[str]
    reports: list[LintReport]

    @property
    def final(self) -> LintReport:
        return self.reports[-1]

    @property
    def response(self) -> AssistantResponse | None:
        return self.final.response


def run_with_retry(generate: Generator, messages: list[dict[str, Any]], *,
                   max_attempts: int = 3,
                   catalog: Catalog | None = None,
                   known_surfaces: frozenset[str] | set[str] = frozenset(),
                   repair_first: bool = False) -> RetryOutcome:
    """Generate until lint reports no errors, feeding failures back.

    Each failed attempt is appended to the conversation as the assistant
    turn, followed by a user turn carrying the compact lint report. A
    GeneratorUnavailable from ``generate`` propagates to the caller.
    """
    catalog = catalog or load_catalog()
    convo = [dict(m) for m in messages]
    raw_outputs: list[str] = []
    reports: list[LintReport] = []
    for attempt in range(1, max_attempts + 1):
        raw = generate(convo)
        raw_outputs.append(raw)
        if repair_first:
            try:
                fixed = repair_response(parse_response(raw), catalog=catalog)
                raw = serialize_response(fixed.response)
            except FormatError:
                pass  # unparsable: lint will report it
        report = lint_text(raw, catalog=catalog, known_surfaces=known_surfaces)
        reports.append(report)
        if not report.has_errors and report.parse_ok:
            return RetryOutcome(attempt, True, raw_outputs, reports)
        convo.append({"role": "assistant", "content": raw_outputs[-1]})
        convo.append({"role": "user",
                      "content": f"{FEEDBACK_PREFIX}\n{report.compact()}"})
    return RetryOutcome(max_attempts, False, raw_outputs, reports)
