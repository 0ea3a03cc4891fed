"""Four-level lint pipeline over assistant responses.

Levels run in order and each produces issues tagged error or warning:

  format     -- payload is valid JSON of the required envelope shape
  structure  -- action keys, component types, ids, required fields, enums
  binding    -- path grammar, child references, data-model write consistency
  semantic   -- root definition, submit affordance, surface discipline

A format failure ends the pipeline (nothing else is checkable); all later
levels run on any parsed response, errors or not.

Each issue carries a stable code from LINT_CODES, a slash-pointer location
into the payload, and a one-line message. ``LintReport.compact()`` renders
the machine-feedback form used for generate/lint/retry loops:

    LEVEL SEVERITY CODE location message
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from a2uikit.catalog import Catalog, FieldSpec, load_catalog
from a2uikit.protocol import (
    AssistantResponse,
    BeginRendering,
    ComponentInstance,
    DataModelUpdate,
    FormatError,
    PropValue,
    ShapeError,
    SurfaceUpdate,
    parse_response,
)

LINT_REGISTRY_VERSION = 1

# code -> (level, severity, category)
LINT_CODES: dict[str, tuple[str, str, str]] = {
    "FORMAT_PARSE": ("format", "error", "parse"),
    "FORMAT_SHAPE": ("format", "error", "parse"),
    "STRUCT_ACTION_KEYS": ("structure", "error", "structure"),
    "STRUCT_UNKNOWN_COMPONENT": ("structure", "error", "structure"),
    "STRUCT_DUPLICATE_ID": ("structure", "error", "structure"),
    "STRUCT_REQUIRED": ("structure", "error", "required-field"),
    "STRUCT_ENUM": ("structure", "error", "value-format"),
    "STRUCT_UNKNOWN_PROP": ("structure", "warning", "structure"),
    "STRUCT_OPAQUE_VALUE": ("structure", "warning", "structure"),
    "STRUCT_VALUE_TYPE": ("structure", "warning", "value-format"),
    "BIND_PATH_SYNTAX": ("binding", "error", "value-format"),
    "BIND_DANGLING_REF": ("binding", "error", "reference"),
    "BIND_TYPE": ("binding", "error", "value-format"),
    "BIND_UNWRITTEN": ("binding", "warning", "reference"),
    "BIND_SELECTION_PREWRITTEN": ("binding", "warning", "structure"),
    "SEM_ROOT_UNDEFINED": ("semantic", "error", "reference"),
    "SEM_NO_SUBMIT": ("semantic", "warning", "structure"),
    "SEM_MULTI_SURFACE": ("semantic", "warning", "structure"),
    "SEM_EMPTY_VALUE": ("semantic", "warning", "value-format"),
    "SEM_UNBEGUN_SURFACE": ("semantic", "warning", "structure"),
}

LEVELS = ("format", "structure", "binding", "semantic")

# "/" alone addresses the model root; otherwise slash-separated word segments,
# optionally absolute. Relative paths are legal (template item scope).
_PATH_RE = re.compile(r"^(/|/?[A-Za-z0-9_.-]+(?:/[A-Za-z0-9_.-]+)*)$")

_WIRE_LITERAL_KINDS = {
    "literalString": "string",
    "literalNumber": "number",
    "literalBoolean": "boolean",
    "literalArray": "array",
}


@dataclass(frozen=True)
class LintIssue:
    code: str
    location: str
    message: str

    @property
    def level(self) -> str:
        return LINT_CODES[self.code][0]

    @property
    def severity(self) -> str:
        return LINT_CODES[self.code][1]

    @property
    def category(self) -> str:
        return LINT_CODES[self.code][2]

    def compact(self) -> str:
        return f"{self.level} {self.severity} {self.code} {self.location} {self.message}"


@dataclass
class LintReport:
    issues: list[LintIssue] = field(default_factory=list)
    parse_ok: bool = False
    response: AssistantResponse | None = None

    def errors(self) -> list[LintIssue]:
        return [i for i in self.issues if i.severity == "error"]

    def warnings(self) -> list[LintIssue]:
        return [i for i in self.issues if i.severity == "warning"]

    @property
    def has_errors(self) -> bool:
        return any(i.severity == "error" for i in self.issues)

    @property
    def is_clean(self) -> bool:
        return not self.issues

    def codes(self) -> list[str]:
        return [i.code for i in self.issues]

    def warning_counts_by_category(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for i in self.warnings():
            out[i.category] = out.get(i.category, 0) + 1
        return out

    def compact(self) -> str:
        if not self.issues:
            return "no issues"
        return "\n".join(i.compact() for i in self.issues)


def valid_path(p: str) -> bool:
    return bool(_PATH_RE.match(p))


def join_path(prefix: str | None, key: str) -> str:
    """Absolute data-model path for a write of ``key`` under ``prefix``."""
    if key.startswith("/"):
        return key
    base = prefix if prefix not in (None, "", "/") else ""
    return f"{base}/{key}"


@dataclass
class _Binding:
    surface_id: str | None
    path: str
    location: str
    value_type: str | None      # expected scalar type, None = untyped/subtree
    role: str
    client_writable: bool
    is_selection: bool
    has_literal: bool           # bound form carries a literal fallback


@dataclass
class _Write:
    surface_id: str | None
    path: str
    location: str
    value_kind: str | None
    value: object


class _Linter:
    def __init__(self, resp: AssistantResponse, catalog: Catalog,
                 known_surfaces: frozenset[str]):
        self.resp = resp
        self.catalog = catalog
        self.known_surfaces = known_surfaces
        self.issues: list[LintIssue] = []
        self.bindings: list[_Binding] = []
        self.writes: list[_Write] = []
        # surface id -> component id -> first definition location
        self.defined: dict[str | None, dict[str, str]] = {}
        # (surface id, ref id, ref location)
        self.refs: list[tuple[str | None, str, str]] = []

    def add(self, code: str, location: str, message: str) -> None:
        self.issues.append(LintIssue(code, location, message))

    # -- structure ----------------------------------------------------------

    def run(self) -> list[LintIssue]:
        for i, m in enumerate(self.resp.a2ui):
            loc = f"/a2ui/{i}"
            extra_actions = m.extra_action_keys()
            if m.kind is None:
                self.add("STRUCT_ACTION_KEYS", loc,
                         "message carries no action key "
                         "(expected exactly one of beginRendering, surfaceUpdate, "
                         "dataModelUpdate, deleteSurface)")
                continue
            if extra_actions:
                found = ", ".join([m.kind, *extra_actions])
                self.add("STRUCT_ACTION_KEYS", loc,
                         f"message carries {1 + len(extra_actions)} action keys "
                         f"({found}); exactly one is allowed")
            body = m.body
            if body.surface_id is None:
                self.add("STRUCT_REQUIRED", f"{loc}/{m.kind}",
                         "missing required field 'surfaceId'")
            if isinstance(body, BeginRendering) and body.root is None:
                self.add("STRUCT_REQUIRED", f"{loc}/{m.kind}",
                         "missing required field 'root'")
            if isinstance(body, SurfaceUpdate):
                for j, comp in enumerate(body.components):
                    self.check_component(i, j, comp, body.surface_id)
            if isinstance(body, DataModelUpdate):
                self.collect_writes(i, body)

        self.check_bindings()
        self.check_semantics()
        return self.issues

    def check_component(self, i: int, j: int, comp: ComponentInstance,
                        sid: str | None) -> None:
        base = f"/a2ui/{i}/surfaceUpdate/components/{j}"
        if comp.id is None:
            self.add("STRUCT_REQUIRED", base, "component item missing 'id'")
        else:
            table = self.defined.setdefault(sid, {})
            if comp.id in table:
                self.add("STRUCT_DUPLICATE_ID", base,
                         f"component id '{comp.id}' already defined at {table[comp.id]}")
            else:
                table[comp.id] = base

        if comp.type_name is None:
            self.add("STRUCT_UNKNOWN_COMPONENT", base,
                     "component item has no component type")
            return
        schema = self.catalog.get(comp.type_name)
        if schema is None:
            self.add("STRUCT_UNKNOWN_COMPONENT", base,
                     f"unknown component type '{comp.type_name}'")
            return

        ploc = f"{base}/component/{comp.type_name}"
        for spec in schema.required_fields():
            if spec.name not in comp.props:
                self.add("STRUCT_REQUIRED", ploc,
                         f"missing required field '{spec.name}'")
        if schema.requires_one_of and not any(
            n in comp.props for n in schema.requires_one_of
        ):
            self.add("STRUCT_REQUIRED", ploc,
                     "requires one of: " + ", ".join(schema.requires_one_of))

        for name, pv in comp.props.items():
            spec = schema.fields.get(name)
            floc = f"{ploc}/{name}"
            if spec is None:
                if schema.additional_props == "warn":
                    self.add("STRUCT_UNKNOWN_PROP", floc,
                             f"'{comp.type_name}' has no property '{name}'")
                continue
            self.check_field(sid, schema.role, spec, pv, floc)

    def check_field(self, sid: str | None, role: str, spec: FieldSpec,
                    pv: PropValue, loc: str) -> None:
        if pv.kind == "opaque":
            self.add("STRUCT_OPAQUE_VALUE", loc,
                     "value could not be classified; check its shape")
            return

        if spec.kind == "value":
            self.check_value(sid, role, spec, pv, loc)
        elif spec.kind == "enum":
            self.check_enum(spec, pv, loc)
        elif spec.kind == "child":
            if pv.kind == "child":
                self.refs.append((sid, pv.value, loc))
            else:
                self.add("STRUCT_VALUE_TYPE", loc,
                         f"expected a component id string, got {pv.kind}")
        elif spec.kind == "children":
            if pv.kind == "children":
                for k, ref in enumerate(pv.value):
                    self.refs.append((sid, ref, f"{loc}/{k}"))
            else:
                self.add("STRUCT_VALUE_TYPE", loc,
                         f"expected an array of component id strings, got {pv.kind}")
        elif spec.kind == "action":
            if pv.kind != "action":
                self.add("STRUCT_VALUE_TYPE", loc,
                         f"expected an action object, got {pv.kind}")
            elif pv.value.name is None:
                self.add("STRUCT_REQUIRED", loc, "action is missing 'name'")
        elif spec.kind == "selection":
            self.check_selection(sid, role, pv, loc)
        elif spec.kind == "items":
            self.check_items(sid, spec, pv, loc)
        elif spec.kind == "template":
            self.check_template(sid, pv, loc)

    def check_value(self, sid: str | None, role: str, spec: FieldSpec,
                    pv: PropValue, loc: str) -> None:
        if pv.kind == "path":
            self.bindings.append(_Binding(
                sid, pv.value, loc, spec.value_type, role,
                spec.client_writable, False, False))
            return
        if pv.kind == "bound":
            literal_kind = _WIRE_LITERAL_KINDS.get(pv.value["literal_key"])
            if literal_kind != spec.value_type:
                self.add("STRUCT_VALUE_TYPE", loc,
                         f"expected {spec.value_type} literal alongside path, "
                         f"got {pv.value['literal_key']}")
            self.bindings.append(_Binding(
                sid, pv.value["path"], loc, spec.value_type, role,
                spec.client_writable, False, True))
            return
        if pv.kind in ("string", "number", "boolean", "array"):
            if pv.kind != spec.value_type:
                self.add("STRUCT_VALUE_TYPE", loc,
                         f"expected {spec.value_type}, got {pv.kind}")
            return
        self.add("STRUCT_VALUE_TYPE", loc,
                 f"expected {spec.value_type}, got {pv.kind}")

    def check_enum(self, spec: FieldSpec, pv: PropValue, loc: str) -> None:
        if pv.kind == "string":
            allowed = self.catalog.enum_values_for(spec)
            if pv.value not in allowed:
                shown = ", ".join(allowed[:6]) + (", ..." if len(allowed) > 6 else "")
                self.add("STRUCT_ENUM", loc,
                         f"'{pv.value}' is not one of: {shown}")
        elif pv.kind in ("path", "bound"):
            self.add("STRUCT_VALUE_TYPE", loc,
                     "enum fields take a literal string, not a data binding")
        else:
            self.add("STRUCT_VALUE_TYPE", loc,
                     f"expected an enum string, got {pv.kind}")

    def check_selection(self, sid: str | None, role: str, pv: PropValue,
                        loc: str) -> None:
        if pv.kind == "bound":
            if pv.value["literal_key"] != "literalArray":
                self.add("STRUCT_VALUE_TYPE", loc,
                         "selection default must be a literalArray")
            self.bindings.append(_Binding(
                sid, pv.value["path"], loc, None, role, True, True, True))
        elif pv.kind == "path":
            self.bindings.append(_Binding(
                sid, pv.value, loc, None, role, True, True, False))
        elif pv.kind == "array":
            self.add("STRUCT_VALUE_TYPE", loc,
                     "selection should bind a path so choices can be captured")
        else:
            self.add("STRUCT_VALUE_TYPE", loc,
                     f"expected a selection binding, got {pv.kind}")

    def check_items(self, sid: str | None, spec: FieldSpec, pv: PropValue,
                    loc: str) -> None:
        if pv.kind != "items":
            self.add("STRUCT_VALUE_TYPE", loc,
                     f"expected an array of option objects, got {pv.kind}")
            return
        item_fields = spec.item_fields or {}
        for idx, item in enumerate(pv.value):
            iloc = f"{loc}/{idx}"
            for sub in item_fields.values():
                if sub.required and sub.name not in item:
                    self.add("STRUCT_REQUIRED", iloc,
                             f"item missing required field '{sub.name}'")
            for name, sub_pv in item.items():
                sub = item_fields.get(name)
                if sub is None:
                    continue  # extra item keys are tolerated
                sloc = f"{iloc}/{name}"
                if sub.kind == "child":
                    if sub_pv.kind == "child":
                        self.refs.append((sid, sub_pv.value, sloc))
                    else:
                        self.add("STRUCT_VALUE_TYPE", sloc,
                                 f"expected a component id string, got {sub_pv.kind}")
                elif sub_pv.kind == "opaque":
                    self.add("STRUCT_OPAQUE_VALUE", sloc,
                             "value could not be classified; check its shape")
                elif sub_pv.kind in ("string", "number", "boolean"):
                    if sub_pv.kind != sub.value_type:
                        self.add("STRUCT_VALUE_TYPE", sloc,
                                 f"expected {sub.value_type}, got {sub_pv.kind}")
                elif sub_pv.kind in ("path", "bound"):
                    pass  # option labels may bind; resolved client-side
                else:
                    self.add("STRUCT_VALUE_TYPE", sloc,
                             f"expected {sub.value_type}, got {sub_pv.kind}")

    def check_template(self, sid: str | None, pv: PropValue, loc: str) -> None:
        if pv.kind != "nested":
            self.add("STRUCT_VALUE_TYPE", loc,
                     f"expected a template object, got {pv.kind}")
            return
        sub = pv.value
        data_path = sub.get("dataPath")
        child = sub.get("child")
        if data_path is None or child is None:
            missing = [k for k in ("dataPath", "child") if k not in sub]
            self.add("STRUCT_REQUIRED", loc,
                     "template missing required field(s): " + ", ".join(missing))
        if data_path is not None:
            if data_path.kind == "string":
                self.bindings.append(_Binding(
                    sid, data_path.value, f"{loc}/dataPath", None,
                    "layout", False, False, False))
            elif data_path.kind == "path":
                self.bindings.append(_Binding(
                    sid, data_path.value, f"{loc}/dataPath", None,
                    "layout", False, False, False))
            else:
                self.add("STRUCT_VALUE_TYPE", f"{loc}/dataPath",
                         f"expected a data path string, got {data_path.kind}")
        if child is not None:
            if child.kind == "child":
                self.refs.append((sid, child.value, f"{loc}/child"))
            else:
                self.add("STRUCT_VALUE_TYPE", f"{loc}/child",
                         f"expected a component id string, got {child.kind}")

    # -- binding ------------------------------------------------------------

    def collect_writes(self, i: int, body: DataModelUpdate) -> None:
        loc = f"/a2ui/{i}/dataModelUpdate"
        prefix = body.path
        prefix_ok = True
        if prefix is not None and not valid_path(prefix):
            self.add("BIND_PATH_SYNTAX", f"{loc}/path",
                     f"invalid data path '{prefix}'")
            prefix_ok = False
        for j, entry in enumerate(body.contents):
            eloc = f"{loc}/contents/{j}"
            if entry.key is None:
                self.add("STRUCT_REQUIRED", eloc, "entry missing 'key'")
                continue
            if entry.value_kind is None:
                self.add("STRUCT_REQUIRED", eloc,
                         "entry missing a value (valueString, valueNumber, "
                         "or valueBoolean)")
                continue
            if not prefix_ok:
                continue
            path = join_path(prefix, entry.key)
            if not valid_path(path):
                self.add("BIND_PATH_SYNTAX", eloc,
                         f"invalid data path '{path}'")
                continue
            self.writes.append(_Write(body.surface_id, path, eloc,
                                      entry.value_kind, entry.value))

    def check_bindings(self) -> None:
        # Written-path index per surface: exact paths and subtree prefixes.
        written: dict[str | None, dict[str, _Write]] = {}
        for w in self.writes:
            written.setdefault(w.surface_id, {})[w.path] = w

        def lookup(sid: str | None, path: str) -> tuple[_Write | None, bool]:
            table = written.get(sid, {})
            if path in table:
                return table[path], True
            subtree = any(p.startswith(path.rstrip("/") + "/") for p in table)
            return None, subtree

        for b in self.bindings:
            if not valid_path(b.path):
                self.add("BIND_PATH_SYNTAX", b.location,
                         f"invalid data path '{b.path}'")
                continue
            if not b.path.startswith("/"):
                continue  # relative: resolved per template item, not checkable here
            write, written_under = lookup(b.surface_id, b.path)
            if b.is_selection:
                if write is not None:
                    self.add("BIND_SELECTION_PREWRITTEN", write.location,
                             f"'{b.path}' is selection state owned by the client; "
                             "do not prewrite it")
                continue
            if write is not None:
                if b.value_type is not None and write.value_kind != b.value_type:
                    self.add("BIND_TYPE", write.location,
                             f"'{b.path}' is bound as {b.value_type} but written "
                             f"as {write.value_kind}")
                continue
            if written_under or b.client_writable or b.has_literal:
                continue
            self.add("BIND_UNWRITTEN", b.location,
                     f"'{b.path}' is never written by a dataModelUpdate")

        for sid, ref, loc in self.refs:
            if ref not in self.defined.get(sid, {}):
                self.add("BIND_DANGLING_REF", loc,
                         f"unknown component id '{ref}'")

    # -- semantic -----------------------------------------------------------

    def check_semantics(self) -> None:
        begun: dict[str, int] = {}
        for i, m in enumerate(self.resp.a2ui):
            if isinstance(m.body, BeginRendering) and m.surface_id:
                begun.setdefault(m.surface_id, i)

        for i, m in enumerate(self.resp.a2ui):
            if isinstance(m.body, BeginRendering) and m.body.root is not None:
                if m.body.root not in self.defined.get(m.surface_id, {}):
                    self.add("SEM_ROOT_UNDEFINED", f"/a2ui/{i}/beginRendering/root",
                             f"root component '{m.body.root}' is never defined "
                             "on this surface")

        surfaces = self.resp.surface_ids()
        if len(surfaces) > 1:
            second = next(i for i, m in enumerate(self.resp.a2ui)
                          if m.surface_id == surfaces[1])
            self.add("SEM_MULTI_SURFACE", f"/a2ui/{second}",
                     "response touches multiple surfaces ("
                     + ", ".join(surfaces) + "); one surface per response")

        flagged_unbegun: set[str] = set()
        for i, m in enumerate(self.resp.a2ui):
            if not isinstance(m.body, (SurfaceUpdate, DataModelUpdate)):
                continue
            sid = m.surface_id
            if sid is None or sid in begun or sid in self.known_surfaces:
                continue
            if sid not in flagged_unbegun:
                flagged_unbegun.add(sid)
                self.add("SEM_UNBEGUN_SURFACE", f"/a2ui/{i}",
                         f"surface '{sid}' is updated but never begun")

        # submit affordance, per surface
        per_surface: dict[str | None, list[tuple[int, int, ComponentInstance]]] = {}
        for i, m in enumerate(self.resp.a2ui):
            if isinstance(m.body, SurfaceUpdate):
                for j, c in enumerate(m.body.components):
                    per_surface.setdefault(m.surface_id, []).append((i, j, c))
        for sid, comps in per_surface.items():
            needy: tuple[int, int, ComponentInstance] | None = None
            has_submit = False
            for i, j, c in comps:
                schema = self.catalog.get(c.type_name) if c.type_name else None
                if schema is None:
                    continue
                if schema.needs_submit and needy is None:
                    needy = (i, j, c)
                if schema.self_submitting:
                    has_submit = True
            if needy is not None and not has_submit:
                i, j, c = needy
                self.add("SEM_NO_SUBMIT",
                         f"/a2ui/{i}/surfaceUpdate/components/{j}",
                         f"'{c.type_name}' collects input but the surface has "
                         "no way to submit it (add a Button)")

        # empty user-facing strings
        for i, m in enumerate(self.resp.a2ui):
            if isinstance(m.body, DataModelUpdate):
                for j, entry in enumerate(m.body.contents):
                    if entry.value_kind == "string" and entry.value == "":
                        self.add("SEM_EMPTY_VALUE",
                                 f"/a2ui/{i}/dataModelUpdate/contents/{j}",
                                 f"entry '{entry.key}' writes an empty string")
            if isinstance(m.body, SurfaceUpdate):
                for j, c in enumerate(m.body.components):
                    schema = self.catalog.get(c.type_name) if c.type_name else None
                    if schema is None:
                        continue
                    for name, pv in c.props.items():
                        spec = schema.fields.get(name)
                        if (spec is not None and spec.kind == "value"
                                and spec.value_type == "string" and spec.required
                                and pv.kind == "string" and pv.value == ""):
                            self.add(
                                "SEM_EMPTY_VALUE",
                                f"/a2ui/{i}/surfaceUpdate/components/{j}"
                                f"/component/{c.type_name}/{name}",
                                f"'{name}' is an empty string")


def lint_response(resp: AssistantResponse, *, catalog: Catalog | None = None,
                  known_surfaces: frozenset[str] | set[str] = frozenset()
                  ) -> LintReport:
    """Lint an already-parsed response (structure, binding, semantic levels)."""
    linter = _Linter(resp, catalog or load_catalog(), frozenset(known_surfaces))
    issues = linter.run()
    return LintReport(issues=issues, parse_ok=True, response=resp)


def lint_text(raw: str | bytes, *, catalog: Catalog | None = None,
              known_surfaces: frozenset[str] | set[str] = frozenset()
              ) -> LintReport:
    """Full pipeline from raw payload text."""
    try:
        resp = parse_response(raw)
    except ShapeError as e:
        return LintReport(issues=[LintIssue("FORMAT_SHAPE", "/", e.message)],
                          parse_ok=False, response=None)
    except FormatError as e:
        where = "/" if e.offset is None else f"@{e.offset}"
        return LintReport(issues=[LintIssue("FORMAT_PARSE", where, e.message)],
                          parse_ok=False, response=None)
    return lint_response(resp, catalog=catalog, known_surfaces=known_surfaces)
