"""A2UI v0.8 wire protocol: typed messages and lossless (de)serialization.

An assistant reply is a single JSON object ``{"text_response": ..., "a2ui": [...]}``
where ``a2ui`` is an ordered list of messages, each carrying exactly one of four
action keys:

  beginRendering   -- create/start rendering a surface (surfaceId, root)
  surfaceUpdate    -- define/update the component tree on a surface
  dataModelUpdate  -- write key/value entries into the data model
  deleteSurface    -- remove a surface

Parsing is deliberately permissive above the envelope level: anything that is a
well-formed object of the required shape parses into typed values, and validity
judgments (unknown components, missing fields, bad enums, multiple action keys)
belong to the lint layer. Unknown keys are retained on each node's ``extra``
map and are never silently dropped.

Serialization is canonical: action key first, then ``surfaceId``, then the
remaining keys alphabetically; component items serialize as ``{"id", "component"}``;
props alphabetically. ``parse_response(serialize_response(r)) == r`` for every
value constructible here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterator

ACTION_KEYS = ("beginRendering", "surfaceUpdate", "dataModelUpdate", "deleteSurface")

# Wire wrapper key -> PropValue literal kind.
_WRAPPER_KINDS = {
    "literalString": "string",
    "literalNumber": "number",
    "literalBoolean": "boolean",
    "literalArray": "array",
}
_KIND_WRAPPERS = {v: k for k, v in _WRAPPER_KINDS.items()}

# Prop names whose bare-string values are component-id references.
CHILD_REF_PROPS = ("child", "entryPointChild", "contentChild")

PROP_KINDS = (
    "string", "number", "boolean", "array",   # literals (wrapped or bare)
    "path",                                    # {"path": "..."} data binding
    "bound",                                   # path + literal default, e.g. selection
    "child", "children",                       # component-id references
    "action",                                  # ActionSpec
    "nested",                                  # property map
    "items",                                   # list of property maps
    "opaque",                                  # unclassifiable, retained verbatim
)


class FormatError(ValueError):
    """Payload is not a well-formed object of the required response shape."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.message = message
        self.offset = offset


class ShapeError(FormatError):
    """JSON parsed but the envelope shape is wrong (missing/mistyped keys)."""


@dataclass(frozen=True)
class ActionSpec:
    """An interaction hook: event name plus callback context entries.

    ``context`` is kept as raw JSON structure; the wire contract says it must
    be an array (render-check RC4 flags dictionaries), so no shape is forced
    at parse time.
    """

    name: str | None = None
    context: Any = None
    extra: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class PropValue:
    """One component property value.

    ``kind`` is one of PROP_KINDS; ``value`` is the kind-specific payload.
    ``wrapped`` records whether a literal arrived as ``{"literalX": ...}``
    rather than a bare JSON scalar/array, so serialization round-trips.
    """

    kind: str
    value: Any = None
    wrapped: bool = False

    def path(self) -> str | None:
        """The binding path consumed by this value, if any."""
        if self.kind == "path":
            return self.value
        if self.kind == "bound":
            return self.value.get("path")
        return None

    def literal(self) -> Any:
        if self.kind in ("string", "number", "boolean", "array"):
            return self.value
        if self.kind == "bound":
            return self.value.get("literal")
        return None


@dataclass(frozen=True)
class ComponentInstance:
    id: str | None
    type_name: str | None
    props: dict[str, PropValue] = field(default_factory=dict)
    extra: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class BeginRendering:
    surface_id: str | None
    root: str | None = None
    extra: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class SurfaceUpdate:
    surface_id: str | None
    components: list[ComponentInstance] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class DataEntry:
    """One data-model write. Exactly one of the three value variants is legal;
    ``value_kind`` is None when no variant was present (lint flags it)."""

    key: str | None
    value_kind: str | None = None  # "string" | "number" | "boolean"
    value: Any = None
    extra: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class DataModelUpdate:
    surface_id: str | None
    path: str | None = None  # None = absent on the wire (render-check RC7)
    contents: list[DataEntry] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class DeleteSurface:
    surface_id: str | None
    extra: dict[str, Any] = field(default_factory=dict)


MessageBody = BeginRendering | SurfaceUpdate | DataModelUpdate | DeleteSurface


@dataclass(frozen=True)
class Message:
    """One a2ui array element.

    ``kind`` names the action key that was typed; extra action keys (a
    structural error) and any non-action keys are kept raw in ``extra``.
    ``kind`` is None for an element with no recognized action key.
    """

    kind: str | None
    body: MessageBody | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def surface_id(self) -> str | None:
        return self.body.surface_id if self.body is not None else None

    def extra_action_keys(self) -> list[str]:
        return [k for k in self.extra if k in ACTION_KEYS]


@dataclass(frozen=True)
class AssistantResponse:
    text_response: str
    a2ui: list[Message] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)

    def surface_ids(self) -> list[str]:
        """Distinct surface ids in message order."""
        seen: list[str] = []
        for m in self.a2ui:
            sid = m.surface_id
            if sid and sid not in seen:
                seen.append(sid)
        return seen

    def unknown_fields(self) -> dict[str, Any]:
        """Diagnostic map of payload-pointer -> retained unknown value."""
        out: dict[str, Any] = {}
        for k, v in self.extra.items():
            out[f"/{k}"] = v
        for i, m in enumerate(self.a2ui):
            base = f"/a2ui/{i}"
            for k, v in m.extra.items():
                out[f"{base}/{k}"] = v
            if m.body is None:
                continue
            for k, v in m.body.extra.items():
                out[f"{base}/{m.kind}/{k}"] = v
            if isinstance(m.body, SurfaceUpdate):
                for j, comp in enumerate(m.body.components):
                    for k, v in comp.extra.items():
                        out[f"{base}/{m.kind}/components/{j}/{k}"] = v
            elif isinstance(m.body, DataModelUpdate):
                for j, entry in enumerate(m.body.contents):
                    for k, v in entry.extra.items():
                        out[f"{base}/{m.kind}/contents/{j}/{k}"] = v
        return out


# ---------------------------------------------------------------------------
# Parsing


def _parse_action(raw: Any) -> ActionSpec:
    if not isinstance(raw, dict):
        return ActionSpec(name=None, context=None, extra={"!raw": raw})
    name = raw.get("name")
    extra = {k: v for k, v in raw.items() if k not in ("name", "context")}
    return ActionSpec(
        name=name if isinstance(name, str) else None,
        context=raw.get("context"),
        extra=extra,
    )


def parse_prop_value(name: str, raw: Any) -> PropValue:
    """Classify one raw JSON prop value structurally.

    Prop names drive only the reference rules: ``child``/``entryPointChild``/
    ``contentChild`` strings are component refs, ``children`` string lists are
    ref lists, ``action`` objects are ActionSpecs. Everything else is decided
    by shape alone so parsing never needs the catalog.
    """
    if name == "action" and isinstance(raw, dict):
        return PropValue("action", _parse_action(raw))
    if name in CHILD_REF_PROPS and isinstance(raw, str):
        return PropValue("child", raw)
    if name == "children" and isinstance(raw, list) and all(isinstance(x, str) for x in raw):
        return PropValue("children", list(raw))

    if isinstance(raw, str):
        return PropValue("string", raw)
    if isinstance(raw, bool):
        return PropValue("boolean", raw)
    if isinstance(raw, (int, float)):
        return PropValue("number", raw)

    if isinstance(raw, dict):
        keys = set(raw)
        binding_keys = keys & ({"path"} | set(_WRAPPER_KINDS))
        if keys and keys == binding_keys:
            if keys == {"path"} and isinstance(raw["path"], str):
                return PropValue("path", raw["path"])
            if len(keys) == 1:
                (wrapper,) = keys
                if wrapper == "path":  # {"path": non-string} is not a binding
                    return PropValue("opaque", raw)
                kind = _WRAPPER_KINDS[wrapper]
                val = raw[wrapper]
                if kind == "array" and not (
                    isinstance(val, list) and all(isinstance(x, str) for x in val)
                ):
                    return PropValue("opaque", raw)
                return PropValue(kind, val, wrapped=True)
            if "path" in keys and len(keys) == 2:
                wrapper = next(iter(keys - {"path"}))
                return PropValue(
                    "bound",
                    {"path": raw["path"], "literal_key": wrapper, "literal": raw[wrapper]},
                )
            return PropValue("opaque", raw)
        nested = {k: parse_prop_value(k, v) for k, v in raw.items()}
        return PropValue("nested", nested)

    if isinstance(raw, list):
        if all(isinstance(x, str) for x in raw):
            return PropValue("array", list(raw))
        if raw and all(isinstance(x, dict) for x in raw):
            return PropValue(
                "items",
                [{k: parse_prop_value(k, v) for k, v in item.items()} for item in raw],
            )
        return PropValue("opaque", raw)

    return PropValue("opaque", raw)


def _parse_component(raw: dict[str, Any]) -> ComponentInstance:
    cid = raw.get("id")
    comp = raw.get("component")
    extra = {k: v for k, v in raw.items() if k not in ("id", "component")}
    type_name: str | None = None
    props: dict[str, PropValue] = {}
    if isinstance(comp, dict) and comp:
        type_name = next(iter(comp))
        body = comp[type_name]
        if len(comp) > 1:
            extra["component+"] = {k: v for k, v in comp.items() if k != type_name}
        if isinstance(body, dict):
            props = {k: parse_prop_value(k, v) for k, v in body.items()}
        elif body is not None:
            extra["component!body"] = body
    elif comp is not None:
        extra["component"] = comp
    return ComponentInstance(
        id=cid if isinstance(cid, str) else None,
        type_name=type_name,
        props=props,
        extra=extra,
    )


def _parse_entry(raw: dict[str, Any]) -> DataEntry:
    key = raw.get("key")
    value_kind = None
    value = None
    consumed = {"key"}
    for wire, kind in (("valueString", "string"), ("valueNumber", "number"),
                       ("valueBoolean", "boolean")):
        if wire in raw and value_kind is None:
            value_kind, value = kind, raw[wire]
            consumed.add(wire)
    extra = {k: v for k, v in raw.items() if k not in consumed}
    return DataEntry(
        key=key if isinstance(key, str) else None,
        value_kind=value_kind,
        value=value,
        extra=extra,
    )


def _parse_body(kind: str, raw: dict[str, Any], where: str) -> MessageBody:
    sid = raw.get("surfaceId")
    sid = sid if isinstance(sid, str) else None
    if kind == "beginRendering":
        root = raw.get("root")
        extra = {k: v for k, v in raw.items() if k not in ("surfaceId", "root")}
        return BeginRendering(sid, root if isinstance(root, str) else None, extra)
    if kind == "surfaceUpdate":
        comps_raw = raw.get("components")
        comps: list[ComponentInstance] = []
        if isinstance(comps_raw, list):
            for j, c in enumerate(comps_raw):
                if not isinstance(c, dict):
                    raise ShapeError(f"{where}/components/{j}: component item must be an object")
                comps.append(_parse_component(c))
        elif comps_raw is not None:
            raise ShapeError(f"{where}/components: must be an array")
        extra = {k: v for k, v in raw.items() if k not in ("surfaceId", "components")}
        return SurfaceUpdate(sid, comps, extra)
    if kind == "dataModelUpdate":
        path = raw.get("path")
        contents_raw = raw.get("contents")
        entries: list[DataEntry] = []
        if isinstance(contents_raw, list):
            for j, e in enumerate(contents_raw):
                if not isinstance(e, dict):
                    raise ShapeError(f"{where}/contents/{j}: entry must be an object")
                entries.append(_parse_entry(e))
        elif contents_raw is not None:
            raise ShapeError(f"{where}/contents: must be an array")
        extra = {k: v for k, v in raw.items() if k not in ("surfaceId", "path", "contents")}
        return DataModelUpdate(sid, path if isinstance(path, str) else None, entries, extra)
    root_extra = {k: v for k, v in raw.items() if k != "surfaceId"}
    return DeleteSurface(sid, root_extra)


def _parse_message(raw: dict[str, Any], where: str) -> Message:
    kind = next((k for k in raw if k in ACTION_KEYS), None)
    if kind is None:
        return Message(kind=None, body=None, extra=dict(raw))
    body_raw = raw[kind]
    if not isinstance(body_raw, dict):
        raise ShapeError(f"{where}/{kind}: action body must be an object")
    extra = {k: v for k, v in raw.items() if k != kind}
    return Message(kind=kind, body=_parse_body(kind, body_raw, f"{where}/{kind}"), extra=extra)


def parse_response(raw: bytes | str) -> AssistantResponse:
    """Parse a unified assistant response.

    Raises FormatError (with a byte offset when the JSON itself is broken)
    if the payload is not a well-formed object of the required shape; every
    softer defect parses and is left for lint.
    """
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as e:
            raise FormatError(f"invalid UTF-8: {e}", offset=e.start) from e
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e.msg}", offset=e.pos) from e
    if not isinstance(doc, dict):
        raise ShapeError("top-level value must be an object")
    if "text_response" not in doc:
        raise ShapeError("missing required key 'text_response'")
    if not isinstance(doc["text_response"], str):
        raise ShapeError("'text_response' must be a string")
    if "a2ui" not in doc:
        raise ShapeError("missing required key 'a2ui'")
    if not isinstance(doc["a2ui"], list):
        raise ShapeError("'a2ui' must be an array")

    messages: list[Message] = []
    for i, m in enumerate(doc["a2ui"]):
        if not isinstance(m, dict):
            raise ShapeError(f"/a2ui/{i}: message must be an object")
        messages.append(_parse_message(m, f"/a2ui/{i}"))
    extra = {k: v for k, v in doc.items() if k not in ("text_response", "a2ui")}
    return AssistantResponse(doc["text_response"], messages, extra)


# ---------------------------------------------------------------------------
# Serialization


def _canon(value: Any) -> Any:
    """Deterministic form for raw retained JSON: dict keys sorted recursively."""
    if isinstance(value, dict):
        return {k: _canon(value[k]) for k in sorted(value)}
    if isinstance(value, list):
        return [_canon(v) for v in value]
    return value


def serialize_prop_value(pv: PropValue) -> Any:
    if pv.kind in ("string", "number", "boolean", "array"):
        if pv.wrapped:
            return {_KIND_WRAPPERS[pv.kind]: pv.value}
        return pv.value
    if pv.kind == "path":
        return {"path": pv.value}
    if pv.kind == "bound":
        out = {pv.value["literal_key"]: pv.value["literal"], "path": pv.value["path"]}
        return {k: out[k] for k in sorted(out)}
    if pv.kind in ("child",):
        return pv.value
    if pv.kind == "children":
        return list(pv.value)
    if pv.kind == "action":
        spec: ActionSpec = pv.value
        out = {}
        if spec.context is not None:
            out["context"] = _canon(spec.context)
        if spec.name is not None:
            out["name"] = spec.name
        out.update({k: _canon(v) for k, v in sorted(spec.extra.items())})
        return {k: out[k] for k in sorted(out)}
    if pv.kind == "nested":
        return {k: serialize_prop_value(pv.value[k]) for k in sorted(pv.value)}
    if pv.kind == "items":
        return [{k: serialize_prop_value(item[k]) for k in sorted(item)} for item in pv.value]
    return _canon(pv.value)  # opaque


def _serialize_component(c: ComponentInstance) -> dict[str, Any]:
    out: dict[str, Any] = {}
    if c.id is not None:
        out["id"] = c.id
    if c.type_name is not None:
        out["component"] = {
            c.type_name: {k: serialize_prop_value(c.props[k]) for k in sorted(c.props)}
        }
    out.update({k: _canon(v) for k, v in sorted(c.extra.items())})
    return out


def _serialize_entry(e: DataEntry) -> dict[str, Any]:
    out: dict[str, Any] = {}
    if e.key is not None:
        out["key"] = e.key
    if e.value_kind is not None:
        wire = {"string": "valueString", "number": "valueNumber", "boolean": "valueBoolean"}
        out[wire[e.value_kind]] = e.value
    out.update({k: _canon(v) for k, v in sorted(e.extra.items())})
    return out


def _serialize_body(body: MessageBody) -> dict[str, Any]:
    rest: dict[str, Any] = {}
    if isinstance(body, BeginRendering):
        if body.root is not None:
            rest["root"] = body.root
    elif isinstance(body, SurfaceUpdate):
        rest["components"] = [_serialize_component(c) for c in body.components]
    elif isinstance(body, DataModelUpdate):
        rest["contents"] = [_serialize_entry(e) for e in body.contents]
        if body.path is not None:
            rest["path"] = body.path
    rest.update({k: _canon(v) for k, v in body.extra.items()})

    out: dict[str, Any] = {}
    if body.surface_id is not None:
        out["surfaceId"] = body.surface_id
    for k in sorted(rest):
        out[k] = rest[k]
    return out


def serialize_message(m: Message) -> dict[str, Any]:
    out: dict[str, Any] = {}
    if m.kind is not None and m.body is not None:
        out[m.kind] = _serialize_body(m.body)
    for k in sorted(m.extra):
        out[k] = _canon(m.extra[k])
    return out


def serialize_response(r: AssistantResponse, *, indent: int | None = None) -> str:
    """Canonical serialization; stable byte-for-byte for equal values."""
    out: dict[str, Any] = {
        "text_response": r.text_response,
        "a2ui": [serialize_message(m) for m in r.a2ui],
    }
    for k in sorted(r.extra):
        out[k] = _canon(r.extra[k])
    if indent is None:
        return json.dumps(out, ensure_ascii=False, separators=(",", ":"))
    return json.dumps(out, ensure_ascii=False, indent=indent)


# ---------------------------------------------------------------------------
# Traversal helpers shared by lint / renderguard / processor


def iter_components(r: AssistantResponse) -> Iterator[tuple[int, int, ComponentInstance]]:
    """Yield (message index, component index, component) across all surfaceUpdates."""
    for i, m in enumerate(r.a2ui):
        if isinstance(m.body, SurfaceUpdate):
            for j, c in enumerate(m.body.components):
                yield i, j, c


def component_location(i: int, j: int, c: ComponentInstance, prop: str | None = None) -> str:
    base = f"/a2ui/{i}/surfaceUpdate/components/{j}"
    if prop is None:
        return base
    tn = c.type_name or "?"
    return f"{base}/component/{tn}/{prop}"


def iter_prop_values(props: dict[str, PropValue]) -> Iterator[tuple[str, PropValue]]:
    """Depth-first walk of a prop map, yielding (relative pointer, value)."""
    for name in props:
        yield from _walk_prop(name, props[name])


def _walk_prop(pointer: str, pv: PropValue) -> Iterator[tuple[str, PropValue]]:
    yield pointer, pv
    if pv.kind == "nested":
        for k, sub in pv.value.items():
            yield from _walk_prop(f"{pointer}/{k}", sub)
    elif pv.kind == "items":
        for idx, item in enumerate(pv.value):
            for k, sub in item.items():
                yield from _walk_prop(f"{pointer}/{idx}/{k}", sub)
