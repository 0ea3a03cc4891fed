"""Client-side message processor: surface lifecycle, data model, and events.

A Processor consumes protocol messages the way a rendering client would:

  beginRendering   -- marks the surface live and pins its root component id
  surfaceUpdate    -- defines or replaces components (keyed by id) on the
                      surface, creating it implicitly if needed
  dataModelUpdate  -- writes scalar entries into the surface's data tree,
                      last writer wins
  deleteSurface    -- drops the surface; deleting one never seen is a fault

``materialize`` resolves the component tree against the data model into a
plain-JSON ResolvedTree (references become ``{"$ref": n}`` markers into an
ordered child list), and ``dispatch_action`` turns a user interaction into
the ActionEvent payload a host application receives. The event JSON shape
is the cross-implementation contract: any renderer front end must emit
byte-identical events for the same inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from a2uikit.lint import join_path
from a2uikit.protocol import (
    ActionSpec,
    AssistantResponse,
    BeginRendering,
    ComponentInstance,
    DataModelUpdate,
    DeleteSurface,
    Message,
    PropValue,
    SurfaceUpdate,
    parse_prop_value,
    serialize_prop_value,
)

_MISSING = object()


class ProcessorError(RuntimeError):
    """Interaction against missing surfaces, components, or actions."""


class CycleDetected(ProcessorError):
    """Component references form a cycle; the tree cannot materialize."""


class DanglingChild(ProcessorError):
    """A referenced component id is not defined on the surface."""


@dataclass(frozen=True)
class Fault:
    """Non-fatal protocol misuse noticed while applying messages."""

    kind: str  # "unknown-surface" | "type-overwrite" | "invalid-message"
    surface_id: str | None
    detail: str


@dataclass
class Surface:
    surface_id: str
    begun: bool = False
    root: str | None = None
    components: dict[str, ComponentInstance] = field(default_factory=dict)
    data: dict[str, Any] = field(default_factory=dict)


def split_path(path: str) -> list[str]:
    """Path segments; empty segments (doubled or trailing slashes) skipped."""
    return [s for s in path.split("/") if s]


def resolve_path(model: dict[str, Any], context: str, path: str
                 ) -> tuple[Any, bool]:
    """Value at ``path`` resolved from ``context``; (value, found).

    Absolute paths ignore the context. The identity
    ``resolve(m, c, p) == resolve(m, "/", join_path(c, p))`` holds for all
    inputs.
    """
    node: Any = model
    for seg in split_path(join_path(context, path)):
        if not isinstance(node, dict) or seg not in node:
            return None, False
        node = node[seg]
    return node, True


def write_path(model: dict[str, Any], path: str, value: Any
               ) -> str | None:
    """Write a scalar at ``path``, creating intermediate maps.

    Returns a fault detail when the write clobbers a subtree or tunnels
    through a scalar (last writer still wins).
    """
    segs = split_path(path)
    if not segs:
        return f"cannot write to '{path}'"
    node = model
    detail = None
    for seg in segs[:-1]:
        nxt = node.get(seg, _MISSING)
        if not isinstance(nxt, dict):
            if nxt is not _MISSING:
                detail = f"overwrote scalar at segment '{seg}' of '{path}'"
            nxt = {}
            node[seg] = nxt
        node = nxt
    last = segs[-1]
    if isinstance(node.get(last), dict):
        detail = f"overwrote subtree at '{path}'"
    node[last] = value
    return detail


@dataclass
class ResolvedNode:
    id: str
    type: str
    props: dict[str, Any]
    children: list["ResolvedNode"] = field(default_factory=list)
    unresolved: list[str] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "type": self.type,
            "props": self.props,
            "children": [c.to_json() for c in self.children],
            "unresolved": self.unresolved,
            "flags": self.flags,
        }


@dataclass(frozen=True)
class ActionEvent:
    surface_id: str
    component_id: str
    action: str
    context: list[dict[str, Any]]
    captured_values: dict[str, Any]

    def to_json(self) -> dict[str, Any]:
        return {
            "surfaceId": self.surface_id,
            "componentId": self.component_id,
            "action": self.action,
            "context": self.context,
            "capturedValues": self.captured_values,
        }


class Processor:
    def __init__(self) -> None:
        self.surfaces: dict[str, Surface] = {}
        self.faults: list[Fault] = []
        self._ever_seen: set[str] = set()

    # -- message intake -------------------------------------------------

    def apply_response(self, resp: AssistantResponse) -> None:
        for m in resp.a2ui:
            self.apply(m)

    def apply(self, m: Message) -> None:
        if m.kind is None or m.body is None:
            self.faults.append(Fault("invalid-message", None,
                                     "message carries no action key"))
            return
        sid = m.body.surface_id
        if sid is None:
            self.faults.append(Fault("invalid-message", None,
                                     f"{m.kind} without surfaceId"))
            return
        body = m.body
        if isinstance(body, DeleteSurface):
            if sid not in self._ever_seen:
                self.faults.append(Fault("unknown-surface", sid,
                                         "deleteSurface for a surface never seen"))
                return
            self.surfaces.pop(sid, None)
            return

        self._ever_seen.add(sid)
        surface = self.surfaces.get(sid)
        if surface is None:
            surface = Surface(surface_id=sid)
            self.surfaces[sid] = surface

        if isinstance(body, BeginRendering):
            surface.begun = True
            if body.root is not None:
                surface.root = body.root
        elif isinstance(body, SurfaceUpdate):
            for c in body.components:
                if c.id is None:
                    self.faults.append(Fault("invalid-message", sid,
                                             "component item without id"))
                    continue
                surface.components[c.id] = c
        elif isinstance(body, DataModelUpdate):
            for entry in body.contents:
                if entry.key is None or entry.value_kind is None:
                    self.faults.append(Fault("invalid-message", sid,
                                             "data entry without key or value"))
                    continue
                detail = write_path(surface.data,
                                    join_path(body.path, entry.key), entry.value)
                if detail:
                    self.faults.append(Fault("type-overwrite", sid, detail))

    def data_model(self, sid: str) -> dict[str, Any]:
        return self.surfaces[sid].data

    # -- materialization --------------------------------------------------

    def materialize(self, sid: str) -> ResolvedNode:
        surface = self.surfaces.get(sid)
        if surface is None:
            raise ProcessorError(f"unknown surface '{sid}'")
        if surface.root is None:
            raise ProcessorError(f"surface '{sid}' has no root (never begun)")
        walker = _Materializer(surface)
        return walker.node(surface.root, "/")

    # -- interaction --------------------------------------------------------

    def dispatch_action(self, sid: str, component_id: str,
                        user_values: dict[str, Any] | None = None) -> ActionEvent:
        surface = self.surfaces.get(sid)
        if surface is None:
            raise ProcessorError(f"unknown surface '{sid}'")
        comp = surface.components.get(component_id)
        if comp is None:
            raise ProcessorError(f"unknown component '{component_id}'")
        action_pv = comp.props.get("action")
        if action_pv is None or action_pv.kind != "action":
            raise ProcessorError(f"component '{component_id}' has no action")
        spec: ActionSpec = action_pv.value
        if spec.name is None:
            raise ProcessorError(f"action on '{component_id}' has no name")

        captured: dict[str, Any] = {}
        for path, value in (user_values or {}).items():
            abs_path = join_path("/", path)
            write_path(surface.data, abs_path, value)
            captured[abs_path] = value

        context_out: list[dict[str, Any]] = []
        raw_ctx = spec.context if isinstance(spec.context, list) else []
        for entry in raw_ctx:
            if not isinstance(entry, dict):
                context_out.append({"key": None, "value": entry})
                continue
            key = entry.get("key")
            context_out.append({
                "key": key,
                "value": self._resolve_context_value(surface, entry.get("value")),
            })
        return ActionEvent(
            surface_id=sid,
            component_id=component_id,
            action=spec.name,
            context=context_out,
            captured_values=captured,
        )

    def _resolve_context_value(self, surface: Surface, raw: Any) -> Any:
        pv = parse_prop_value("value", raw)
        return _resolve_value(pv, surface.data, "/", [])

    # -- persistence ---------------------------------------------------------

    def export_state(self) -> dict[str, Any]:
        return {
            "surfaces": {
                sid: {
                    "begun": s.begun,
                    "root": s.root,
                    "components": {
                        cid: _component_to_json(c)
                        for cid, c in sorted(s.components.items())
                    },
                    "data": s.data,
                }
                for sid, s in sorted(self.surfaces.items())
            },
            "everSeen": sorted(self._ever_seen),
            "faults": [
                {"kind": f.kind, "surfaceId": f.surface_id, "detail": f.detail}
                for f in self.faults
            ],
        }

    @classmethod
    def import_state(cls, doc: dict[str, Any]) -> "Processor":
        proc = cls()
        for sid, sdoc in doc.get("surfaces", {}).items():
            surface = Surface(
                surface_id=sid,
                begun=sdoc.get("begun", False),
                root=sdoc.get("root"),
                data=sdoc.get("data", {}),
            )
            for cid, cdoc in sdoc.get("components", {}).items():
                surface.components[cid] = _component_from_json(cid, cdoc)
            proc.surfaces[sid] = surface
        proc._ever_seen = set(doc.get("everSeen", []))
        proc.faults = [Fault(f["kind"], f.get("surfaceId"), f["detail"])
                       for f in doc.get("faults", [])]
        return proc


def _component_to_json(c: ComponentInstance) -> dict[str, Any]:
    out: dict[str, Any] = {"type": c.type_name}
    out["props"] = {k: serialize_prop_value(c.props[k]) for k in sorted(c.props)}
    if c.extra:
        out["extra"] = c.extra
    return out


def _component_from_json(cid: str, doc: dict[str, Any]) -> ComponentInstance:
    props = {k: parse_prop_value(k, v) for k, v in doc.get("props", {}).items()}
    return ComponentInstance(id=cid, type_name=doc.get("type"), props=props,
                             extra=doc.get("extra", {}))


def _resolve_value(pv: PropValue, data: dict[str, Any], context: str,
                   unresolved: list[str], pointer: str = "") -> Any:
    """Plain-JSON value for a prop, pulling bindings out of ``data``."""
    if pv.kind in ("string", "number", "boolean", "array"):
        return pv.value
    if pv.kind == "path":
        value, found = resolve_path(data, context, pv.value)
        if not found:
            unresolved.append(pointer)
            return None
        return value
    if pv.kind == "bound":
        value, found = resolve_path(data, context, pv.value["path"])
        if not found:
            return pv.value["literal"]
        return value
    if pv.kind == "action":
        spec: ActionSpec = pv.value
        out: dict[str, Any] = {}
        if spec.name is not None:
            out["name"] = spec.name
        if spec.context is not None:
            out["context"] = spec.context
        return out
    if pv.kind == "nested":
        return {
            k: _resolve_value(v, data, context, unresolved, f"{pointer}/{k}")
            for k, v in pv.value.items()
        }
    if pv.kind == "items":
        return [
            {k: _resolve_value(v, data, context, unresolved, f"{pointer}/{i}/{k}")
             for k, v in item.items()}
            for i, item in enumerate(pv.value)
        ]
    return pv.value  # opaque / child / children handled by the tree walker


class _Materializer:
    def __init__(self, surface: Surface):
        self.surface = surface
        self.stack: list[str] = []
        self.materialized: set[str] = set()

    def node(self, cid: str, context: str) -> ResolvedNode:
        comp = self.surface.components.get(cid)
        if comp is None:
            raise DanglingChild(
                f"component '{cid}' is not defined on surface "
                f"'{self.surface.surface_id}'")
        if cid in self.stack:
            chain = " -> ".join([*self.stack, cid])
            raise CycleDetected(f"reference cycle: {chain}")
        self.stack.append(cid)

        out = ResolvedNode(id=cid, type=comp.type_name or "?", props={})
        for name, pv in comp.props.items():
            out.props[name] = self.value(pv, out, context, name)
        self.stack.pop()
        self.materialized.add(cid)
        return out

    def ref(self, cid: str, node: ResolvedNode, context: str) -> dict[str, Any]:
        """Expand one component reference; returns the prop-side marker."""
        if cid in self.materialized and cid not in self.stack:
            node.flags.append(f"duplicate-reference:{cid}")
            return {"$dup": cid}
        child = self.node(cid, context)
        node.children.append(child)
        return {"$ref": len(node.children) - 1}

    def value(self, pv: PropValue, node: ResolvedNode, context: str,
              pointer: str) -> Any:
        if pv.kind == "child":
            return self.ref(pv.value, node, context)
        if pv.kind == "children":
            return [self.ref(cid, node, context) for cid in pv.value]
        if pv.kind == "nested":
            sub = pv.value
            if "child" in sub and "dataPath" in sub and pointer == "template":
                return self.template(sub, node, context, pointer)
            return {k: self.value(v, node, context, f"{pointer}/{k}")
                    for k, v in sub.items()}
        if pv.kind == "items":
            return [
                {k: self.value(v, node, context, f"{pointer}/{i}/{k}")
                 for k, v in item.items()}
                for i, item in enumerate(pv.value)
            ]
        return _resolve_value(pv, self.surface.data, context,
                              node.unresolved, pointer)

    def template(self, sub: dict[str, PropValue], node: ResolvedNode,
                 context: str, pointer: str) -> dict[str, Any]:
        data_path_pv = sub["dataPath"]
        data_path = (data_path_pv.value if data_path_pv.kind in ("string", "path")
                     else None)
        child_pv = sub["child"]
        if data_path is None or child_pv.kind != "child":
            node.flags.append("template-malformed")
            return {"dataPath": None, "instances": []}
        subtree, found = resolve_path(self.surface.data, context, data_path)
        if not found:
            node.unresolved.append(f"{pointer}/dataPath")
            return {"dataPath": data_path, "instances": []}
        if not isinstance(subtree, dict):
            node.flags.append("template-non-tree")
            return {"dataPath": data_path, "instances": []}
        abs_base = join_path(context, data_path)
        instances = []
        for key in subtree:
            item_context = join_path(abs_base, key)
            marker = self.ref_instance(child_pv.value, node, item_context)
            instances.append({"key": key, **marker})
        return {"dataPath": data_path, "instances": instances}

    def ref_instance(self, cid: str, node: ResolvedNode, context: str
                     ) -> dict[str, Any]:
        """Template instances re-expand the same child once per item key."""
        child = self.node(cid, context)
        node.children.append(child)
        return {"$ref": len(node.children) - 1}


def materialize_to_json(proc: Processor, sid: str) -> dict[str, Any]:
    return proc.materialize(sid).to_json()


def event_json(event: ActionEvent) -> str:
    """Canonical event wire form (stable key order, compact separators)."""
    return json.dumps(event.to_json(), ensure_ascii=False, separators=(",", ":"))
