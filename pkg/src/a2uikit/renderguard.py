"""Render-critical checks: defects that crash or blank a client renderer.

These seven rules sit apart from lint because failing any of them makes the
payload unrenderable in practice even when it is structurally tidy. A failed
check gates reward to zero, floors judge scores, and excludes the sample
from visual evaluation.

  RC1  selection binding without an array default (client crashes on read)
  RC2  TickSlider laid out as a direct child of Row (layout engine fault)
  RC3  more than one surface touched by a single response
  RC4  action context is not an array
  RC5  selection option value is not a bare string
  RC6  DateTimeInput date bounds not ISO-8601 / enable flags not boolean
  RC7  dataModelUpdate without a path
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from a2uikit.catalog import Catalog, load_catalog
from a2uikit.protocol import (
    AssistantResponse,
    DataModelUpdate,
    SurfaceUpdate,
    iter_components,
)

RULES = ("RC1", "RC2", "RC3", "RC4", "RC5", "RC6", "RC7")

# Calendar date, optionally with a time part and zone designator. Week-date
# and ordinal-date forms are not accepted by client date pickers.
_ISO_RE = re.compile(
    r"^\d{4}-\d{2}-\d{2}"
    r"(T\d{2}:\d{2}(:\d{2}(\.\d+)?)?(Z|[+-]\d{2}:\d{2})?)?$"
)


@dataclass(frozen=True)
class RenderViolation:
    rule: str
    location: str
    message: str

    def compact(self) -> str:
        return f"{self.rule} {self.location} {self.message}"


@dataclass
class RenderCheckReport:
    violations: list[RenderViolation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def rules_failed(self) -> list[str]:
        seen: list[str] = []
        for v in self.violations:
            if v.rule not in seen:
                seen.append(v.rule)
        return seen

    def compact(self) -> str:
        if self.passed:
            return "render checks passed"
        return "\n".join(v.compact() for v in self.violations)


def is_iso_date(value: str) -> bool:
    return bool(_ISO_RE.match(value))


def render_check(resp: AssistantResponse, *,
                 catalog: Catalog | None = None) -> RenderCheckReport:
    catalog = catalog or load_catalog()
    out: list[RenderViolation] = []

    def add(rule: str, location: str, message: str) -> None:
        out.append(RenderViolation(rule, location, message))

    # RC3: count every message kind, deletes included.
    surfaces = resp.surface_ids()
    if len(surfaces) > 1:
        add("RC3", "/a2ui", "response touches surfaces "
            + ", ".join(surfaces) + "; a renderer binds one surface per reply")

    # RC7
    for i, m in enumerate(resp.a2ui):
        if isinstance(m.body, DataModelUpdate) and m.body.path is None:
            add("RC7", f"/a2ui/{i}/dataModelUpdate",
                "dataModelUpdate must carry a path")

    # component type index per surface, for RC2
    type_of: dict[tuple[str | None, str], str | None] = {}
    for i, m in enumerate(resp.a2ui):
        if isinstance(m.body, SurfaceUpdate):
            for c in m.body.components:
                if c.id is not None:
                    type_of.setdefault((m.body.surface_id, c.id), c.type_name)

    for i, j, c in iter_components(resp):
        if c.type_name is None:
            continue
        schema = catalog.get(c.type_name)
        sid = resp.a2ui[i].body.surface_id
        base = f"/a2ui/{i}/surfaceUpdate/components/{j}/component/{c.type_name}"

        # RC4: any action carried by any component
        for name, pv in c.props.items():
            if pv.kind == "action" and pv.value.context is not None:
                if not isinstance(pv.value.context, list):
                    add("RC4", f"{base}/{name}/context",
                        "action context must be an array of entries")

        if schema is None:
            continue

        # RC1 / RC5: selection groups
        if schema.selection_group:
            sel = c.props.get("selection")
            if sel is not None:
                if sel.kind == "path":
                    add("RC1", f"{base}/selection",
                        "path-bound selection needs a literalArray default")
                elif sel.kind == "bound" and sel.value["literal_key"] != "literalArray":
                    add("RC1", f"{base}/selection",
                        "selection default must be a literalArray")
            items = c.props.get("items")
            if items is not None and items.kind == "items":
                for k, item in enumerate(items.value):
                    val = item.get("value")
                    if val is None:
                        continue  # missing value is a lint matter
                    if val.kind != "string" or val.wrapped:
                        add("RC5", f"{base}/items/{k}/value",
                            "selection option value must be a bare string")

        # RC2: slider under a Row
        if c.type_name == "Row":
            child_ids: list[tuple[str, str]] = []
            children = c.props.get("children")
            if children is not None and children.kind == "children":
                child_ids += [(ref, f"{base}/children/{k}")
                              for k, ref in enumerate(children.value)]
            template = c.props.get("template")
            if template is not None and template.kind == "nested":
                tchild = template.value.get("child")
                if tchild is not None and tchild.kind == "child":
                    child_ids.append((tchild.value, f"{base}/template/child"))
            for ref, loc in child_ids:
                if type_of.get((sid, ref)) == "TickSlider":
                    add("RC2", loc,
                        f"TickSlider '{ref}' cannot be a direct child of Row; "
                        "wrap it in a Column")

        # RC6: date picker literals
        if c.type_name == "DateTimeInput":
            for bound in ("firstDate", "lastDate"):
                pv = c.props.get(bound)
                if pv is not None and pv.kind == "string" and not is_iso_date(pv.value):
                    add("RC6", f"{base}/{bound}",
                        f"'{pv.value}' is not an ISO-8601 date or datetime")
            for flag in ("enableDate", "enableTime"):
                pv = c.props.get(flag)
                if pv is not None and pv.kind not in ("boolean", "path", "bound"):
                    add("RC6", f"{base}/{flag}", f"'{flag}' must be a boolean")
    return RenderCheckReport(out)
