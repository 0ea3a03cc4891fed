"""Component catalog: the 24 registered component types and the icon registry.

Schemas are bundled as JSON resources (one file per component) and loaded
once per process. Each schema records the component's role (interactive /
display / layout), its field contract, and the behavioral flags the lint,
render-check, repair, and corpus layers key off:

  selectionGroup  -- has a ``selection`` state binding with item options
  needsSubmit     -- collects input but cannot submit it by itself
  selfSubmitting  -- fires its own action (no confirm button required)
  evalSubset      -- belongs to the reduced prompt / bench component set
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

FIELD_KINDS = (
    "value", "enum", "child", "children", "action", "selection",
    "items", "template",
)


@dataclass(frozen=True)
class FieldSpec:
    name: str
    kind: str
    value_type: str | None = None
    required: bool = False
    default: object = None
    enum_values: tuple[str, ...] | None = None
    enum_ref: str | None = None
    client_writable: bool = False
    bare_only: bool = False
    item_fields: dict[str, "FieldSpec"] | None = None

    @property
    def is_reference(self) -> bool:
        return self.kind in ("child", "children")


@dataclass(frozen=True)
class ComponentSchema:
    type_name: str
    role: str
    fields: dict[str, FieldSpec]
    eval_subset: bool = False
    selection_group: bool = False
    needs_submit: bool = False
    self_submitting: bool = False
    additional_props: str = "warn"  # "warn" | "allow"
    requires_one_of: tuple[str, ...] = ()

    @property
    def accepts_children(self) -> bool:
        return any(f.is_reference or f.kind == "template" or (
            f.kind == "items" and f.item_fields is not None
            and any(sub.is_reference for sub in f.item_fields.values())
        ) for f in self.fields.values())

    def required_fields(self) -> list[FieldSpec]:
        return [f for f in self.fields.values() if f.required]

    def defaultable_required(self) -> list[FieldSpec]:
        return [f for f in self.fields.values() if f.required and f.default is not None]


def _parse_field(name: str, raw: dict) -> FieldSpec:
    items = raw.get("itemFields")
    return FieldSpec(
        name=name,
        kind=raw["kind"],
        value_type=raw.get("valueType"),
        required=raw.get("required", False),
        default=raw.get("default"),
        enum_values=tuple(raw["enumValues"]) if "enumValues" in raw else None,
        enum_ref=raw.get("enumRef"),
        client_writable=raw.get("clientWritable", False),
        bare_only=raw.get("bareOnly", False),
        item_fields={k: _parse_field(k, v) for k, v in items.items()} if items else None,
    )


class Catalog:
    """Lookup over loaded component schemas plus the icon registry."""

    def __init__(self, schemas: dict[str, ComponentSchema], icons: tuple[str, ...],
                 icon_styles: tuple[str, ...]):
        self._schemas = schemas
        self.icons = icons
        self.icon_styles = icon_styles
        self._icon_set = frozenset(icons)

    def __contains__(self, type_name: str) -> bool:
        return type_name in self._schemas

    def get(self, type_name: str) -> ComponentSchema | None:
        return self._schemas.get(type_name)

    def names(self) -> list[str]:
        return sorted(self._schemas)

    def by_role(self, role: str) -> list[ComponentSchema]:
        return [s for s in self._schemas.values() if s.role == role]

    def eval_subset(self) -> list[str]:
        return sorted(n for n, s in self._schemas.items() if s.eval_subset)

    def selection_groups(self) -> list[str]:
        return sorted(n for n, s in self._schemas.items() if s.selection_group)

    def is_icon(self, name: str) -> bool:
        return name in self._icon_set

    def enum_values_for(self, spec: FieldSpec) -> tuple[str, ...]:
        if spec.enum_ref == "icons":
            return self.icons
        return spec.enum_values or ()


@lru_cache(maxsize=4)
def load_catalog(root_dir: str | None = None) -> Catalog:
    """Catalog from the bundled resources, or from ``root_dir`` when given.

    A custom root must mirror the bundled layout: ``components/*.json``
    plus ``icons.json``.
    """
    if root_dir is not None:
        root = Path(root_dir)
    else:
        root = resources.files("a2uikit").joinpath("resources")
    schemas: dict[str, ComponentSchema] = {}
    for entry in sorted(root.joinpath("components").iterdir(), key=lambda e: e.name):
        if not entry.name.endswith(".json"):
            continue
        doc = json.loads(entry.read_text())
        schemas[doc["typeName"]] = ComponentSchema(
            type_name=doc["typeName"],
            role=doc["role"],
            fields={k: _parse_field(k, v) for k, v in doc["fields"].items()},
            eval_subset=doc.get("evalSubset", False),
            selection_group=doc.get("selectionGroup", False),
            needs_submit=doc.get("needsSubmit", False),
            self_submitting=doc.get("selfSubmitting", False),
            additional_props=doc.get("additionalProps", "warn"),
            requires_one_of=tuple(doc.get("requiresOneOf", [])),
        )
    icons_doc = json.loads(root.joinpath("icons.json").read_text())
    return Catalog(schemas, tuple(icons_doc["icons"]), tuple(icons_doc["styles"]))
