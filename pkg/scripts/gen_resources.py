#!/usr/bin/env python
"""Regenerate the bundled component schemas and icon registry.

Writes one JSON file per component type under src/a2uikit/resources/components/
plus src/a2uikit/resources/icons.json. Run from the repo root:

    python scripts/gen_resources.py
"""

from __future__ import annotations

import json
from pathlib import Path

RES = Path(__file__).resolve().parent.parent / "src" / "a2uikit" / "resources"

ICONS = [
    "star", "home", "search", "time", "like", "dislike", "thumbs-up", "thumbs-down",
    "success", "tips", "fire", "lightning", "protection", "alarm", "alarm-clock",
    "calendar-thirty", "stopwatch", "hourglass-null", "arrow-left", "arrow-right",
    "arrow-circle-up", "arrow-circle-down", "arrow-circle-left", "arrow-circle-right",
    "book", "book-one", "book-open", "notes", "copy", "link", "share", "share-two",
    "rss", "history", "refresh", "phone-telephone", "mail-open", "camera", "pic-one",
    "local-two", "shopping-bag-one", "knife-fork", "chef-hat-one", "cook", "bowl",
    "pot", "platte", "goblet", "tea-drink", "avocado-one", "cheese", "refrigerator",
    "birthday-cake", "leaves-two", "sleep", "abdominal", "afferent",
    "smiling-face-with-squinting-eyes",
    "grinning-face-with-tightly-closed-eyes-open-mouth", "anguished-face",
    "disappointed-face", "emotion-unhappy", "more", "more-one", "hamburger-button",
    "all-application", "setting-three", "equalizer", "application-effect",
    "preview-open", "preview-close-one", "left-c", "right-c",
]

LABEL_VARIANTS = ["primary", "secondary", "tertiary"]
LABEL_SIZES = [
    "displayLarge", "displayMedium", "displaySmall",
    "headlineLarge", "headlineMedium", "headlineSmall",
    "bodyLarge", "bodyMedium", "bodySmall",
]

# The component subset exercised by the reduced system prompt and the bench.
EVAL_SUBSET = [
    "Button", "Card", "Column", "DateTimeInput", "Divider", "FullScreenModal",
    "Icon", "Image", "Label", "MarkdownView", "PasswordKeypad", "Row",
    "SelectionList", "Tabs", "TickSlider",
]


def value(value_type: str, *, required=False, default=None, client_writable=False):
    f = {"kind": "value", "valueType": value_type, "required": required}
    if default is not None:
        f["default"] = default
    if client_writable:
        f["clientWritable"] = True
    return f


def enum(values: list[str], *, required=False, default=None):
    f = {"kind": "enum", "valueType": "string", "required": required, "enumValues": values}
    if default is not None:
        f["default"] = default
    return f


def selection_items(extra_fields: dict | None = None, required=True):
    fields = {
        "label": {"kind": "value", "valueType": "string", "required": True},
        "value": {"kind": "value", "valueType": "string", "required": True,
                  "bareOnly": True},
    }
    fields.update(extra_fields or {})
    return {"kind": "items", "required": required, "itemFields": fields}


SELECTION = {"kind": "selection", "valueType": "array", "required": True,
             "clientWritable": True}

COMPONENTS: dict[str, dict] = {
    "Button": {
        "role": "interactive",
        "selfSubmitting": True,
        "fields": {
            "child": {"kind": "child", "required": True},
            "action": {"kind": "action", "required": False},
            "style": enum(["primary", "secondary", "plain"], default="primary"),
        },
    },
    "Card": {
        "role": "layout",
        "fields": {
            "child": {"kind": "child", "required": True},
        },
    },
    "Column": {
        "role": "layout",
        "requiresOneOf": ["children", "template"],
        "fields": {
            "children": {"kind": "children", "required": False},
            "template": {"kind": "template", "required": False},
            "spacing": value("number"),
            "distribution": enum(["start", "center", "end", "spaceBetween",
                                  "spaceAround", "spaceEvenly"]),
            "alignment": enum(["start", "center", "end", "stretch"]),
        },
    },
    "Row": {
        "role": "layout",
        "requiresOneOf": ["children", "template"],
        "fields": {
            "children": {"kind": "children", "required": False},
            "template": {"kind": "template", "required": False},
            "spacing": value("number"),
            "distribution": enum(["start", "center", "end", "spaceBetween",
                                  "spaceAround", "spaceEvenly"]),
            "alignment": enum(["start", "center", "end", "stretch"]),
        },
    },
    "Divider": {
        "role": "layout",
        "fields": {
            "axis": enum(["horizontal", "vertical"], required=True, default="horizontal"),
        },
    },
    "Card.": None,  # placeholder removed below; keeps dict literal honest
    "Label": {
        "role": "display",
        "fields": {
            "text": value("string", required=True),
            "variant": enum(LABEL_VARIANTS, default="primary"),
            "size": enum(LABEL_SIZES, default="bodyMedium"),
        },
    },
    "MarkdownView": {
        "role": "display",
        "fields": {
            "text": value("string", required=True),
        },
    },
    "LinearProgress": {
        "role": "display",
        "fields": {
            "value": value("number", required=True),
            "label": value("string"),
        },
    },
    "CircularProgress": {
        "role": "display",
        "fields": {
            "value": value("number", required=True),
            "label": value("string"),
        },
    },
    "Image": {
        "role": "display",
        "fields": {
            "url": value("string", required=True),
            "size": enum(["small", "medium", "large", "full"]),
            "alt": value("string"),
        },
    },
    "Icon": {
        "role": "display",
        "fields": {
            "name": {"kind": "enum", "valueType": "string", "required": True,
                     "enumRef": "icons"},
            "style": enum(["line", "filled"], required=True, default="line"),
            "size": enum(["small", "medium", "large"]),
        },
    },
    "OrderedDisplayList": {
        "role": "display",
        "fields": {
            "items": {"kind": "items", "required": True, "itemFields": {
                "label": {"kind": "value", "valueType": "string", "required": True},
                "description": {"kind": "value", "valueType": "string",
                                "required": False},
            }},
        },
    },
    "SelectionList": {
        "role": "interactive",
        "selectionGroup": True,
        "needsSubmit": True,
        "fields": {
            "selection": dict(SELECTION),
            "items": selection_items({"description": {"kind": "value",
                                                      "valueType": "string",
                                                      "required": False}}),
            "minSelections": value("number"),
            "maxSelections": value("number"),
        },
    },
    "SelectionGrid": {
        "role": "interactive",
        "selectionGroup": True,
        "needsSubmit": True,
        "fields": {
            "selection": dict(SELECTION),
            "items": selection_items({"imageUrl": {"kind": "value",
                                                   "valueType": "string",
                                                   "required": False}}),
            "columns": value("number"),
            "minSelections": value("number"),
            "maxSelections": value("number"),
        },
    },
    "SelectionWrap": {
        "role": "interactive",
        "selectionGroup": True,
        "needsSubmit": True,
        "fields": {
            "selection": dict(SELECTION),
            "items": selection_items(),
            "minSelections": value("number"),
            "maxSelections": value("number"),
        },
    },
    "OrderedSelectionList": {
        "role": "interactive",
        "selectionGroup": True,
        "needsSubmit": True,
        "fields": {
            "selection": dict(SELECTION),
            "items": selection_items(),
            "minSelections": value("number"),
            "maxSelections": value("number"),
        },
    },
    "ActionSelectionList": {
        "role": "interactive",
        "selectionGroup": True,
        "selfSubmitting": True,
        "fields": {
            "selection": dict(SELECTION, required=False),
            "items": selection_items(),
            "action": {"kind": "action", "required": True},
        },
    },
    "DropdownSelection": {
        "role": "interactive",
        "selectionGroup": True,
        "needsSubmit": True,
        "fields": {
            "selection": dict(SELECTION),
            "items": selection_items(),
            "placeholder": value("string"),
        },
    },
    "DateTimeInput": {
        "role": "interactive",
        "needsSubmit": True,
        "fields": {
            "value": value("string", required=True, client_writable=True),
            "enableDate": value("boolean"),
            "enableTime": value("boolean"),
            "firstDate": value("string"),
            "lastDate": value("string"),
        },
    },
    "PasswordKeypad": {
        "role": "interactive",
        "selfSubmitting": True,
        "additionalProps": "allow",
        "fields": {
            "value": value("string", required=True, client_writable=True),
            "action": {"kind": "action", "required": True},
        },
    },
    "TickSlider": {
        "role": "interactive",
        "needsSubmit": True,
        "fields": {
            "value": value("number", required=True, client_writable=True),
            "max": value("number", required=True),
            "min": value("number"),
            "divisions": value("number"),
            "label": value("string"),
        },
    },
    "Tabs": {
        "role": "interactive",
        "additionalProps": "allow",
        "fields": {
            "tabItems": {"kind": "items", "required": True, "itemFields": {
                "title": {"kind": "value", "valueType": "string", "required": True},
                "child": {"kind": "child", "required": True},
            }},
        },
    },
    "Carousel": {
        "role": "interactive",
        "additionalProps": "allow",
        "fields": {
            "children": {"kind": "children", "required": True},
        },
    },
    "FullScreenModal": {
        "role": "interactive",
        "fields": {
            "entryPointChild": {"kind": "child", "required": True},
            "contentChild": {"kind": "child", "required": True},
        },
    },
}
del COMPONENTS["Card."]


def main() -> None:
    comp_dir = RES / "components"
    comp_dir.mkdir(parents=True, exist_ok=True)
    for name, spec in sorted(COMPONENTS.items()):
        doc = {
            "typeName": name,
            "role": spec["role"],
            "evalSubset": name in EVAL_SUBSET,
            "selectionGroup": spec.get("selectionGroup", False),
            "needsSubmit": spec.get("needsSubmit", False),
            "selfSubmitting": spec.get("selfSubmitting", False),
            "additionalProps": spec.get("additionalProps", "warn"),
            "requiresOneOf": spec.get("requiresOneOf", []),
            "fields": spec["fields"],
        }
        path = comp_dir / f"{name}.json"
        path.write_text(json.dumps(doc, indent=2) + "\n")
        print(f"wrote {path.relative_to(RES.parent.parent.parent)}")

    icons_path = RES / "icons.json"
    icons_path.write_text(json.dumps({"styles": ["line", "filled"], "icons": ICONS},
                                     indent=2) + "\n")
    print(f"wrote {icons_path.relative_to(RES.parent.parent.parent)} "
          f"({len(ICONS)} icons)")


if __name__ == "__main__":
    main()
