"""Component registry contents and lookup behavior."""

import pytest

from a2uikit.catalog import load_catalog

EXPECTED_NAMES = {
    "ActionSelectionList", "Button", "Card", "Carousel", "CircularProgress",
    "Column", "DateTimeInput", "Divider", "DropdownSelection",
    "FullScreenModal", "Icon", "Image", "Label", "LinearProgress",
    "MarkdownView", "OrderedDisplayList", "OrderedSelectionList",
    "PasswordKeypad", "Row", "SelectionGrid", "SelectionList",
    "SelectionWrap", "Tabs", "TickSlider",
}


def test_all_components_present(catalog):
    assert set(catalog.names()) == EXPECTED_NAMES


def test_load_is_cached():
    assert load_catalog() is load_catalog()


def test_selection_group_members(catalog):
    sel = {n for n in catalog.names() if catalog.get(n).selection_group}
    assert sel == {"ActionSelectionList", "DropdownSelection",
                   "OrderedSelectionList", "SelectionGrid", "SelectionList",
                   "SelectionWrap"}


def test_self_submitting_members(catalog):
    auto = {n for n in catalog.names() if catalog.get(n).self_submitting}
    assert auto == {"ActionSelectionList", "Button", "PasswordKeypad"}


def test_needs_submit_members(catalog):
    needy = {n for n in catalog.names() if catalog.get(n).needs_submit}
    assert needy == {"DateTimeInput", "DropdownSelection",
                     "OrderedSelectionList", "SelectionGrid", "SelectionList",
                     "SelectionWrap", "TickSlider"}


@pytest.mark.parametrize("name,required", [
    ("Label", {"text"}),
    ("Button", {"child"}),
    ("Card", {"child"}),
    ("TickSlider", {"value", "max"}),
    ("Tabs", {"tabItems"}),
    ("FullScreenModal", {"entryPointChild", "contentChild"}),
    ("Image", {"url"}),
    ("Icon", {"name", "style"}),
])
def test_required_fields(catalog, name, required):
    schema = catalog.get(name)
    assert {f for f, spec in schema.fields.items() if spec.required} == required


def test_label_size_enum(catalog):
    spec = catalog.get("Label").fields["size"]
    values = catalog.enum_values_for(spec)
    assert "bodyMedium" in values and "headlineSmall" in values
    assert len(values) == 9


def test_icon_names_come_from_registry(catalog):
    spec = catalog.get("Icon").fields["name"]
    icons = catalog.enum_values_for(spec)
    assert len(icons) > 50
    assert {"star", "home", "search", "calendar-thirty"} <= set(icons)
    assert "sparkle" not in icons


def test_unknown_component_returns_none(catalog):
    assert catalog.get("Lable") is None
    assert catalog.get("") is None


def test_defaults_recorded(catalog):
    assert catalog.get("Label").fields["variant"].default == "primary"
    assert catalog.get("Divider").fields["axis"].default == "horizontal"
    assert catalog.get("Button").fields["style"].default == "primary"
