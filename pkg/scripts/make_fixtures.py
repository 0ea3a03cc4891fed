"""Generate the bundled fixture corpus.

Writes src/a2uikit/resources/fixtures/:

  golden/       22 clean response documents (zero lint issues, all render
                checks pass, stored in canonical serialization)
  defects/      one document per lint code, each tripping exactly that code
  renderguard/  one document per render-critical rule + one combo
  tasks/        desk-scale benchmark pack (12 tasks, all scenario kinds)
  parity/       message lists + interactions + frozen action events, the
                cross-implementation contract for the web renderer
  dialogues/    annotated dialogues feeding the corpus generator

Every fixture is validated against the live toolchain before it is written;
the script fails loudly if a fixture drifts from its declared contract.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from a2uikit.corpus import build_samples
from a2uikit.lint import lint_text
from a2uikit.processor import Processor
from a2uikit.protocol import parse_response, serialize_response
from a2uikit.renderguard import render_check

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "src" / "a2uikit" / "resources" / "fixtures"


def lbl(text, **extra):
    return {"Label": {"text": text, **extra}}


def comp(cid, body):
    return {"id": cid, "component": body}


def begin(sid, root):
    return {"beginRendering": {"surfaceId": sid, "root": root}}


def update(sid, components):
    return {"surfaceUpdate": {"surfaceId": sid, "components": components}}


def data(sid, path, entries):
    return {"dataModelUpdate": {"surfaceId": sid, "path": path,
                                "contents": entries}}


def sel_items(*pairs):
    return [{"label": label, "value": value} for label, value in pairs]


# ---------------------------------------------------------------------------
# Golden documents


def golden_fixtures() -> dict[str, dict]:
    g: dict[str, dict] = {}

    g["g01_card_basic"] = {
        "text_response": "I set up the booking card for you.",
        "a2ui": [
            begin("s1", "card"),
            update("s1", [
                comp("title", lbl({"path": "/title"}, size="headlineSmall")),
                comp("body", lbl("Your table is ready to book.")),
                comp("btn_label", lbl("Book now")),
                comp("btn", {"Button": {
                    "child": "btn_label", "style": "primary",
                    "action": {"name": "book", "context": [
                        {"key": "venue", "value": "cafe_rio"}]}}}),
                comp("col", {"Column": {
                    "children": ["title", "body", "btn"], "spacing": 12}}),
                comp("card", {"Card": {"child": "col"}}),
            ]),
            data("s1", "/", [{"key": "title",
                              "valueString": "Dinner reservation"}]),
        ],
    }

    g["g02_selection_confirm"] = {
        "text_response": "Which cuisine sounds good?",
        "a2ui": [
            begin("s2", "card"),
            update("s2", [
                comp("prompt", lbl({"path": "/form/title"},
                                   size="headlineSmall")),
                comp("sel", {"SelectionList": {
                    "selection": {"path": "/form/cuisine",
                                  "literalArray": []},
                    "items": [
                        {"label": "Italian", "value": "opt_0",
                         "description": "Pasta and wood-fired pizza"},
                        {"label": "Thai", "value": "opt_1",
                         "description": "Curries and noodles"},
                        {"label": "Mexican", "value": "opt_2",
                         "description": "Tacos and slow-cooked stews"},
                    ],
                    "maxSelections": 1}}),
                comp("ok_label", lbl("Confirm")),
                comp("ok", {"Button": {
                    "child": "ok_label", "style": "primary",
                    "action": {"name": "submit", "context": [
                        {"key": "cuisine",
                         "value": {"path": "/form/cuisine"}}]}}}),
                comp("col", {"Column": {
                    "children": ["prompt", "sel", "ok"], "spacing": 12}}),
                comp("card", {"Card": {"child": "col"}}),
            ]),
            data("s2", "/form", [{"key": "title",
                                  "valueString": "Pick a cuisine"}]),
        ],
    }

    g["g03_selection_wrap"] = {
        "text_response": "Quick pick below.",
        "a2ui": [
            begin("s3", "card"),
            update("s3", [
                comp("q", lbl("Window or booth?")),
                comp("wrap", {"SelectionWrap": {
                    "selection": {"path": "/seating", "literalArray": []},
                    "items": sel_items(("Window", "opt_0"),
                                       ("Booth", "opt_1"),
                                       ("Bar", "opt_2")),
                    "maxSelections": 1}}),
                comp("go_label", lbl("Done")),
                comp("go", {"Button": {
                    "child": "go_label",
                    "action": {"name": "submit", "context": [
                        {"key": "seating",
                         "value": {"path": "/seating"}}]}}}),
                comp("col", {"Column": {
                    "children": ["q", "wrap", "go"], "spacing": 8}}),
                comp("card", {"Card": {"child": "col"}}),
            ]),
        ],
    }

    g["g04_slider"] = {
        "text_response": "How was it overall?",
        "a2ui": [
            begin("s4", "card"),
            update("s4", [
                comp("q", lbl({"path": "/form/title"})),
                comp("rate", {"TickSlider": {
                    "value": {"path": "/form/rating", "literalNumber": 3},
                    "min": 1, "max": 5, "divisions": 4,
                    "label": "Rating"}}),
                comp("send_label", lbl("Send rating")),
                comp("send", {"Button": {
                    "child": "send_label", "style": "primary",
                    "action": {"name": "rate", "context": [
                        {"key": "rating",
                         "value": {"path": "/form/rating"}}]}}}),
                comp("col", {"Column": {
                    "children": ["q", "rate", "send"], "spacing": 12}}),
                comp("card", {"Card": {"child": "col"}}),
            ]),
            data("s4", "/form", [
                {"key": "title", "valueString": "Rate your stay"},
                {"key": "rating", "valueNumber": 3},
            ]),
        ],
    }

    g["g05_datetime"] = {
        "text_response": "Pick a check-in date.",
        "a2ui": [
            begin("s5", "card"),
            update("s5", [
                comp("q", lbl("When do you arrive?")),
                comp("when", {"DateTimeInput": {
                    "value": {"path": "/form/checkin",
                              "literalString": "2026-09-01"},
                    "enableDate": True, "enableTime": False,
                    "firstDate": "2026-08-25",
                    "lastDate": "2026-12-31"}}),
                comp("ok_label", lbl("Set date")),
                comp("ok", {"Button": {
                    "child": "ok_label",
                    "action": {"name": "set_date", "context": [
                        {"key": "checkin",
                         "value": {"path": "/form/checkin"}}]}}}),
                comp("col", {"Column": {
                    "children": ["q", "when", "ok"], "spacing": 12}}),
                comp("card", {"Card": {"child": "col"}}),
            ]),
        ],
    }

    g["g06_selection_grid"] = {
        "text_response": "Here are the rooms with photos.",
        "a2ui": [
            begin("s6", "card"),
            update("s6", [
                comp("q", lbl("Choose a room")),
                comp("grid", {"SelectionGrid": {
                    "selection": {"path": "/room", "literalArray": []},
                    "items": [
                        {"label": "Garden view", "value": "opt_0",
                         "imageUrl": "https://img.example/garden.png"},
                        {"label": "Sea view", "value": "opt_1",
                         "imageUrl": "https://img.example/sea.png"},
                        {"label": "Courtyard", "value": "opt_2",
                         "imageUrl": "https://img.example/court.png"},
                        {"label": "Penthouse", "value": "opt_3",
                         "imageUrl": "https://img.example/pent.png"},
                    ],
                    "columns": 2, "maxSelections": 1}}),
                comp("ok_label", lbl("Choose")),
                comp("ok", {"Button": {
                    "child": "ok_label",
                    "action": {"name": "choose", "context": [
                        {"key": "room", "value": {"path": "/room"}}]}}}),
                comp("col", {"Column": {
                    "children": ["q", "grid", "ok"], "spacing": 12}}),
                comp("card", {"Card": {"child": "col"}}),
            ]),
        ],
    }

    g["g07_ordered_selection"] = {
        "text_response": "Rank your top two priorities.",
        "a2ui": [
            begin("s7", "card"),
            update("s7", [
                comp("q", lbl("What matters most?")),
                comp("rank", {"OrderedSelectionList": {
                    "selection": {"path": "/priorities", "literalArray": []},
                    "items": sel_items(("Price", "opt_0"),
                                       ("Location", "opt_1"),
                                       ("Quiet", "opt_2"),
                                       ("Breakfast", "opt_3")),
                    "minSelections": 1, "maxSelections": 2}}),
                comp("ok_label", lbl("Save order")),
                comp("ok", {"Button": {
                    "child": "ok_label",
                    "action": {"name": "save", "context": [
                        {"key": "priorities",
                         "value": {"path": "/priorities"}}]}}}),
                comp("col", {"Column": {
                    "children": ["q", "rank", "ok"], "spacing": 12}}),
                comp("card", {"Card": {"child": "col"}}),
            ]),
        ],
    }

    g["g08_action_selection"] = {
        "text_response": "Tap a topic to jump in.",
        "a2ui": [
            begin("s8", "card"),
            update("s8", [
                comp("q", lbl("Browse topics")),
                comp("menu", {"ActionSelectionList": {
                    "selection": {"path": "/topic", "literalArray": []},
                    "items": sel_items(("Check-in times", "opt_0"),
                                       ("Parking", "opt_1"),
                                       ("Pet policy", "opt_2")),
                    "action": {"name": "open_topic", "context": [
                        {"key": "topic", "value": {"path": "/topic"}}]}}}),
                comp("col", {"Column": {
                    "children": ["q", "menu"], "spacing": 8}}),
                comp("card", {"Card": {"child": "col"}}),
            ]),
        ],
    }

    g["g09_dropdown"] = {
        "text_response": "Pick a time slot from the list.",
        "a2ui": [
            begin("s9", "card"),
            update("s9", [
                comp("q", lbl("Available slots")),
                comp("slot", {"DropdownSelection": {
                    "selection": {"path": "/slot", "literalArray": []},
                    "items": sel_items(("18:00", "opt_0"), ("18:30", "opt_1"),
                                       ("19:00", "opt_2"), ("20:15", "opt_3")),
                    "placeholder": "Choose a time"}}),
                comp("ok_label", lbl("Reserve")),
                comp("ok", {"Button": {
                    "child": "ok_label", "style": "primary",
                    "action": {"name": "reserve", "context": [
                        {"key": "slot", "value": {"path": "/slot"}}]}}}),
                comp("col", {"Column": {
                    "children": ["q", "slot", "ok"], "spacing": 12}}),
                comp("card", {"Card": {"child": "col"}}),
            ]),
        ],
    }

    g["g10_keypad"] = {
        "text_response": "Enter your 4-digit code to confirm.",
        "a2ui": [
            begin("s10", "card"),
            update("s10", [
                comp("q", lbl("Confirmation code")),
                comp("keypad", {"PasswordKeypad": {
                    "value": {"path": "/pin"},
                    "action": {"name": "unlock", "context": [
                        {"key": "pin", "value": {"path": "/pin"}}]}}}),
                comp("col", {"Column": {
                    "children": ["q", "keypad"], "spacing": 8}}),
                comp("card", {"Card": {"child": "col"}}),
            ]),
            data("s10", "/", [{"key": "pin", "valueString": "0000"}]),
        ],
    }

    g["g11_tabs"] = {
        "text_response": "Everything about the trip, tabbed.",
        "a2ui": [
            begin("s11", "card"),
            update("s11", [
                comp("ov", lbl("Three nights, two museums, one show.")),
                comp("st", lbl("Day 1 arrival, day 2 old town, day 3 coast.")),
                comp("bu", lbl("Total so far: 410 including the hotel.")),
                comp("tabs", {"Tabs": {"tabItems": [
                    {"title": "Overview", "child": "ov"},
                    {"title": "Schedule", "child": "st"},
                    {"title": "Budget", "child": "bu"},
                ]}}),
                comp("card", {"Card": {"child": "tabs"}}),
            ]),
        ],
    }

    g["g12_carousel"] = {
        "text_response": "Swipe through the venue photos.",
        "a2ui": [
            begin("s12", "card"),
            update("s12", [
                comp("p1", {"Image": {"url": "https://img.example/v1.png",
                                      "size": "full", "alt": "Main hall"}}),
                comp("p2", {"Image": {"url": "https://img.example/v2.png",
                                      "size": "full", "alt": "Terrace"}}),
                comp("p3", {"Image": {"url": "https://img.example/v3.png",
                                      "size": "full", "alt": "Bar"}}),
                comp("strip", {"Carousel": {"children": ["p1", "p2", "p3"]}}),
                comp("card", {"Card": {"child": "strip"}}),
            ]),
        ],
    }

    g["g13_modal"] = {
        "text_response": "Full terms are behind the link.",
        "a2ui": [
            begin("s13", "card"),
            update("s13", [
                comp("peek", lbl("View cancellation policy")),
                comp("terms", {"MarkdownView": {
                    "text": "**Cancellation**\n\nFree until 48h before "
                            "arrival, then one night is charged."}}),
                comp("modal", {"FullScreenModal": {
                    "entryPointChild": "peek",
                    "contentChild": "terms"}}),
                comp("card", {"Card": {"child": "modal"}}),
            ]),
        ],
    }

    g["g14_label_rich"] = {
        "text_response": "Summary below.",
        "a2ui": [
            begin("s14", "col"),
            update("s14", [
                comp("h", lbl("Trip summary", size="headlineMedium")),
                comp("sub", lbl("Two travellers, three nights",
                                variant="secondary", size="bodySmall")),
                comp("rule", {"Divider": {"axis": "horizontal"}}),
                comp("pin", {"Icon": {"name": "local-two", "style": "filled",
                                      "size": "small"}}),
                comp("place", lbl("Old town, river side")),
                comp("col", {"Column": {
                    "children": ["h", "sub", "rule", "pin", "place"],
                    "spacing": 6}}),
            ]),
        ],
    }

    g["g15_markdown_progress"] = {
        "text_response": "Here's where the plan stands.",
        "a2ui": [
            begin("s15", "col"),
            update("s15", [
                comp("notes", {"MarkdownView": {
                    "text": "### Plan\n\n- [x] Flights\n- [ ] Hotel\n"
                            "- [ ] Dinner bookings"}}),
                comp("done", {"LinearProgress": {"value": 0.4,
                                                 "label": "Overall"}}),
                comp("spend", {"CircularProgress": {"value": 0.25,
                                                    "label": "Budget used"}}),
                comp("col", {"Column": {
                    "children": ["notes", "done", "spend"], "spacing": 10}}),
            ]),
        ],
    }

    g["g16_media_row"] = {
        "text_response": "The short walk, mapped out.",
        "a2ui": [
            begin("s16", "col"),
            update("s16", [
                comp("ic", {"Icon": {"name": "arrow-right", "style": "line"}}),
                comp("leg", lbl("Hotel to gallery, 12 minutes on foot")),
                comp("row", {"Row": {"children": ["ic", "leg"], "spacing": 6,
                                     "alignment": "center"}}),
                comp("map", {"Image": {"url": "https://img.example/walk.png",
                                       "size": "large",
                                       "alt": "Walking route"}}),
                comp("col", {"Column": {"children": ["row", "map"],
                                        "spacing": 8}}),
            ]),
        ],
    }

    g["g17_display_list"] = {
        "text_response": "Your evening, in order.",
        "a2ui": [
            begin("s17", "card"),
            update("s17", [
                comp("plan", {"OrderedDisplayList": {"items": [
                    {"label": "Aperitivo", "description": "Bar at 18:00"},
                    {"label": "Dinner", "description": "Cafe Rio at 19:30"},
                    {"label": "Concert", "description": "Doors at 21:00"},
                ]}}),
                comp("card", {"Card": {"child": "plan"}}),
            ]),
        ],
    }

    g["g18_booking_nested"] = {
        "text_response": "Double-check the details before I book.",
        "a2ui": [
            begin("s18", "card"),
            update("s18", [
                comp("h", lbl("Booking details", size="headlineSmall")),
                comp("hotel", lbl({"path": "/booking/hotel"})),
                comp("nights", lbl({"path": "/booking/nights_text"},
                                   variant="secondary")),
                comp("ok_label", lbl("Looks right")),
                comp("ok", {"Button": {
                    "child": "ok_label", "style": "primary",
                    "action": {"name": "confirm_booking", "context": [
                        {"key": "hotel", "value": {"path": "/booking/hotel"}},
                        {"key": "nights",
                         "value": {"path": "/booking/nights"}}]}}}),
                comp("col", {"Column": {
                    "children": ["h", "hotel", "nights", "ok"],
                    "spacing": 10}}),
                comp("card", {"Card": {"child": "col"}}),
            ]),
            data("s18", "/booking", [
                {"key": "hotel", "valueString": "Grand Plaza"},
                {"key": "nights", "valueNumber": 3},
                {"key": "nights_text", "valueString": "3 nights, late checkout"},
            ]),
        ],
    }

    g["g19_text_only"] = {
        "text_response": "Nothing to show for this one, but yes: the museum "
                         "is free on the first Sunday of the month.",
        "a2ui": [],
    }

    g["g20_delete_only"] = {
        "text_response": "All done, I've cleared the booking form.",
        "a2ui": [{"deleteSurface": {"surfaceId": "s_form"}}],
    }

    g["g21_template_list"] = {
        "text_response": "Today's headlines.",
        "a2ui": [
            begin("s21", "feed"),
            update("s21", [
                comp("row_tpl", lbl({"path": "title"})),
                comp("feed", {"Column": {
                    "template": {"child": "row_tpl",
                                 "dataPath": "/articles"},
                    "spacing": 6}}),
            ]),
            data("s21", "/articles/a1", [
                {"key": "title", "valueString": "Ferry line adds night runs"},
            ]),
            data("s21", "/articles/a2", [
                {"key": "title", "valueString": "Old town lights festival"},
            ]),
            data("s21", "/articles/a3", [
                {"key": "title", "valueString": "Rain expected on Friday"},
            ]),
        ],
    }

    g["g22_width_form"] = {
        "text_response": "One form for the whole request.",
        "a2ui": [
            begin("s22", "card"),
            update("s22", [
                comp("h", lbl({"path": "/form/title"}, size="headlineSmall")),
                comp("q1", lbl("Seating", variant="secondary",
                               size="bodySmall")),
                comp("seat", {"SelectionWrap": {
                    "selection": {"path": "/form/seating",
                                  "literalArray": []},
                    "items": sel_items(("Window", "opt_0"),
                                       ("Booth", "opt_1")),
                    "maxSelections": 1}}),
                comp("q2", lbl("Party size", variant="secondary",
                               size="bodySmall")),
                comp("size", {"TickSlider": {
                    "value": {"path": "/form/party", "literalNumber": 2},
                    "min": 1, "max": 8, "divisions": 7,
                    "label": "Guests"}}),
                comp("q3", lbl("Date", variant="secondary",
                               size="bodySmall")),
                comp("date", {"DateTimeInput": {
                    "value": {"path": "/form/date",
                              "literalString": "2026-09-05"},
                    "enableDate": True, "enableTime": False}}),
                comp("rule", {"Divider": {"axis": "horizontal"}}),
                comp("ok_label", lbl("Request table")),
                comp("ok", {"Button": {
                    "child": "ok_label", "style": "primary",
                    "action": {"name": "request", "context": [
                        {"key": "seating",
                         "value": {"path": "/form/seating"}},
                        {"key": "party", "value": {"path": "/form/party"}},
                        {"key": "date", "value": {"path": "/form/date"}}]}}}),
                comp("col", {"Column": {
                    "children": ["h", "q1", "seat", "q2", "size", "q3",
                                 "date", "rule", "ok"],
                    "spacing": 8}}),
                comp("card", {"Card": {"child": "col"}}),
            ]),
            data("s22", "/form", [
                {"key": "title", "valueString": "Table request"},
            ]),
        ],
    }

    return g


# ---------------------------------------------------------------------------
# Defect documents: each trips exactly one lint code.


def defect_fixtures() -> dict[str, object]:
    d: dict[str, object] = {}

    d["FORMAT_PARSE"] = '{"text_response": "oops", "a2ui": ['

    d["FORMAT_SHAPE"] = {"text_response": "no payload here"}

    d["STRUCT_ACTION_KEYS"] = {
        "text_response": "two actions in one message",
        "a2ui": [
            {"beginRendering": {"surfaceId": "s1", "root": "t"},
             "deleteSurface": {"surfaceId": "s1"}},
            update("s1", [comp("t", lbl("Hi"))]),
        ],
    }

    d["STRUCT_UNKNOWN_COMPONENT"] = {
        "text_response": "typo in the type name",
        "a2ui": [
            begin("s1", "b"),
            update("s1", [comp("b", {"Lable": {"text": "Hi"}})]),
        ],
    }

    d["STRUCT_DUPLICATE_ID"] = {
        "text_response": "same id twice",
        "a2ui": [
            begin("s1", "col"),
            update("s1", [
                comp("t", lbl("First")),
                comp("t", lbl("Second")),
                comp("col", {"Column": {"children": ["t"]}}),
            ]),
        ],
    }

    d["STRUCT_REQUIRED"] = {
        "text_response": "label without text",
        "a2ui": [
            begin("s1", "t"),
            update("s1", [comp("t", {"Label": {"variant": "primary"}})]),
        ],
    }

    d["STRUCT_ENUM"] = {
        "text_response": "unregistered icon",
        "a2ui": [
            begin("s1", "ic"),
            update("s1", [comp("ic", {"Icon": {"name": "sparkle",
                                               "style": "line"}})]),
        ],
    }

    d["STRUCT_UNKNOWN_PROP"] = {
        "text_response": "label with a made-up property",
        "a2ui": [
            begin("s1", "t"),
            update("s1", [comp("t", {"Label": {"text": "Hi",
                                               "italic": True}})]),
        ],
    }

    d["STRUCT_OPAQUE_VALUE"] = {
        "text_response": "null where a value belongs",
        "a2ui": [
            begin("s1", "t"),
            update("s1", [comp("t", {"Label": {"text": None}})]),
        ],
    }

    d["STRUCT_VALUE_TYPE"] = {
        "text_response": "string literal in a numeric slot",
        "a2ui": [
            begin("s1", "col"),
            update("s1", [
                comp("amount", {"TickSlider": {
                    "value": {"literalString": "3"}, "max": 10}}),
                comp("blbl", lbl("Send")),
                comp("b", {"Button": {"child": "blbl",
                                      "action": {"name": "send",
                                                 "context": []}}}),
                comp("col", {"Column": {"children": ["amount", "b"]}}),
            ]),
        ],
    }

    d["BIND_PATH_SYNTAX"] = {
        "text_response": "path with a space",
        "a2ui": [
            begin("s1", "t"),
            update("s1", [comp("t", lbl({"path": "/ti tle"}))]),
        ],
    }

    d["BIND_DANGLING_REF"] = {
        "text_response": "child that is never defined",
        "a2ui": [
            begin("s1", "col"),
            update("s1", [
                comp("lbl", lbl("Hi")),
                comp("col", {"Column": {"children": ["lbl", "ghost"]}}),
            ]),
        ],
    }

    d["BIND_TYPE"] = {
        "text_response": "string written into a numeric binding",
        "a2ui": [
            begin("s1", "col"),
            update("s1", [
                comp("rate", {"TickSlider": {
                    "value": {"path": "/rating", "literalNumber": 3},
                    "max": 5}}),
                comp("blbl", lbl("Send")),
                comp("b", {"Button": {"child": "blbl",
                                      "action": {"name": "send",
                                                 "context": []}}}),
                comp("col", {"Column": {"children": ["rate", "b"]}}),
            ]),
            data("s1", "/", [{"key": "rating", "valueString": "3"}]),
        ],
    }

    d["BIND_UNWRITTEN"] = {
        "text_response": "binding nobody writes",
        "a2ui": [
            begin("s1", "t"),
            update("s1", [comp("t", lbl({"path": "/title"}))]),
        ],
    }

    d["BIND_SELECTION_PREWRITTEN"] = {
        "text_response": "selection seeded by the model",
        "a2ui": [
            begin("s1", "col"),
            update("s1", [
                comp("sel", {"SelectionWrap": {
                    "selection": {"path": "/choice", "literalArray": []},
                    "items": sel_items(("A", "opt_0"), ("B", "opt_1"))}}),
                comp("blbl", lbl("Go")),
                comp("b", {"Button": {"child": "blbl",
                                      "action": {"name": "go",
                                                 "context": []}}}),
                comp("col", {"Column": {"children": ["sel", "b"]}}),
            ]),
            data("s1", "/", [{"key": "choice", "valueString": "opt_1"}]),
        ],
    }

    d["SEM_ROOT_UNDEFINED"] = {
        "text_response": "root id points nowhere",
        "a2ui": [
            begin("s1", "missing"),
            update("s1", [comp("lbl", lbl("Hi"))]),
        ],
    }

    d["SEM_NO_SUBMIT"] = {
        "text_response": "input with no way out",
        "a2ui": [
            begin("s1", "sel"),
            update("s1", [
                comp("sel", {"SelectionWrap": {
                    "selection": {"path": "/choice", "literalArray": []},
                    "items": sel_items(("A", "opt_0"), ("B", "opt_1"))}}),
            ]),
        ],
    }

    d["SEM_MULTI_SURFACE"] = {
        "text_response": "two surfaces in one turn",
        "a2ui": [
            begin("s1", "t1"),
            update("s1", [comp("t1", lbl("First"))]),
            begin("s2", "t2"),
            update("s2", [comp("t2", lbl("Second"))]),
        ],
    }

    d["SEM_EMPTY_VALUE"] = {
        "text_response": "blank string written to the model",
        "a2ui": [
            begin("s1", "t"),
            update("s1", [comp("t", lbl({"path": "/title"}))]),
            data("s1", "/", [{"key": "title", "valueString": ""}]),
        ],
    }

    d["SEM_UNBEGUN_SURFACE"] = {
        "text_response": "update for a surface that never began",
        "a2ui": [
            update("s9", [comp("t", lbl("hi"))]),
        ],
    }

    return d


# ---------------------------------------------------------------------------
# Render-critical documents: each violates exactly the named rules.


def renderguard_fixtures() -> dict[str, tuple[dict, list[str]]]:
    r: dict[str, tuple[dict, list[str]]] = {}

    r["rc1_selection_no_array"] = ({
        "text_response": "selection bound without a literalArray",
        "a2ui": [
            begin("s1", "col"),
            update("s1", [
                comp("sel", {"SelectionList": {
                    "selection": {"path": "/sel"},
                    "items": sel_items(("A", "opt_0"), ("B", "opt_1"))}}),
                comp("blbl", lbl("Go")),
                comp("b", {"Button": {"child": "blbl",
                                      "action": {"name": "go",
                                                 "context": []}}}),
                comp("col", {"Column": {"children": ["sel", "b"]}}),
            ]),
        ],
    }, ["RC1"])

    r["rc2_slider_in_row"] = ({
        "text_response": "slider directly inside a row",
        "a2ui": [
            begin("s1", "row"),
            update("s1", [
                comp("lbl", lbl("Amount")),
                comp("slide", {"TickSlider": {
                    "value": {"path": "/amount", "literalNumber": 1},
                    "max": 10}}),
                comp("blbl", lbl("Go")),
                comp("b", {"Button": {"child": "blbl",
                                      "action": {"name": "go",
                                                 "context": []}}}),
                comp("row", {"Row": {"children": ["lbl", "slide", "b"]}}),
            ]),
        ],
    }, ["RC2"])

    r["rc3_two_surfaces"] = ({
        "text_response": "touches two surfaces",
        "a2ui": [
            begin("s1", "t"),
            update("s1", [comp("t", lbl("Hi"))]),
            {"deleteSurface": {"surfaceId": "s2"}},
        ],
    }, ["RC3"])

    r["rc4_context_dict"] = ({
        "text_response": "action context as a dictionary",
        "a2ui": [
            begin("s1", "col"),
            update("s1", [
                comp("blbl", lbl("Go")),
                comp("b", {"Button": {
                    "child": "blbl",
                    "action": {"name": "go", "context": {"key": "v"}}}}),
                comp("col", {"Column": {"children": ["b"]}}),
            ]),
        ],
    }, ["RC4"])

    r["rc5_wrapped_item_value"] = ({
        "text_response": "item value wrapped in a literal object",
        "a2ui": [
            begin("s1", "col"),
            update("s1", [
                comp("sel", {"SelectionWrap": {
                    "selection": {"path": "/pick", "literalArray": []},
                    "items": [
                        {"label": "A", "value": {"literalString": "opt_0"}},
                        {"label": "B", "value": "opt_1"},
                    ]}}),
                comp("blbl", lbl("Go")),
                comp("b", {"Button": {"child": "blbl",
                                      "action": {"name": "go",
                                                 "context": []}}}),
                comp("col", {"Column": {"children": ["sel", "b"]}}),
            ]),
        ],
    }, ["RC5"])

    r["rc6_bad_dates"] = ({
        "text_response": "window bounds that are not ISO dates",
        "a2ui": [
            begin("s1", "col"),
            update("s1", [
                comp("when", {"DateTimeInput": {
                    "value": {"path": "/when",
                              "literalString": "2026-09-01"},
                    "enableDate": True,
                    "firstDate": "tomorrow"}}),
                comp("blbl", lbl("Go")),
                comp("b", {"Button": {"child": "blbl",
                                      "action": {"name": "go",
                                                 "context": []}}}),
                comp("col", {"Column": {"children": ["when", "b"]}}),
            ]),
        ],
    }, ["RC6"])

    r["rc7_data_without_path"] = ({
        "text_response": "data update without a path",
        "a2ui": [
            begin("s1", "t"),
            update("s1", [comp("t", lbl({"path": "/title"}))]),
            {"dataModelUpdate": {"surfaceId": "s1", "contents": [
                {"key": "title", "valueString": "Hi"}]}},
        ],
    }, ["RC7"])

    r["rc1_rc4_combo"] = ({
        "text_response": "two render-critical defects at once",
        "a2ui": [
            begin("s1", "col"),
            update("s1", [
                comp("sel", {"SelectionList": {
                    "selection": {"path": "/sel"},
                    "items": sel_items(("A", "opt_0"), ("B", "opt_1"))}}),
                comp("blbl", lbl("Go")),
                comp("b", {"Button": {
                    "child": "blbl",
                    "action": {"name": "go", "context": {"key": "v"}}}}),
                comp("col", {"Column": {"children": ["sel", "b"]}}),
            ]),
        ],
    }, ["RC1", "RC4"])

    return r


# ---------------------------------------------------------------------------
# Desk-scale benchmark pack


def bench_tasks() -> list[dict]:
    return [
        {"task_id": "t01_hotel_params", "family": "atomic",
         "scenario_id": "param_collection", "dataset": "multiwoz",
         "task_description": "Collect the missing hotel constraints (area, "
                             "price band, parking) with appropriate widgets.",
         "difficulty_level": "easy",
         "dialogue_context": [
             {"speaker": "user", "text": "I need a hotel this weekend."},
             {"speaker": "assistant",
              "text": "Happy to help. Any preferences so far?"}],
         "user_message": "Honestly, just ask me the right questions."},
        {"task_id": "t02_train_info", "family": "atomic",
         "scenario_id": "info_grounding", "dataset": "sgd",
         "task_description": "Present the three matching trains with times "
                             "and prices so the user can compare them.",
         "difficulty_level": "easy",
         "dialogue_context": [
             {"speaker": "user",
              "text": "Trains from Cambridge to London tomorrow morning?"}],
         "user_message": "Show me what's available before 9am."},
        {"task_id": "t03_confirm_booking", "family": "atomic",
         "scenario_id": "booking_confirmation", "dataset": "multiwoz",
         "task_description": "Summarize the pending reservation and ask for "
                             "an explicit confirm or cancel.",
         "difficulty_level": "medium",
         "dialogue_context": [
             {"speaker": "user",
              "text": "Book the Grand Plaza, 3 nights from Friday, 2 adults."},
             {"speaker": "assistant",
              "text": "Found availability at 180 per night."}],
         "user_message": "Go ahead if that's the total I think it is."},
        {"task_id": "t04_flight_tradeoff", "family": "atomic",
         "scenario_id": "decision_support", "dataset": "sgd",
         "task_description": "Lay out the cheap-but-long vs fast-but-pricey "
                             "flight options and help the user weigh them.",
         "difficulty_level": "medium",
         "dialogue_context": [
             {"speaker": "user",
              "text": "Two options left: 6h layover at 210, or direct at 340."}],
         "user_message": "I keep going back and forth. Help me decide."},
        {"task_id": "t05_mood_scale", "family": "atomic",
         "scenario_id": "self_assessment", "dataset": "esconv",
         "task_description": "Invite the user to rate their current stress "
                             "level on a bounded scale before advising.",
         "difficulty_level": "easy",
         "dialogue_context": [
             {"speaker": "user",
              "text": "Work has been piling up and I can't sleep."}],
         "user_message": "I don't even know how bad it is, honestly."},
        {"task_id": "t06_drink_plan", "family": "atomic",
         "scenario_id": "action_commitment", "dataset": "annomi",
         "task_description": "Help the user commit to one concrete step this "
                             "week and capture when they'll do it.",
         "difficulty_level": "medium",
         "dialogue_context": [
             {"speaker": "user",
              "text": "I know I should cut back on the weekend drinking."},
             {"speaker": "assistant",
              "text": "What feels doable without being miserable?"}],
         "user_message": "Maybe skipping Friday? If I actually stick to it."},
        {"task_id": "t07_trip_organizer", "family": "width",
         "scenario_id": "multi_part_organization", "dataset": "esconv",
         "task_description": "Organize coping strategies into morning, "
                             "workday, and evening sections in one surface.",
         "difficulty_level": "hard",
         "dialogue_context": [
             {"speaker": "user",
              "text": "The therapist gave me like eight techniques and I "
                      "can't keep track of any of them."}],
         "user_message": "Can you lay them out so the day has a shape?"},
        {"task_id": "t08_tie_break", "family": "width",
         "scenario_id": "tie_breaking", "dataset": "sgd",
         "task_description": "Both restaurants scored identically; surface "
                             "the differentiating attributes and force a pick.",
         "difficulty_level": "hard",
         "dialogue_context": [
             {"speaker": "user",
              "text": "Both places have 4.6 stars and the same price range."}],
         "user_message": "Dead tie. Break it for me with whatever's left."},
        {"task_id": "t09_smalltalk", "family": "atomic",
         "scenario_id": "no_ui_chat", "dataset": "annomi",
         "task_description": "Plain conversational reply; interface elements "
                             "would be intrusive here.",
         "difficulty_level": "easy",
         "dialogue_context": [
             {"speaker": "user",
              "text": "Thanks for earlier, it actually helped."}],
         "user_message": "Anyway, how does this thing even work?"},
        {"task_id": "t10_hotel_pick", "family": "width",
         "scenario_id": "decision_support", "dataset": "multiwoz",
         "task_description": "Compare the three shortlisted hotels across "
                             "price, location, and breakfast in one view.",
         "difficulty_level": "medium",
         "dialogue_context": [
             {"speaker": "user",
              "text": "Down to the Plaza, the Riverside, and that B&B."}],
         "user_message": "Put them side by side for me."},
        {"task_id": "t11_booking_flow", "family": "depth",
         "scenario_id": "param_collection", "dataset": "multiwoz",
         "task_description": "Multi-step restaurant booking: collect the "
                             "basics, refine, then confirm, updating one "
                             "surface across steps.",
         "difficulty_level": "hard",
         "dialogue_context": [
             {"speaker": "user", "text": "Let's book somewhere for Saturday."}],
         "steps": [
             "Start with whatever you need to know first.",
             "Italian, four of us. What else?",
             "8pm works. Lock it in."]},
        {"task_id": "t12_habit_ladder", "family": "depth",
         "scenario_id": "action_commitment", "dataset": "esconv",
         "task_description": "Three-step commitment ladder: pick a goal, "
                             "size it down, then schedule the first attempt.",
         "difficulty_level": "hard",
         "dialogue_context": [
             {"speaker": "user",
              "text": "I want to get my evenings back from my phone."}],
         "steps": [
             "Where would you even start with something like that?",
             "Okay, the no-phone-at-dinner one sounds doable.",
             "Set it up for tonight then."]},
    ]


# ---------------------------------------------------------------------------
# Annotated dialogues for the corpus generator


def seed_dialogues() -> list[dict]:
    return [
        {"dialogue_id": "mw_hotel_01", "source": "multiwoz", "turns": [
            {"speaker": "user", "text": "Hi, I need a hotel in the centre."},
            {"speaker": "user", "text": "Nothing too fancy."},
            {"speaker": "assistant",
             "text": "Let me grab the basics for the search.",
             "action": {"kind": "collect_constraints",
                        "prompt": "Hotel search",
                        "slots": [
                            {"name": "area", "value_type": "categorical",
                             "prompt": "Area",
                             "options": ["Centre", "North", "South"]},
                            {"name": "nights",
                             "value_type": "numeric_ordinal",
                             "prompt": "Nights",
                             "range": {"min": 1, "max": 7}}]}},
            {"speaker": "user", "text": "Centre, two nights."},
            {"speaker": "assistant",
             "text": "Shall I book the Alexandra for those dates?",
             "action": {"kind": "confirm_decision", "phase": "update",
                        "prompt": "Book the Alexandra?",
                        "options": ["Book it", "Keep looking"]}},
            {"speaker": "user", "text": "Book it."},
            {"speaker": "assistant", "text": "Done, reference 7Q2K.",
             "action": {"kind": "confirm_decision", "phase": "complete"}},
        ]},
        {"dialogue_id": "mw_food_02", "source": "multiwoz", "turns": [
            {"speaker": "user", "text": "Somewhere to eat near the theatre?"},
            {"speaker": "assistant",
             "text": "A few different directions we could go.",
             "action": {"kind": "present_options",
                        "prompt": "Choose a restaurant",
                        "slots": [{"name": "restaurant",
                                   "value_type": "categorical",
                                   "options": ["The Golden Wok, Sichuan",
                                               "Cafe Rio, modern Italian",
                                               "The Oak Room, steakhouse",
                                               "Bombay Lane, south Indian",
                                               "Juniper, small plates"]}]}},
            {"speaker": "user", "text": "Cafe Rio sounds right."},
            {"speaker": "assistant",
             "text": "Nice choice, their terrace is lovely this month."},
        ]},
        {"dialogue_id": "sgd_flight_03", "source": "sgd", "turns": [
            {"speaker": "user", "text": "I need a flight to Denver."},
            {"speaker": "assistant",
             "text": "What date should I search?",
             "action": {"kind": "collect_constraints",
                        "prompt": "Travel date",
                        "slots": [{"name": "depart", "value_type": "temporal",
                                   "mode": "date",
                                   "prompt": "Departure date"}]}},
            {"speaker": "user", "text": "The 14th."},
            {"speaker": "assistant", "text": "Found three fares under 300."},
        ]},
        {"dialogue_id": "sgd_dentist_04", "source": "sgd", "turns": [
            {"speaker": "user", "text": "Book me a dentist appointment."},
            {"speaker": "assistant",
             "text": "When suits you, and is the hygienist add-on wanted?",
             "action": {"kind": "collect_constraints",
                        "prompt": "Appointment details",
                        "slots": [
                            {"name": "when", "value_type": "temporal",
                             "mode": "datetime", "prompt": "Time"},
                            {"name": "hygienist", "value_type": "boolean",
                             "prompt": "Add hygienist?"}]}},
            {"speaker": "user", "text": "Tuesday morning, yes add it."},
            {"speaker": "assistant", "text": "Booked for Tuesday at 9:40."},
        ]},
        {"dialogue_id": "esc_support_05", "source": "esconv", "turns": [
            {"speaker": "user",
             "text": "Everything feels like too much lately."},
            {"speaker": "assistant",
             "text": "That sounds heavy. Want to pick one thread to pull on?",
             "action": {"kind": "guided_selection",
                        "prompt": "Where should we start?",
                        "slots": [{"name": "topic",
                                   "value_type": "categorical",
                                   "options": ["Workload and deadlines",
                                               "Sleep and evenings",
                                               "A specific relationship",
                                               "Money worries",
                                               "Something else entirely"]}]}},
            {"speaker": "user", "text": "Sleep, mostly."},
            {"speaker": "assistant",
             "text": "Then let's keep tonight small and concrete."},
        ]},
        {"dialogue_id": "esc_mood_06", "source": "esconv", "turns": [
            {"speaker": "user", "text": "Bad week. Just checking in."},
            {"speaker": "assistant",
             "text": "Glad you did. Where's the needle today?",
             "action": {"kind": "confidence_elicitation",
                        "prompt": "Today's check-in",
                        "slots": [{"name": "mood",
                                   "value_type": "numeric_ordinal",
                                   "prompt": "Mood",
                                   "range": {"min": 1, "max": 10}}]}},
            {"speaker": "user", "text": "About a four."},
            {"speaker": "assistant",
             "text": "A four after this week is not nothing."},
        ]},
        {"dialogue_id": "anno_drink_07", "source": "annomi", "turns": [
            {"speaker": "user",
             "text": "My doctor keeps bringing up my drinking."},
            {"speaker": "assistant",
             "text": "How ready do you feel to change anything right now?",
             "action": {"kind": "confidence_elicitation",
                        "prompt": "Readiness check",
                        "slots": [{"name": "readiness",
                                   "value_type": "numeric_ordinal",
                                   "prompt": "Readiness",
                                   "range": {"min": 1, "max": 10}}]}},
            {"speaker": "user", "text": "Six, maybe seven on good days."},
            {"speaker": "assistant",
             "text": "That's workable. When could a first dry evening land?",
             "action": {"kind": "action_planning", "phase": "update",
                        "prompt": "First dry evening",
                        "slots": [{"name": "first_try",
                                   "value_type": "temporal",
                                   "mode": "date",
                                   "prompt": "Pick a day"}]}},
            {"speaker": "user", "text": "Thursday."},
            {"speaker": "assistant", "text": "Thursday it is, I'll note it.",
             "action": {"kind": "action_planning", "phase": "complete"}},
        ]},
        {"dialogue_id": "esc_reflect_09", "source": "esconv", "turns": [
            {"speaker": "user",
             "text": "I snapped at my sister again and I feel awful."},
            {"speaker": "assistant",
             "text": "Rough. Sometimes it helps to look at what was "
                     "underneath it. Pick whichever fits best.",
             "action": {"kind": "reflection_support",
                        "prompt": "What was going on underneath?",
                        "slots": [{"name": "trigger",
                                   "value_type": "categorical",
                                   "options": ["I was already exhausted",
                                               "She touched a sore spot",
                                               "It wasn't about her at all",
                                               "I honestly don't know yet"]}]}},
            {"speaker": "user", "text": "Exhausted, definitely."},
            {"speaker": "assistant",
             "text": "Then the apology can wait until you've slept."},
        ]},
        {"dialogue_id": "anno_goal_08", "source": "annomi", "turns": [
            {"speaker": "user", "text": "I want to move more, that's all."},
            {"speaker": "assistant",
             "text": "Pick the flavour that sounds least annoying.",
             "action": {"kind": "present_options",
                        "prompt": "Pick a start",
                        "slots": [{"name": "activity",
                                   "value_type": "categorical",
                                   "options": ["Walks", "Cycling",
                                               "Swimming", "Gym"]}]}},
            {"speaker": "user", "text": "Walks, I guess."},
            {"speaker": "assistant",
             "text": "Walks it is. Morning or evening, we can sort later."},
        ]},
    ]


# ---------------------------------------------------------------------------
# Event-parity cases


def parity_cases(golden: dict[str, dict]) -> list[dict]:
    cases = [
        {"name": "p01_button_literal_context",
         "doc": golden["g01_card_basic"],
         "interactions": [
             {"surfaceId": "s1", "componentId": "btn", "userValues": {}}]},
        {"name": "p02_selection_capture",
         "doc": golden["g02_selection_confirm"],
         "interactions": [
             {"surfaceId": "s2", "componentId": "ok",
              "userValues": {"/form/cuisine": ["opt_1"]}}]},
        {"name": "p03_keypad_value",
         "doc": golden["g10_keypad"],
         "interactions": [
             {"surfaceId": "s10", "componentId": "keypad",
              "userValues": {"/pin": "9876"}},
             {"surfaceId": "s10", "componentId": "keypad",
              "userValues": {"/pin": "1234"}}]},
        {"name": "p04_multi_path_context",
         "doc": golden["g22_width_form"],
         "interactions": [
             {"surfaceId": "s22", "componentId": "ok",
              "userValues": {"/form/seating": ["opt_1"],
                             "/form/party": 6,
                             "/form/date": "2026-09-12"}}]},
    ]
    out = []
    for case in cases:
        resp = parse_response(json.dumps(case["doc"]))
        proc = Processor()
        proc.apply_response(resp)
        events = []
        for step in case["interactions"]:
            event = proc.dispatch_action(step["surfaceId"],
                                         step["componentId"],
                                         step.get("userValues") or None)
            events.append(event.to_json())
        out.append({
            "name": case["name"],
            "messages": json.loads(serialize_response(resp))["a2ui"],
            "interactions": case["interactions"],
            "expectedEvents": events,
        })
    return out


# ---------------------------------------------------------------------------


def write_canonical(path: Path, doc: dict) -> str:
    canonical = serialize_response(parse_response(json.dumps(doc)))
    path.write_text(canonical + "\n")
    return canonical


def main() -> int:
    for sub in ("golden", "defects", "renderguard", "tasks", "parity",
                "dialogues"):
        (OUT / sub).mkdir(parents=True, exist_ok=True)

    golden = golden_fixtures()
    assert len(golden) == 22, len(golden)
    for name, doc in sorted(golden.items()):
        canonical = write_canonical(OUT / "golden" / f"{name}.json", doc)
        report = lint_text(canonical)
        if not report.is_clean:
            print(f"golden {name} is not clean:\n{report.compact()}")
            return 1
        rc = render_check(report.response)
        if not rc.passed:
            print(f"golden {name} fails render checks:\n{rc.compact()}")
            return 1
    print(f"golden: {len(golden)} documents, all clean")

    defects = defect_fixtures()
    manifest = []
    for code, doc in sorted(defects.items()):
        path = OUT / "defects" / f"{code}.json"
        if isinstance(doc, str):
            path.write_text(doc)
            text = doc
        else:
            text = json.dumps(doc, indent=1)
            path.write_text(text + "\n")
        report = lint_text(text)
        codes = [i.code for i in report.issues]
        if codes != [code]:
            print(f"defect {code} trips {codes}, expected [{code}]")
            return 1
        manifest.append({"code": code, "file": f"{code}.json",
                         "location": report.issues[0].location})
    (OUT / "defects" / "manifest.json").write_text(
        json.dumps(manifest, indent=1) + "\n")
    print(f"defects: {len(defects)} documents, each trips exactly its code")

    rcs = renderguard_fixtures()
    rc_manifest = []
    for name, (doc, expected) in sorted(rcs.items()):
        path = OUT / "renderguard" / f"{name}.json"
        path.write_text(json.dumps(doc, indent=1) + "\n")
        resp = parse_response(json.dumps(doc))
        report = render_check(resp)
        if report.rules_failed() != expected:
            print(f"renderguard {name} fails {report.rules_failed()}, "
                  f"expected {expected}")
            return 1
        rc_manifest.append({"name": name, "file": f"{name}.json",
                            "rules": expected})
    (OUT / "renderguard" / "manifest.json").write_text(
        json.dumps(rc_manifest, indent=1) + "\n")
    print(f"renderguard: {len(rcs)} documents with exact rule sets")

    tasks = bench_tasks()
    lines = [json.dumps(t, ensure_ascii=False) for t in tasks]
    (OUT / "tasks" / "desk12.jsonl").write_text("\n".join(lines) + "\n")
    from a2uikit.bench import load_tasks
    loaded = load_tasks(OUT / "tasks" / "desk12.jsonl")
    assert len(loaded) == 12
    scenarios = {t.scenario_id for t in loaded}
    families = {t.family for t in loaded}
    datasets = {t.dataset for t in loaded}
    assert len(scenarios) == 9 and len(families) == 3 and len(datasets) == 4
    print(f"tasks: {len(loaded)} tasks, {len(scenarios)} scenarios, "
          f"{len(families)} families, {len(datasets)} datasets")

    dialogues = seed_dialogues()
    lines = [json.dumps(d, ensure_ascii=False) for d in dialogues]
    (OUT / "dialogues" / "seed.jsonl").write_text("\n".join(lines) + "\n")
    samples = build_samples(dialogues)
    ui = sum(1 for s in samples if s.is_ui_turn)
    print(f"dialogues: {len(dialogues)} dialogues -> {len(samples)} samples "
          f"({ui} UI), all validated")

    for case in parity_cases(golden):
        path = OUT / "parity" / f"{case['name']}.json"
        path.write_text(json.dumps(case, indent=1) + "\n")
    print("parity: 4 event-contract cases frozen")

    return 0


if __name__ == "__main__":
    sys.exit(main())
