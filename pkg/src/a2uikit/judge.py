"""Judge prompt assembly and strict reply handling.

Prompt templates are bundled text resources with ``{token}`` placeholders.
Assembly is literal token substitution (never str.format), so judge prompts
are byte-stable: the same inputs produce the same prompt, and a template
edit cannot silently change escaping behavior. Literal braces in templates
are doubled (``{{`` / ``}}``).

Judge replies must be JSON carrying every expected dimension as an integer
1..5, either directly or as ``{"score": n, "evidence": ...}``. Anything
else (omissions, floats, booleans, out-of-range, prose) is rejected and
retried; after the retry budget the sample is marked as a judge failure and
excluded from that level's aggregate.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any, Callable

from a2uikit.catalog import Catalog, load_catalog
from a2uikit.clients import GeneratorUnavailable
from a2uikit.protocol import (
    AssistantResponse,
    BeginRendering,
    DataModelUpdate,
    DeleteSurface,
    SurfaceUpdate,
)
from a2uikit.scoring import L2_DIMS as L2_EXPECTED
from a2uikit.scoring import L3_DIMS as L3_EXPECTED
from a2uikit.scoring import V_DIMS as V_EXPECTED

JUDGE_RETRY_ATTEMPTS = 3

_TEMPLATE_NAMES = ("system_minimal", "system_full", "judge_l2", "judge_l3",
                   "judge_v")


class MissingPlaceholder(KeyError):
    """A template token had no value supplied during assembly."""


class JudgeReplyError(ValueError):
    """The judge reply is not a valid score payload."""


def load_template(name: str, root_dir: str | None = None) -> str:
    if name not in _TEMPLATE_NAMES:
        raise KeyError(f"unknown template '{name}'")
    if root_dir is not None:
        return Path(root_dir).joinpath(f"{name}.md").read_text()
    path = resources.files("a2uikit").joinpath(f"resources/prompts/{name}.md")
    return path.read_text()


def assemble_judge_prompt(template: str, values: dict[str, str]) -> str:
    """Fill ``{token}`` placeholders; doubled braces are literal.

    A left-to-right scan, so ``{x}}}`` reads as the placeholder ``{x}``
    followed by a literal brace. A blind replace of ``}}`` first would
    steal the placeholder's closing brace.
    """
    out: list[str] = []
    i, n = 0, len(template)
    while i < n:
        if template.startswith("{{", i):
            out.append("{")
            i += 2
        elif template.startswith("}}", i):
            out.append("}")
            i += 2
        elif template[i] == "{":
            end = template.find("}", i)
            token = template[i + 1:end] if end >= 0 else template[i + 1:]
            if end < 0 or token not in values:
                raise MissingPlaceholder(token)
            out.append(str(values[token]))
            i = end + 1
        else:
            out.append(template[i])
            i += 1
    return "".join(out)


def step_line(step: int | None) -> str:
    """Step marker for multi-step tasks; empty for single-shot ones."""
    if step is None:
        return ""
    return f"- Step: {step:02d}\n"


def format_dialogue_context(turns: list[dict[str, str]]) -> str:
    if not turns:
        return "(no prior turns)"
    return "\n".join(f"{t['speaker']}: {t['text']}" for t in turns)


def component_schema_context(catalog: Catalog | None = None,
                             subset: list[str] | None = None) -> str:
    """JSON schema digest of the component catalog for prompt embedding."""
    catalog = catalog or load_catalog()
    names = subset if subset is not None else catalog.names()
    out = {}
    for name in names:
        schema = catalog.get(name)
        if schema is None:
            continue
        fields = {}
        for f in schema.fields.values():
            entry: dict[str, Any] = {"kind": f.kind}
            if f.value_type:
                entry["type"] = f.value_type
            if f.required:
                entry["required"] = True
            values = catalog.enum_values_for(f)
            if values and f.enum_ref != "icons":
                entry["oneOf"] = list(values)
            if f.enum_ref == "icons":
                entry["oneOf"] = "registered icon names"
            fields[f.name] = entry
        out[name] = {"role": schema.role, "fields": fields}
    return json.dumps(out, indent=1)


def summarize_a2ui(resp: AssistantResponse, *, max_components: int = 10) -> str:
    """One-line bracketed digest of the UI messages in a response.

    Used both as judge context and as the assistant-turn stand-in when a
    conversation is rolled forward without replaying raw payloads.
    """
    if not resp.a2ui:
        return "[A2UI: none]"
    parts: list[str] = []
    for m in resp.a2ui:
        body = m.body
        if isinstance(body, BeginRendering):
            parts.append(f"begin {body.surface_id} root={body.root}")
        elif isinstance(body, SurfaceUpdate):
            comps = [f"{c.type_name}({c.id})" for c in body.components]
            shown = comps[:max_components]
            if len(comps) > max_components:
                shown.append(f"+{len(comps) - max_components} more")
            parts.append(f"update {body.surface_id}: " + ", ".join(shown))
        elif isinstance(body, DataModelUpdate):
            keys = [e.key for e in body.contents if e.key]
            parts.append(f"data {body.surface_id} {body.path or '(no path)'}: "
                         + ", ".join(keys))
        elif isinstance(body, DeleteSurface):
            parts.append(f"delete {body.surface_id}")
    return "[A2UI: " + "; ".join(parts) + "]"


def _strip_fences(text: str) -> str:
    s = text.strip()
    if s.startswith("```"):
        lines = s.splitlines()
        lines = lines[1:]
        if lines and lines[-1].strip().startswith("```"):
            lines = lines[:-1]
        s = "\n".join(lines).strip()
    return s


def parse_judge_reply(text: str, expected: tuple[str, ...]) -> dict[str, int]:
    try:
        doc = json.loads(_strip_fences(text))
    except json.JSONDecodeError as e:
        raise JudgeReplyError(f"reply is not JSON: {e.msg}") from e
    if not isinstance(doc, dict):
        raise JudgeReplyError("reply must be a JSON object")
    out: dict[str, int] = {}
    for key in expected:
        if key not in doc:
            raise JudgeReplyError(f"score '{key}' omitted")
        raw = doc[key]
        if isinstance(raw, dict):
            raw = raw.get("score")
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise JudgeReplyError(f"score '{key}' must be an integer, got {raw!r}")
        if not 1 <= raw <= 5:
            raise JudgeReplyError(f"score '{key}' out of range 1..5: {raw}")
        out[key] = raw
    return out


Judge = Callable[[list[dict[str, Any]]], str]


def judge_with_retry(judge: Judge, messages: list[dict[str, Any]],
                     expected: tuple[str, ...], *,
                     max_attempts: int = JUDGE_RETRY_ATTEMPTS
                     ) -> dict[str, int] | None:
    """Scores, or None after ``max_attempts`` invalid/failed replies.

    Transport failures consume attempts the same as bad replies; the
    caller records None as a judge failure and excludes the sample from
    that level's mean.
    """
    for _ in range(max_attempts):
        try:
            reply = judge(messages)
        except GeneratorUnavailable:
            continue
        try:
            return parse_judge_reply(reply, expected)
        except JudgeReplyError:
            continue
    return None
