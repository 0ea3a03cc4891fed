"""HTTP chat-completion clients and deterministic test stubs.

A generator is any callable taking OpenAI-style ``messages`` (list of
``{"role", "content"}`` dicts) and returning the assistant text. ChatClient
speaks that wire format over HTTP; StubModel replays canned outputs for
tests and offline runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import requests


class GeneratorUnavailable(RuntimeError):
    """The generation endpoint cannot be reached or refused the request."""


@dataclass
class ChatClient:
    """Minimal chat-completions client (OpenAI wire format)."""

    base_url: str
    model: str
    api_key: str | None = None
    temperature: float = 0.0
    max_tokens: int = 4096
    timeout: float = 120.0
    extra_body: dict[str, Any] = field(default_factory=dict)

    def __call__(self, messages: list[dict[str, Any]]) -> str:
        return self.complete(messages)

    def complete(self, messages: list[dict[str, Any]]) -> str:
        url = self.base_url.rstrip("/") + "/chat/completions"
        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        body = {
            "model": self.model,
            "messages": messages,
            "temperature": self.temperature,
            "max_tokens": self.max_tokens,
            **self.extra_body,
        }
        try:
            resp = requests.post(url, json=body, headers=headers,
                                 timeout=self.timeout)
        except requests.RequestException as e:
            raise GeneratorUnavailable(f"endpoint unreachable: {e}") from e
        if resp.status_code != 200:
            raise GeneratorUnavailable(
                f"endpoint returned HTTP {resp.status_code}: {resp.text[:200]}")
        try:
            doc = resp.json()
            content = doc["choices"][0]["message"]["content"]
        except (ValueError, KeyError, IndexError, TypeError) as e:
            raise GeneratorUnavailable(f"malformed completion payload: {e}") from e
        if not isinstance(content, str):
            raise GeneratorUnavailable("completion content is not text")
        return content


@dataclass
class StubModel:
    """Replays a fixed sequence of outputs; raises when exhausted.

    ``calls`` records every messages list received, so tests can assert on
    the exact feedback a retry loop sent back to the model.
    """

    outputs: list[str]
    calls: list[list[dict[str, Any]]] = field(default_factory=list)

    def __call__(self, messages: list[dict[str, Any]]) -> str:
        self.calls.append([dict(m) for m in messages])
        if len(self.calls) > len(self.outputs):
            raise GeneratorUnavailable("stub exhausted")
        return self.outputs[len(self.calls) - 1]


def image_content(text: str, png_bytes: bytes) -> list[dict[str, Any]]:
    """Message content pairing an instruction with an inline PNG."""
    import base64
    b64 = base64.b64encode(png_bytes).decode("ascii")
    return [
        {"type": "text", "text": text},
        {"type": "image_url",
         "image_url": {"url": f"data:image/png;base64,{b64}"}},
    ]
