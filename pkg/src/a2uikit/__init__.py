"""a2uikit: tooling for the A2UI v0.8 declarative UI protocol.

Parsing and canonical serialization, a four-level lint pipeline,
deterministic repair, render-critical checks, a client-side processor,
reward scoring with LLM/VLM judge harnesses, an evaluation bench, and a
training-corpus generator.
"""

from __future__ import annotations

from a2uikit.protocol import (
    ActionSpec,
    AssistantResponse,
    BeginRendering,
    ComponentInstance,
    DataEntry,
    DataModelUpdate,
    DeleteSurface,
    FormatError,
    Message,
    PropValue,
    SurfaceUpdate,
    parse_response,
    serialize_response,
)

__version__ = "0.1.0"

__all__ = [
    "ActionSpec",
    "AssistantResponse",
    "BeginRendering",
    "ComponentInstance",
    "DataEntry",
    "DataModelUpdate",
    "DeleteSurface",
    "FormatError",
    "Message",
    "PropValue",
    "SurfaceUpdate",
    "parse_response",
    "serialize_response",
    "__version__",
]
