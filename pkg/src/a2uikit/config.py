"""Runtime configuration: endpoints, weights, and resource overrides.

Loaded from a JSON file; every field has a default so an empty config is
valid. API keys never live in the file; each endpoint names the environment
variable that holds its key.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from a2uikit.clients import ChatClient
from a2uikit.scoring import RewardConfig


class ConfigError(ValueError):
    """The configuration file is malformed or names missing resources."""


@dataclass(frozen=True)
class EndpointConfig:
    base_url: str
    model: str
    api_key_env: str = "A2UIKIT_API_KEY"
    temperature: float = 0.0
    max_tokens: int = 4096
    timeout: float = 120.0

    def client(self) -> ChatClient:
        key = os.environ.get(self.api_key_env)
        if not key:
            raise ConfigError(
                f"endpoint '{self.base_url}' needs an API key in "
                f"${self.api_key_env}")
        return ChatClient(base_url=self.base_url, model=self.model,
                          api_key=key, temperature=self.temperature,
                          max_tokens=self.max_tokens, timeout=self.timeout)


@dataclass(frozen=True)
class Config:
    catalog_dir: str | None = None
    prompts_dir: str | None = None
    model: EndpointConfig | None = None
    judge: EndpointConfig | None = None
    w_l1: float = 0.2
    w_l2: float = 0.4
    w_l3: float = 0.4
    no_ui_bonus: float = 0.5
    crop_tolerance: int = 8
    crop_margin: int = 4
    concurrency: int = 8
    lint_attempts: int = 3
    screenshot_cmd: str | None = None

    def __post_init__(self) -> None:
        if not math.isclose(self.w_l1 + self.w_l2 + self.w_l3, 1.0,
                            abs_tol=1e-9):
            raise ConfigError(
                f"reward weights must sum to 1, got "
                f"{self.w_l1 + self.w_l2 + self.w_l3!r}")
        for name in ("catalog_dir", "prompts_dir"):
            value = getattr(self, name)
            if value is not None and not Path(value).is_dir():
                raise ConfigError(f"{name} does not exist: {value}")
        if self.concurrency < 1:
            raise ConfigError("concurrency must be at least 1")

    def reward(self) -> RewardConfig:
        return RewardConfig(w_l1=self.w_l1, w_l2=self.w_l2, w_l3=self.w_l3,
                            no_ui_bonus=self.no_ui_bonus)


_ENDPOINT_KEYS = {"base_url", "model", "api_key_env", "temperature",
                  "max_tokens", "timeout"}
_CONFIG_KEYS = {"catalog_dir", "prompts_dir", "model", "judge", "w_l1",
                "w_l2", "w_l3", "no_ui_bonus", "crop_tolerance",
                "crop_margin", "concurrency", "lint_attempts",
                "screenshot_cmd"}


def _parse_endpoint(doc: Any, where: str) -> EndpointConfig:
    if not isinstance(doc, dict):
        raise ConfigError(f"{where} must be an object")
    unknown = set(doc) - _ENDPOINT_KEYS
    if unknown:
        raise ConfigError(f"{where} has unknown keys: {sorted(unknown)}")
    for req in ("base_url", "model"):
        if not isinstance(doc.get(req), str):
            raise ConfigError(f"{where}.{req} is required")
    return EndpointConfig(**doc)


def load_config(path: str | Path | None = None) -> Config:
    """Config from a JSON file; None or a missing 'model' key is fine."""
    if path is None:
        return Config()
    try:
        doc = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except json.JSONDecodeError as e:
        raise ConfigError(f"config is not valid JSON: {e.msg}") from e
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(doc) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    kwargs: dict[str, Any] = dict(doc)
    if "model" in kwargs and kwargs["model"] is not None:
        kwargs["model"] = _parse_endpoint(kwargs["model"], "model")
    if "judge" in kwargs and kwargs["judge"] is not None:
        kwargs["judge"] = _parse_endpoint(kwargs["judge"], "judge")
    return Config(**kwargs)
