"""
Run configuration loading.

A run config is a flat JSON object; unknown keys and non-numeric values
are rejected with the offending key and line.
"""
import json
import logging
from pathlib import Path
from typing import Mapping, Optional

from pydantic import ValidationError

from api.models import RunConfig
from services.errors import ConfigError, ConfigParseError, InvalidValue, UnknownKey

logger = logging.getLogger(__name__)


def _line_of(text: str, key: str) -> Optional[int]:
    needle = f'"{key}"'
    for number, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return number
    return None


def parse_override(item: str) -> tuple[str, object]:
    """``KEY=VALUE`` with VALUE read as a JSON scalar."""
    key, sep, raw = item.partition("=")
    key = key.strip()
    if not sep or not key:
        raise ConfigError(f"override '{item}' must look like KEY=VALUE")
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return key, value


def build_config(data: Mapping, text: str = "") -> RunConfig:
    try:
        return RunConfig.model_validate(dict(data))
    except ValidationError as e:
        err = e.errors()[0]
        key = str(err["loc"][0]) if err["loc"] else "<root>"
        line = _line_of(text, key) if text else None
        if err["type"] == "extra_forbidden":
            raise UnknownKey(key, line) from None
        raise InvalidValue(key, err["msg"], line) from None


def load_config(path: Optional[str] = None, overrides: Optional[Mapping[str, object]] = None) -> RunConfig:
    """
    Read a run config from ``path`` (documented defaults when None) and
    apply ``overrides`` on top.
    """
    text = ""
    data: dict = {}
    if path:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"cannot read config {path}: {e}") from None
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ConfigParseError(e.msg, e.lineno, e.colno) from None
        if not isinstance(data, dict):
            raise ConfigParseError("top level must be a JSON object", 1, 1)
        logger.debug(f"Loaded config {path}: {sorted(data)}")

    if overrides:
        data.update(overrides)
        logger.debug(f"Config overrides: {dict(overrides)}")

    return build_config(data, text)
