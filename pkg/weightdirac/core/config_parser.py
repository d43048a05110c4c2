"""Sectioned key-value job files.

    # comment
    [algebra]
    type = A2

    [parabolic]
    levi = [1]

    [module M]
    kind = verma
    lambda = [0, 1/2]

    [window]
    base = [0, 0]
    radius = 6

    [command]
    module = M

Values are bare tokens (integers, rationals p/q, names) or bracketed,
comma-separated lists that may nest. Every diagnostic carries a line and column.
"""

import re
from dataclasses import dataclass, field
from typing import Any

from pydantic import ValidationError

from weightdirac.core.errors import ConfigError
from weightdirac.schemas.job import JobConfig, ModuleSection

_SECTION = re.compile(r"^\[\s*([A-Za-z_]+)(?:\s+([A-Za-z_][A-Za-z0-9_\-]*))?\s*\]$")
_KEY = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(r"[A-Za-z0-9_/+\-.×]+")
_SINGLE_SECTIONS = ("algebra", "parabolic", "window", "command")

Value = str | list[Any]


@dataclass
class _Section:
    name: str
    line: int
    values: dict[str, Value] = field(default_factory=dict)
    lines: dict[str, tuple[int, int]] = field(default_factory=dict)


class _ValueParser:
    """Recursive-descent parser for one value with column tracking."""

    def __init__(self, text: str, line: int, offset: int):
        self.text = text
        self.line = line
        self.offset = offset
        self.pos = 0

    def error(self, message: str) -> ConfigError:
        return ConfigError(message, line=self.line, column=self.offset + self.pos + 1)

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def parse(self) -> Value:
        value = self.value()
        self.skip_space()
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.text[self.pos]!r} after value")
        return value

    def value(self) -> Value:
        self.skip_space()
        if self.pos >= len(self.text):
            raise self.error("missing value")
        if self.text[self.pos] == "[":
            return self.list_value()
        match = _TOKEN.match(self.text, self.pos)
        if match is None:
            raise self.error(f"unexpected {self.text[self.pos]!r}")
        self.pos = match.end()
        return match.group()

    def list_value(self) -> list[Any]:
        self.pos += 1
        items: list[Any] = []
        self.skip_space()
        if self.pos < len(self.text) and self.text[self.pos] == "]":
            self.pos += 1
            return items
        while True:
            items.append(self.value())
            self.skip_space()
            if self.pos >= len(self.text):
                raise self.error("unterminated list")
            char = self.text[self.pos]
            self.pos += 1
            if char == "]":
                return items
            if char != ",":
                self.pos -= 1
                raise self.error(f"expected ',' or ']' but found {char!r}")


def _strip_comment(line: str) -> str:
    index = line.find("#")
    return line if index < 0 else line[:index]


def _split_sections(text: str) -> tuple[dict[str, _Section], dict[str, _Section]]:
    singles: dict[str, _Section] = {}
    modules: dict[str, _Section] = {}
    current: _Section | None = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).rstrip()
        stripped = line.strip()
        if not stripped:
            continue
        indent = len(line) - len(line.lstrip())
        if stripped.startswith("["):
            match = _SECTION.match(stripped)
            if match is None:
                raise ConfigError("malformed section header", line=number, column=indent + 1)
            kind, name = match.groups()
            if kind == "module":
                if name is None:
                    raise ConfigError("module sections need a name, e.g. [module M]", line=number, column=indent + 1)
                if name in modules:
                    raise ConfigError(f"module {name!r} defined twice", line=number, column=indent + 1)
                current = modules[name] = _Section(name, number)
            elif kind in _SINGLE_SECTIONS and name is None:
                if kind in singles:
                    raise ConfigError(f"section [{kind}] appears twice", line=number, column=indent + 1)
                current = singles[kind] = _Section(kind, number)
            else:
                raise ConfigError(f"unknown section [{stripped[1:-1].strip()}]", line=number, column=indent + 1)
            continue
        if current is None:
            raise ConfigError("key outside of any section", line=number, column=indent + 1)
        key_match = _KEY.match(line, indent)
        if key_match is None:
            raise ConfigError("expected a key", line=number, column=indent + 1)
        key = key_match.group()
        rest = line[key_match.end():]
        equals = rest.find("=")
        if equals < 0 or rest[:equals].strip():
            raise ConfigError("expected '=' after the key", line=number, column=key_match.end() + 1)
        if key in current.values:
            raise ConfigError(f"key {key!r} repeated", line=number, column=indent + 1)
        offset = key_match.end() + equals + 1
        current.values[key] = _ValueParser(line[offset:], number, offset).parse()
        current.lines[key] = (number, indent + 1)
    return singles, modules


def _locate(
    loc: tuple[Any, ...], singles: dict[str, _Section], modules: dict[str, _Section]
) -> tuple[int | None, int | None]:
    if not loc:
        return None, None
    head = loc[0]
    if head == "modules" and len(loc) >= 2 and loc[1] in modules:
        section = modules[str(loc[1])]
        if len(loc) >= 3:
            key = "lambda" if loc[2] == "lambda_" else str(loc[2])
            if key in section.lines:
                return section.lines[key]
        return section.line, 1
    if head in singles:
        section = singles[str(head)]
        if len(loc) >= 2 and str(loc[1]) in section.lines:
            return section.lines[str(loc[1])]
        return section.line, 1
    return None, None


def parse_config(text: str) -> JobConfig:
    """Parse and validate a job file.

    Raises:
        ConfigError: On syntax errors, unknown sections or keys, malformed values
            and failed validation, with the line and column of the offending entry
    """
    singles, modules = _split_sections(text)
    data: dict[str, Any] = {name: section.values for name, section in singles.items()}
    data["modules"] = {
        name: {"name": name, **section.values} for name, section in modules.items()
    }
    try:
        return JobConfig.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        line, column = _locate(tuple(first["loc"]), singles, modules)
        where = ".".join(str(part) for part in first["loc"]) or "config"
        message = first["msg"].removeprefix("Value error, ")
        raise ConfigError(f"{where}: {message}", line=line, column=column) from exc


# ============================================================================
# Rendering
# ============================================================================

def _render_value(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_render_value(v) for v in value) + "]"
    return str(value)


def _module_lines(module: ModuleSection) -> list[str]:
    lines = [f"[module {module.name}]", f"kind = {module.kind}"]
    for key, label in (
        ("lambda_", "lambda"),
        ("root", "root"),
        ("mu0", "mu0"),
        ("mu1", "mu1"),
        ("base", "base"),
        ("of", "of"),
        ("gamma", "gamma"),
        ("x", "x"),
    ):
        value = getattr(module, key)
        if value is not None:
            lines.append(f"{label} = {_render_value(value)}")
    return lines


def render_config(config: JobConfig) -> str:
    """Inverse of ``parse_config`` up to comments and layout."""
    lines = ["[algebra]", f"type = {config.algebra.type}", ""]
    lines += ["[parabolic]", f"levi = {_render_value(config.parabolic.levi)}", ""]
    for module in config.modules.values():
        lines += _module_lines(module) + [""]
    lines += [
        "[window]",
        f"base = {_render_value(config.window.base)}",
        f"radius = {config.window.radius}",
        "",
    ]
    command = [
        f"{key} = {getattr(config.command, key)}"
        for key in ("name", "module", "second", "direction")
        if getattr(config.command, key) is not None
    ]
    if command:
        lines += ["[command]"] + command + [""]
    return "\n".join(lines)
