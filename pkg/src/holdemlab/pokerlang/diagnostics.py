"""Positioned diagnostics shared by the lexer, parser, and validator."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Diagnostic:
    line: int  # 1-based
    col: int   # 1-based
    message: str
    severity: str = "error"

    def render(self, filename: str = "<input>") -> str:
        return f"{filename}:{self.line}:{self.col}: {self.message}"


class StrategyParseError(Exception):
    """Carries every diagnostic collected before parsing gave up."""

    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__(
            "; ".join(d.render() for d in self.diagnostics) or "parse error"
        )
