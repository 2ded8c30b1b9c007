"""Tokenizer for PokerLANG source text.

`#` starts a comment running to end of line. Identifiers are lowercase
words with underscores; keywords are classified by the parser.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagnostics import Diagnostic, StrategyParseError

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<newline>\n)
  | (?P<number>-?\d+(\.\d+)?([eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[{}\[\],%])
    """,
    re.VERBOSE,
)

PUNCT_NAMES = {
    "{": "lbrace", "}": "rbrace", "[": "lbracket", "]": "rbracket",
    ",": "comma", "%": "percent",
}


@dataclass(frozen=True)
class Token:
    kind: str  # number | ident | lbrace | rbrace | lbracket | rbracket | comma | percent | eof
    text: str
    line: int
    col: int

    @property
    def value(self) -> float:
        return float(self.text)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise StrategyParseError(
                [Diagnostic(line, col, f"unexpected character {text[pos]!r}")]
            )
        kind = m.lastgroup
        lexeme = m.group()
        if kind == "newline":
            line += 1
            col = 1
        elif kind in ("ws", "comment"):
            col += len(lexeme)
        elif kind == "punct":
            tokens.append(Token(PUNCT_NAMES[lexeme], lexeme, line, col))
            col += len(lexeme)
        else:
            tokens.append(Token(kind, lexeme, line, col))
            col += len(lexeme)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens
