"""Recursive-descent parser producing Strategy trees with positioned
diagnostics."""

from __future__ import annotations

from .ast import (
    ActionItem,
    Behaviour,
    Condition,
    DEFINED_ACTIONS,
    EVALUATORS,
    Entry,
    Interval,
    KEYWORDS,
    PREDEFINED_ACTIONS,
    PREDEFINED_TACTICS,
    PREDICTORS,
    Rule,
    SetLiteral,
    Strategy,
    TacticDef,
)
from .diagnostics import Diagnostic, StrategyParseError
from .lexer import Token, tokenize

_EVAL_HINT = "activation conditions accept the evaluators: " + ", ".join(EVALUATORS)
_COND_HINT = (
    "rule conditions accept the evaluators "
    + ", ".join(EVALUATORS)
    + " and the predictors "
    + ", ".join(PREDICTORS)
)
_ACTION_HINT = (
    "actions are " + ", ".join(DEFINED_ACTIONS) + " or the predefined plays "
    + ", ".join(PREDEFINED_ACTIONS)
)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0
        self.semantic: list[Diagnostic] = []

    # -- token plumbing ----------------------------------------------------

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def at_ident(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "ident" and tok.text == text

    def fail(self, tok: Token, message: str):
        raise StrategyParseError(self.semantic + [Diagnostic(tok.line, tok.col, message)])

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            found = tok.text or "end of input"
            self.fail(tok, f"expected {what}, found {found!r}")
        return self.advance()

    def expect_word(self, word: str) -> Token:
        tok = self.peek()
        if not self.at_ident(word):
            found = tok.text or "end of input"
            self.fail(tok, f"expected '{word}', found {found!r}")
        return self.advance()

    # -- grammar -----------------------------------------------------------

    def parse_file(self) -> Strategy:
        entries: tuple[Entry, ...] | None = None
        tactics: list[TacticDef] = []
        while self.peek().kind != "eof":
            tok = self.peek()
            if self.at_ident("strategy"):
                if entries is not None:
                    self.fail(tok, "duplicate strategy block")
                entries = self.parse_strategy_block()
            elif self.at_ident("tactic"):
                tactics.append(self.parse_tactic_def(tactics))
            else:
                found = tok.text or "end of input"
                self.fail(tok, f"expected 'strategy' or 'tactic', found {found!r}")
        if entries is None or not entries:
            tok = self.peek()
            self.fail(tok, "a strategy needs at least one 'when'/'always' entry")

        known = set(PREDEFINED_TACTICS) | {t.name for t in tactics}
        for entry in entries:
            if entry.tactic not in known:
                line, col = entry.pos
                self.semantic.append(
                    Diagnostic(line, col, f"undefined tactic {entry.tactic!r}")
                )
        if self.semantic:
            raise StrategyParseError(self.semantic)
        return Strategy(entries=entries, tactics=tuple(tactics))

    def parse_strategy_block(self) -> tuple[Entry, ...]:
        self.expect_word("strategy")
        self.expect("lbrace", "'{'")
        entries: list[Entry] = []
        while not self.peek().kind == "rbrace":
            entries.append(self.parse_entry())
        self.expect("rbrace", "'}'")
        return tuple(entries)

    def parse_entry(self) -> Entry:
        tok = self.peek()
        conditions: list[Condition] = []
        if self.at_ident("always"):
            self.advance()
        elif self.at_ident("when"):
            self.advance()
            while not self.at_ident("use"):
                conditions.append(self.parse_condition(activation=True))
            if not conditions:
                self.fail(tok, "'when' needs at least one condition ('always' for none)")
        else:
            found = tok.text or "end of input"
            self.fail(tok, f"expected 'when' or 'always', found {found!r}")
        self.expect_word("use")
        ref = self.expect("ident", "a tactic name")
        if ref.text in KEYWORDS and ref.text not in PREDEFINED_TACTICS:
            self.fail(ref, f"{ref.text!r} is a keyword, not a tactic")
        return Entry(conditions=tuple(conditions), tactic=ref.text,
                     pos=(tok.line, tok.col))

    def parse_condition(self, activation: bool) -> Condition:
        tok = self.expect("ident", "a condition keyword")
        if activation and tok.text not in EVALUATORS:
            self.fail(tok, f"unknown evaluator {tok.text!r}; {_EVAL_HINT}")
        if not activation and tok.text not in EVALUATORS + PREDICTORS:
            self.fail(tok, f"unknown condition {tok.text!r}; {_COND_HINT}")
        self.expect_word("in")
        nxt = self.peek()
        if nxt.kind == "lbracket":
            comparison = self.parse_interval()
        elif nxt.kind == "lbrace":
            comparison = self.parse_set()
        else:
            found = nxt.text or "end of input"
            self.fail(nxt, f"expected an interval '[a, b]' or set '{{...}}', found {found!r}")
        return Condition(kind=tok.text, comparison=comparison)

    def parse_interval(self) -> Interval:
        open_tok = self.expect("lbracket", "'['")
        lo = self.expect("number", "a number").value
        self.expect("comma", "','")
        hi = self.expect("number", "a number").value
        self.expect("rbracket", "']'")
        if lo > hi:
            self.fail(open_tok, f"interval bounds out of order: [{lo}, {hi}]")
        return Interval(lo=lo, hi=hi)

    def parse_set(self) -> SetLiteral:
        self.expect("lbrace", "'{'")
        items = [self.parse_atom()]
        while self.peek().kind == "comma":
            self.advance()
            items.append(self.parse_atom())
        self.expect("rbrace", "'}'")
        return SetLiteral(items=tuple(items))

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "number":
            return self.advance().value
        if tok.kind == "ident":
            self.advance()
            if tok.text == "true":
                return True
            if tok.text == "false":
                return False
            return tok.text
        found = tok.text or "end of input"
        self.fail(tok, f"expected a number, name, or true/false, found {found!r}")

    def parse_tactic_def(self, existing: list[TacticDef]) -> TacticDef:
        self.expect_word("tactic")
        name = self.expect("ident", "a tactic name")
        if name.text in KEYWORDS:
            self.fail(name, f"tactic name {name.text!r} shadows a keyword")
        if any(t.name == name.text for t in existing):
            self.semantic.append(
                Diagnostic(name.line, name.col, f"duplicate tactic name {name.text!r}")
            )
        self.expect("lbrace", "'{'")
        behaviours: list[Behaviour] = []
        while self.at_ident("behaviour"):
            behaviours.append(self.parse_behaviour())
        self.expect("rbrace", "'}' (or 'behaviour')")
        return TacticDef(name=name.text, behaviours=tuple(behaviours),
                         pos=(name.line, name.col))

    def parse_behaviour(self) -> Behaviour:
        tok = self.expect_word("behaviour")
        weight = self.expect("number", "a behaviour weight")
        if weight.value <= 0:
            self.fail(weight, f"behaviour weight must be positive, got {weight.text}")
        self.expect("lbrace", "'{'")
        rules: list[Rule] = []
        while self.at_ident("rule"):
            rules.append(self.parse_rule())
        self.expect("rbrace", "'}' (or 'rule')")
        return Behaviour(weight=weight.value, rules=tuple(rules),
                         pos=(tok.line, tok.col))

    def parse_rule(self) -> Rule:
        tok = self.expect_word("rule")
        self.expect("lbrace", "'{'")
        conditions: list[Condition] = []
        while not self.at_ident("do"):
            if self.peek().kind == "rbrace":
                self.fail(self.peek(), "rule needs a 'do <action> <perc>%' part")
            conditions.append(self.parse_condition(activation=False))
        self.expect_word("do")
        actions: list[ActionItem] = []
        while self.peek().kind == "ident":
            actions.append(self.parse_action_item())
        if not actions:
            self.fail(self.peek(), f"expected an action name; {_ACTION_HINT}")
        self.expect("rbrace", "'}'")
        return Rule(conditions=tuple(conditions), actions=tuple(actions),
                    pos=(tok.line, tok.col))

    def parse_action_item(self) -> ActionItem:
        name = self.expect("ident", "an action name")
        if name.text not in DEFINED_ACTIONS + PREDEFINED_ACTIONS:
            self.fail(name, f"unknown action {name.text!r}; {_ACTION_HINT}")
        number = self.expect("number", "a percentage")
        self.expect("percent", "'%'")
        if not (0 < number.value <= 100):
            self.fail(number, f"percentage must be in (0, 100], got {number.text}")
        return ActionItem(name=name.text, percent=number.value)


def parse(text: str) -> Strategy:
    """Parse PokerLANG text; raises StrategyParseError with diagnostics."""
    return _Parser(tokenize(text)).parse_file()


def try_parse(text: str):
    """(Strategy, []) on success, (None, diagnostics) on failure."""
    try:
        return parse(text), []
    except StrategyParseError as err:
        return None, err.diagnostics
