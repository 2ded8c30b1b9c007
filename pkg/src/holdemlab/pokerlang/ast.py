"""PokerLANG syntax tree nodes and fixed vocabularies."""

from __future__ import annotations

from dataclasses import dataclass, field

PREDEFINED_TACTICS = (
    "loose_aggressive", "loose_passive", "tight_aggressive", "tight_passive",
)
EVALUATORS = (
    "number_of_players", "stack", "pot_odds", "hand_region", "position_at_table",
)
PREDICTORS = (
    "implied_odds", "opponent_hand", "opponent_in_game", "steal_bet",
    "image_at_table",
)
DEFINED_ACTIONS = ("fold", "check", "call", "bet", "raise")
PREDEFINED_ACTIONS = (
    "steal_the_pot", "semi_bluff", "check_raise_bluff", "squeeze_play",
    "check_call_trap", "check_raise_trap", "post_oak_bluff",
)
HAND_REGIONS = ("trash", "weak", "medium", "strong", "monster")
IMAGES = ("passive", "balanced", "aggressive")

KEYWORDS = frozenset(
    ("strategy", "tactic", "behaviour", "rule", "when", "always", "use", "do",
     "in", "true", "false")
    + PREDEFINED_TACTICS + EVALUATORS + PREDICTORS + DEFINED_ACTIONS
    + PREDEFINED_ACTIONS
)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float


@dataclass(frozen=True)
class SetLiteral:
    # items are floats, identifiers, or booleans
    items: tuple


@dataclass(frozen=True)
class Condition:
    kind: str  # an EVALUATORS or PREDICTORS name
    comparison: Interval | SetLiteral

    @property
    def is_predictor(self) -> bool:
        return self.kind in PREDICTORS


@dataclass(frozen=True)
class ActionItem:
    name: str  # a DEFINED_ACTIONS or PREDEFINED_ACTIONS name
    percent: float  # (0, 100]


@dataclass(frozen=True)
class Rule:
    conditions: tuple[Condition, ...]
    actions: tuple[ActionItem, ...]
    # source position (line, col); not part of structural equality
    pos: tuple[int, int] = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class Behaviour:
    weight: float  # > 0
    rules: tuple[Rule, ...]
    # source position (line, col); not part of structural equality
    pos: tuple[int, int] = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class TacticDef:
    name: str
    behaviours: tuple[Behaviour, ...]
    # source position (line, col); not part of structural equality
    pos: tuple[int, int] = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class Entry:
    """One strategy line: activation conditions (evaluators only) + tactic.

    An empty condition tuple activates unconditionally ("always use ...").
    `tactic` is a predefined tactic name or a defined tactic's name.
    """

    conditions: tuple[Condition, ...]
    tactic: str
    # source position (line, col); not part of structural equality
    pos: tuple[int, int] = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class Strategy:
    entries: tuple[Entry, ...]
    tactics: tuple[TacticDef, ...]

    def tactic_named(self, name: str) -> TacticDef | None:
        for t in self.tactics:
            if t.name == name:
                return t
        return None
