"""PokerLANG: a small strategy language for building poker agents.

Reference: docs/pokerlang.md. Entry points: parse / format_strategy /
validate / StrategyInterpreter.
"""

from .ast import (
    ActionItem,
    Behaviour,
    Condition,
    DEFINED_ACTIONS,
    EVALUATORS,
    Entry,
    HAND_REGIONS,
    Interval,
    PREDEFINED_ACTIONS,
    PREDEFINED_TACTICS,
    PREDICTORS,
    Rule,
    SetLiteral,
    Strategy,
    TacticDef,
)
from .diagnostics import Diagnostic, StrategyParseError
from .formatter import format_strategy
from .interp import EvaluationError, StrategyInterpreter, hand_region_of
from .parser import parse, try_parse
from .validator import validate

__all__ = [
    "ActionItem", "Behaviour", "Condition", "DEFINED_ACTIONS", "Diagnostic",
    "EVALUATORS", "Entry", "EvaluationError", "HAND_REGIONS", "Interval",
    "PREDEFINED_ACTIONS", "PREDEFINED_TACTICS", "PREDICTORS", "Rule",
    "SetLiteral", "Strategy", "StrategyInterpreter", "StrategyParseError",
    "TacticDef", "format_strategy", "hand_region_of", "parse", "try_parse",
    "validate",
]
