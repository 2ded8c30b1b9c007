"""Strategy execution against a live game view.

The view is duck-typed; the attributes each evaluator/predictor reads are
listed in docs/pokerlang.md. Missing inputs raise EvaluationError naming
the condition. Predefined tactics delegate to an injected policy callback
(the agents package wires the four archetype quadrants in).
"""

from __future__ import annotations

from .ast import (
    Condition,
    DEFINED_ACTIONS,
    HAND_REGIONS,
    Interval,
    PREDEFINED_TACTICS,
    SetLiteral,
    Strategy,
)


class EvaluationError(Exception):
    pass


_MISSING = object()


def _need(view, attr: str, kind: str):
    value = getattr(view, attr, _MISSING)
    if value is _MISSING or value is None:
        raise EvaluationError(f"view provides no {attr!r} input for {kind}")
    return value


def hand_region_of(ehs: float) -> str:
    """EHS percentile region with cut points 0.2 / 0.4 / 0.6 / 0.8."""
    for cut, region in zip((0.2, 0.4, 0.6, 0.8), HAND_REGIONS[:4]):
        if ehs < cut:
            return region
    return "monster"


def _condition_value(cond: Condition, view):
    kind = cond.kind
    if kind == "number_of_players":
        return _need(view, "players_in_hand", kind)
    if kind == "stack":
        return _need(view, "stack_big_blinds", kind)
    if kind == "pot_odds":
        return _need(view, "pot_odds", kind)
    if kind == "position_at_table":
        return _need(view, "position_score", kind)
    if kind == "hand_region":
        ehs = _need(view, "ehs", kind)
        if isinstance(cond.comparison, Interval):
            return ehs
        return hand_region_of(ehs)
    if kind == "implied_odds":
        # pot odds discounted by the draw's completion chance
        return _need(view, "pot_odds", kind) * (1.0 - _need(view, "ppot", kind))
    if kind == "opponent_hand":
        return _need(view, "opponent_mean_percentile", kind)
    if kind == "opponent_in_game":
        return _need(view, "live_opponents", kind)
    if kind == "steal_bet":
        return bool(
            _need(view, "unopened", kind)
            and _need(view, "position_score", kind) >= 0.5
        )
    if kind == "image_at_table":
        return _need(view, "hero_af_bucket", kind)
    raise EvaluationError(f"unknown condition kind {kind!r}")


def condition_holds(cond: Condition, view) -> bool:
    value = _condition_value(cond, view)
    comparison = cond.comparison
    if isinstance(comparison, Interval):
        if isinstance(value, str):
            raise EvaluationError(
                f"{cond.kind} yields the label {value!r}; compare it with a set"
            )
        return comparison.lo <= float(value) <= comparison.hi
    for atom in comparison.items:
        if isinstance(value, bool) or isinstance(atom, bool):
            if isinstance(atom, bool) and isinstance(value, bool) and atom == value:
                return True
        elif isinstance(atom, str) or isinstance(value, str):
            if atom == value:
                return True
        elif float(atom) == float(value):
            return True
    return False


def clamp_action(desired: str, legal: set[str]) -> str:
    """Nearest legal action to the desired one (never illegal output)."""
    preference = {
        "fold": ("fold", "check"),
        "check": ("check", "fold"),
        "call": ("call", "check"),
        "bet": ("bet", "raise", "call", "check"),
        "raise": ("raise", "bet", "call", "check"),
    }[desired]
    for action in preference:
        if action in legal:
            return action
    return "fold" if "fold" in legal else sorted(legal)[0]


def default_action(view) -> str:
    """The remainder policy: check when free, fold otherwise."""
    legal = _need(view, "legal_actions", "action selection")
    return "check" if "check" in legal else clamp_action("fold", legal)


class StrategyInterpreter:
    """Executes one strategy for one seat; holds private macro state."""

    def __init__(self, strategy: Strategy, predefined_policy=None):
        self.strategy = strategy
        self.predefined_policy = predefined_policy
        self._macro: dict | None = None

    def reset_hand(self) -> None:
        self._macro = None

    # -- macros -------------------------------------------------------------

    def _arm(self, name: str, view) -> None:
        self._macro = {
            "name": name, "street": view.street, "hand_id": view.hand_id,
        }

    def _macro_continuation(self, view) -> str | None:
        macro = self._macro
        if macro is None:
            return None
        if macro["street"] != view.street or macro["hand_id"] != view.hand_id:
            self._macro = None
            return None
        legal = view.legal_actions
        name = macro["name"]
        if name == "steal_the_pot":
            # our steal got raised; give it up
            self._macro = None
            return clamp_action("fold", legal)
        if name in ("check_raise_bluff", "check_raise_trap"):
            self._macro = None
            if view.facing_raise:
                return clamp_action("raise", legal)
            return default_action(view)
        if name == "check_call_trap":
            # keep calling for the rest of the street
            return clamp_action("call", legal)
        self._macro = None
        return None

    def _start_macro(self, name: str, view) -> str:
        legal = view.legal_actions
        if name == "steal_the_pot":
            if view.unopened:
                self._arm(name, view)
                return clamp_action("raise", legal)
            return default_action(view)
        if name == "semi_bluff":
            if view.ppot >= 0.2 and view.hs < 0.5:
                return clamp_action("raise", legal)
            return default_action(view)
        if name in ("check_raise_bluff", "check_raise_trap"):
            if view.facing_raise:
                return clamp_action("raise", legal)
            self._arm(name, view)
            return clamp_action("check", legal)
        if name == "squeeze_play":
            if view.facing_raise and getattr(view, "callers_after_raise", 0) >= 1:
                return clamp_action("raise", legal)
            if view.facing_raise:
                return clamp_action("call", legal)
            return clamp_action("check", legal)
        if name == "check_call_trap":
            self._arm(name, view)
            return clamp_action("check", legal)
        if name == "post_oak_bluff":
            if not view.facing_raise:
                return clamp_action("bet", legal)
            return default_action(view)
        raise EvaluationError(f"unknown predefined action {name!r}")

    # -- main entry ----------------------------------------------------------

    def decide(self, view, rng) -> str:
        cont = self._macro_continuation(view)
        if cont is not None:
            return cont

        tactic_name = None
        for entry in self.strategy.entries:
            if all(condition_holds(c, view) for c in entry.conditions):
                tactic_name = entry.tactic
                break
        if tactic_name is None:
            return default_action(view)

        if tactic_name in PREDEFINED_TACTICS:
            if self.predefined_policy is None:
                raise EvaluationError(
                    f"no policy wired for predefined tactic {tactic_name!r}"
                )
            desired = self.predefined_policy(tactic_name, view, rng)
            return clamp_action(desired, view.legal_actions)

        tactic = self.strategy.tactic_named(tactic_name)
        matching: list[tuple] = []
        for behaviour in tactic.behaviours:
            for rule in behaviour.rules:
                if all(condition_holds(c, view) for c in rule.conditions):
                    matching.append((rule, behaviour.weight))
        if not matching:
            return default_action(view)

        total = sum(w for _, w in matching)
        pick = rng.random() * total
        acc = 0.0
        rule = matching[-1][0]
        for r, w in matching:
            acc += w
            if pick < acc:
                rule = r
                break

        u = rng.random() * 100.0
        acc = 0.0
        for item in rule.actions:
            acc += item.percent
            if u < acc:
                if item.name in DEFINED_ACTIONS:
                    return clamp_action(item.name, view.legal_actions)
                return self._start_macro(item.name, view)
        return default_action(view)


def evaluate(strategy: Strategy, view, rng, predefined_policy=None) -> str:
    """One-shot strategy evaluation (fresh interpreter, no macro carryover)."""
    return StrategyInterpreter(strategy, predefined_policy).decide(view, rng)
