"""Common decision interface, per-decision game views, and the registry."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..cards import Card
from ..engine import ActionEvent, GameState, HandResult


@dataclass(frozen=True)
class AgentDecision:
    action: str  # engine descriptor: fold / check / call / bet / raise
    rationale: str = ""


@dataclass
class GameView:
    """Everything one seat may legally know when deciding."""

    hand_id: int
    seat: int
    street: str
    hole: tuple[Card, Card]
    board: tuple[Card, ...]
    pot: int
    to_call: int
    stack: int
    big_blind: int
    small_bet: int
    legal_actions: set[str]
    facing_raise: bool
    raises_this_round: int
    players_dealt: int
    players_in_hand: int
    live_opponents: tuple[int, ...]
    position_score: float  # 0 = acts earliest post-flop, 1 = button
    in_blind: bool
    unopened: bool  # no voluntary bet/raise yet this street
    callers_after_raise: int
    is_first_decision_in_round: bool

    @property
    def pot_odds(self) -> float:
        if self.to_call <= 0:
            return 0.0
        return self.to_call / (self.pot + self.to_call)

    @property
    def stack_big_blinds(self) -> float:
        return self.stack / self.big_blind


class Agent:
    """Base class: stateful per table seat, cloneable, rng injected per call."""

    name = "agent"

    def reset_hand(self, view: GameView) -> None:
        """Called once per hand with the hero's pre-flop view."""

    def observe(self, event: ActionEvent, state: GameState) -> None:
        """Called for every public action at the table (including our own)."""

    def decide(self, view: GameView, rng) -> AgentDecision:
        raise NotImplementedError

    def hand_finished(self, result: HandResult, seat: int) -> None:
        """Called after settlement with the full hand result."""

    def clone(self) -> "Agent":
        import copy

        return copy.deepcopy(self)


def position_order(button: int, seats_dealt: list[int]) -> list[int]:
    """Post-flop action order: first seat left of the button ... button last."""
    n = max(seats_dealt) + 1 if seats_dealt else 0
    ring = [(button + 1 + i) % max(n, button + 1) for i in range(max(n, button + 1))]
    return [s for s in ring if s in set(seats_dealt)]


def position_score(seat: int, button: int, seats_dealt: list[int]) -> float:
    """Rank of the seat in post-flop action order, scaled to [0, 1]."""
    order = position_order(button, seats_dealt)
    if len(order) <= 1:
        return 1.0
    return order.index(seat) / (len(order) - 1)


# ---------------------------------------------------------------------------
# Registry: string spec -> agent factory, e.g. "archetype:rock" or "hubot".
# ---------------------------------------------------------------------------

_REGISTRY: dict[str, object] = {}


def register(prefix: str):
    def wrap(factory):
        _REGISTRY[prefix] = factory
        return factory

    return wrap


def create_agent(spec: str) -> Agent:
    """Instantiate an agent from its registry spec string.

    Specs look like "observer", "archetype:rock", "pokerlang:file.pkl",
    "learner:whs". The part after the first colon is the factory argument.
    """
    prefix, _, arg = spec.partition(":")
    factory = _REGISTRY.get(prefix)
    if factory is None:
        known = ", ".join(sorted(_REGISTRY))
        raise KeyError(f"unknown agent spec {spec!r} (known: {known})")
    agent = factory(arg) if arg else factory("")
    agent.name = spec
    return agent


def known_agent_specs() -> list[str]:
    return sorted(_REGISTRY)
