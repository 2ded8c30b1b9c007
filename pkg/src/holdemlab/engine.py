"""Authoritative fixed-limit Texas Hold'em state machine for 2-10 seats.

Betting uses the small bet pre-flop and on the flop, the big bet on the
turn and river. `raises_this_round` counts voluntary bets and raises (the
blinds are not counted), capped by `max_raises_per_round` per street.
Chips are integers; all randomness comes from the injected seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .cards import Card, full_deck, score_hands

PREFLOP, FLOP, TURN, RIVER, SHOWDOWN, COMPLETE = (
    "preflop", "flop", "turn", "river", "showdown", "complete",
)
STREETS = (PREFLOP, FLOP, TURN, RIVER)
BOARD_SIZE = {PREFLOP: 0, FLOP: 3, TURN: 4, RIVER: 5}

FOLD, CALL, RAISE = "fold", "call", "raise"


class EngineError(Exception):
    pass


class CannotStartError(EngineError):
    pass


class IllegalActionError(EngineError):
    """Rejected action; the message names the violated rule."""


@dataclass(frozen=True)
class TableConfig:
    seats: int = 2
    small_bet: int = 2
    big_bet: int = 4
    small_blind: int = 1
    big_blind: int = 2
    max_raises_per_round: int = 4
    uncapped_heads_up: bool = False

    def __post_init__(self):
        if not (2 <= self.seats <= 10):
            raise ValueError("seats must be 2..10")
        if self.big_bet != 2 * self.small_bet:
            raise ValueError("big_bet must equal 2 * small_bet")
        if self.small_blind > self.small_bet or self.big_blind > self.small_bet:
            raise ValueError("blinds must not exceed the small bet")

    def bet_size(self, street: str) -> int:
        return self.small_bet if street in (PREFLOP, FLOP) else self.big_bet


@dataclass(frozen=True)
class ActionEvent:
    seat: int
    action: str  # fold | call (covers check) | raise (covers bet)
    amount: int  # chips moved by this action
    street: str
    facing_raise: bool
    is_first_decision_in_round: bool


@dataclass(frozen=True)
class HandResult:
    button: int
    net: tuple[int, ...]  # per-seat chip delta, sums to zero
    reveals: dict[int, tuple[Card, Card]]
    events: tuple[ActionEvent, ...]
    board: tuple[Card, ...]
    holes: dict[int, tuple[Card, Card]]
    blinds: tuple[tuple[int, str, int], ...]  # (seat, "small"|"big", amount)
    pots: tuple[tuple[int, tuple[int, ...]], ...]  # (amount, winner seats)


@dataclass
class GameState:
    config: TableConfig
    button: int
    street: str
    stacks: list[int]
    committed: list[int]  # this street
    paid: list[int]  # whole hand
    board: list[Card]
    hole: list[tuple[Card, Card] | None]
    in_hand: list[bool]
    folded: list[bool]
    all_in: list[bool]
    current_bet: int
    raises_this_round: int
    to_act: int | None
    pending: list[int]
    deck: list[Card]
    blinds: list[tuple[int, str, int]]
    events: list[ActionEvent] = field(default_factory=list)
    acted_this_round: set[int] = field(default_factory=set)
    stacks_before: tuple[int, ...] = ()
    result: HandResult | None = None

    @property
    def pot(self) -> int:
        return sum(self.paid)

    def live_seats(self) -> list[int]:
        return [s for s in range(self.config.seats) if self.in_hand[s] and not self.folded[s]]

    def actable_seats(self) -> list[int]:
        return [s for s in self.live_seats() if not self.all_in[s]]

    def seats_from(self, start: int) -> list[int]:
        n = self.config.seats
        return [(start + i) % n for i in range(n)]

    def facing_raise(self) -> bool:
        return self.raises_this_round > 0

    def to_call(self, seat: int) -> int:
        return max(0, self.current_bet - self.committed[seat])


def new_hand(config: TableConfig, stacks, button: int, rng_seed: int | None = None,
             *, deck: list[Card] | None = None) -> GameState:
    """Deal a fresh hand: blinds posted, hole cards out, first seat to act.

    Seats with zero stack sit out. `deck` overrides the seed-determined
    shuffle (used by replay); otherwise the shuffle is a pure function of
    `rng_seed`.
    """
    stacks = list(stacks)
    if len(stacks) != config.seats:
        raise CannotStartError(f"need {config.seats} stack entries")
    in_hand = [s > 0 for s in stacks]
    if sum(in_hand) < 2:
        raise CannotStartError("need at least two funded seats")
    if not in_hand[button]:
        raise CannotStartError("button must be a funded seat")

    if deck is None:
        deck = full_deck()
        random.Random(rng_seed).shuffle(deck)
    else:
        deck = list(deck)

    state = GameState(
        config=config,
        button=button,
        street=PREFLOP,
        stacks=stacks,
        committed=[0] * config.seats,
        paid=[0] * config.seats,
        board=[],
        hole=[None] * config.seats,
        in_hand=in_hand,
        folded=[False] * config.seats,
        all_in=[False] * config.seats,
        current_bet=0,
        raises_this_round=0,
        to_act=None,
        pending=[],
        deck=deck,
        blinds=[],
        stacks_before=tuple(stacks),
    )

    order = [s for s in state.seats_from(button + 1) if in_hand[s]]
    for pass_ in range(2):
        for s in order:
            card = state.deck.pop(0)
            if pass_ == 0:
                state.hole[s] = (card,)  # type: ignore[assignment]
            else:
                state.hole[s] = (state.hole[s][0], card)  # type: ignore[index]

    if sum(in_hand) == 2:
        # heads-up: the button posts the small blind and acts first pre-flop
        sb_seat = button
        bb_seat = next(s for s in order if s != button)
    else:
        sb_seat, bb_seat = order[0], order[1]
    _post_blind(state, sb_seat, "small", config.small_blind)
    _post_blind(state, bb_seat, "big", config.big_blind)
    state.current_bet = config.big_blind

    first = sb_seat if sum(in_hand) == 2 else next(
        s for s in state.seats_from(bb_seat + 1) if in_hand[s]
    )
    state.pending = [
        s
        for s in state.seats_from(first)
        if in_hand[s] and not state.all_in[s]
    ]
    _advance_turn(state)
    return state


def _post_blind(state: GameState, seat: int, kind: str, amount: int) -> None:
    pay = min(amount, state.stacks[seat])
    state.stacks[seat] -= pay
    state.committed[seat] += pay
    state.paid[seat] += pay
    if state.stacks[seat] == 0:
        state.all_in[seat] = True
    state.blinds.append((seat, kind, pay))


def legal_actions(state: GameState) -> set[str]:
    """Legal action descriptors for the seat to act.

    Facing a wager: fold/call (+raise under the cap); otherwise check
    (+bet). Calling with a short stack is a partial all-in call.
    """
    if state.street == COMPLETE or state.to_act is None:
        return set()
    seat = state.to_act
    owe = state.to_call(seat)
    cap = state.config.max_raises_per_round
    if state.config.uncapped_heads_up and len(state.live_seats()) == 2:
        cap = 10**9
    can_raise = state.raises_this_round < cap and state.stacks[seat] > owe
    if owe > 0:
        acts = {"fold", "call"}
        if can_raise:
            acts.add("raise")
    else:
        acts = {"check"}
        if can_raise:
            acts.add("bet")
    return acts


def apply_action(state: GameState, action: str) -> tuple[GameState, list[ActionEvent]]:
    """Apply one action for the seat to act; advances streets/showdown.

    Raises IllegalActionError (state untouched) when the action is not in
    legal_actions(state).
    """
    legal = legal_actions(state)
    if action not in legal:
        raise IllegalActionError(
            f"action {action!r} not legal now (legal: {sorted(legal)})"
        )
    seat = state.to_act
    assert seat is not None
    facing = state.facing_raise()
    first = seat not in state.acted_this_round
    state.acted_this_round.add(seat)
    norm = {"check": CALL, "call": CALL, "bet": RAISE, "raise": RAISE, "fold": FOLD}[
        action
    ]

    if norm == FOLD:
        state.folded[seat] = True
        paid = 0
    elif norm == CALL:
        paid = _commit(state, seat, state.to_call(seat))
    else:
        target = state.current_bet + state.config.bet_size(state.street)
        paid = _commit(state, seat, target - state.committed[seat])
        state.current_bet = max(state.current_bet, state.committed[seat])
        state.raises_this_round += 1
        state.pending = [
            s
            for s in state.seats_from(seat + 1)
            if s != seat
            and s in set(state.actable_seats())
        ]

    event = ActionEvent(
        seat=seat,
        action=norm,
        amount=paid,
        street=state.street,
        facing_raise=facing,
        is_first_decision_in_round=first,
    )
    state.events.append(event)
    if seat in state.pending:
        state.pending.remove(seat)

    new_events = [event]
    _advance_turn(state)
    return state, new_events


def _commit(state: GameState, seat: int, amount: int) -> int:
    pay = min(amount, state.stacks[seat])
    state.stacks[seat] -= pay
    state.committed[seat] += pay
    state.paid[seat] += pay
    if state.stacks[seat] == 0 and pay >= 0:
        state.all_in[seat] = True
    return pay


def _advance_turn(state: GameState) -> None:
    live = state.live_seats()
    if len(live) == 1:
        _settle(state)
        return
    state.pending = [
        s for s in state.pending if not state.folded[s] and not state.all_in[s]
    ]
    if state.pending:
        state.to_act = state.pending[0]
        return
    # street finished
    state.to_act = None
    if state.street == RIVER:
        _settle(state)
        return
    _deal_next_street(state)
    if len(state.actable_seats()) < 2:
        # betting is over for good; run out the board
        while state.street != RIVER:
            _deal_next_street(state)
        _settle(state)
        return
    first = next(
        s for s in state.seats_from(state.button + 1) if s in set(state.actable_seats())
    )
    state.pending = [
        s for s in state.seats_from(first) if s in set(state.actable_seats())
    ]
    state.to_act = state.pending[0]


def _deal_next_street(state: GameState) -> None:
    state.street = STREETS[STREETS.index(state.street) + 1]
    want = BOARD_SIZE[state.street] - len(state.board)
    for _ in range(want):
        state.board.append(state.deck.pop(0))
    state.committed = [0] * state.config.seats
    state.current_bet = 0
    state.raises_this_round = 0
    state.acted_this_round = set()


def _settle(state: GameState) -> None:
    live = state.live_seats()
    pots: list[tuple[int, tuple[int, ...]]] = []
    reveals: dict[int, tuple[Card, Card]] = {}
    winnings = [0] * state.config.seats

    if len(live) == 1:
        winnings[live[0]] = state.pot
        pots.append((state.pot, (live[0],)))
    else:
        state.street = SHOWDOWN
        reveals = {s: state.hole[s] for s in live}
        rows = np.array(
            [
                [c.code for c in state.hole[s]] + [c.code for c in state.board]
                for s in live
            ],
            dtype=np.int32,
        )
        scores = dict(zip(live, score_hands(rows)))

        boundaries = sorted({state.paid[s] for s in live})
        total_paid = sum(state.paid)
        distributed = 0
        prev = 0
        layers = []
        for level in boundaries:
            amount = sum(min(p, level) - min(p, prev) for p in state.paid)
            eligible = [s for s in live if state.paid[s] >= level]
            layers.append([amount, eligible])
            distributed += amount
            prev = level
        layers[-1][0] += total_paid - distributed  # folded chips above all caps

        for amount, eligible in layers:
            if amount == 0:
                continue
            best = max(scores[s] for s in eligible)
            winners = [s for s in eligible if scores[s] == best]
            order = [s for s in state.seats_from(state.button + 1) if s in winners]
            base, rem = divmod(amount, len(winners))
            for i, s in enumerate(order):
                winnings[s] += base + (1 if i < rem else 0)
            pots.append((amount, tuple(order)))

    for s, amount in enumerate(winnings):
        state.stacks[s] += amount

    state.street = COMPLETE
    state.to_act = None
    net = tuple(state.stacks[s] - state.stacks_before[s] for s in range(state.config.seats))
    state.result = HandResult(
        button=state.button,
        net=net,
        reveals=reveals,
        events=tuple(state.events),
        board=tuple(state.board),
        holes={s: state.hole[s] for s in range(state.config.seats) if state.hole[s]},
        blinds=tuple(state.blinds),
        pots=tuple(pots),
    )


def build_deck(config: TableConfig, holes: dict[int, tuple[Card, Card]],
               board: list[Card], button: int, in_hand: list[bool]) -> list[Card]:
    """Assemble a deck that deals exactly these holes and board (replay).

    Seats without known holes receive arbitrary remaining cards; they must
    not reach showdown when replayed.
    """
    known = {c for pair in holes.values() for c in pair} | set(board)
    if len(known) != sum(len(p) for p in holes.values()) + len(board):
        raise ValueError("holes/board share cards")
    filler = [c for c in full_deck() if c not in known]
    n = config.seats
    order = [(button + 1 + i) % n for i in range(n)]
    order = [s for s in order if in_hand[s]]
    picks: dict[int, list[Card]] = {}
    for s in order:
        picks[s] = list(holes.get(s, (filler.pop(0), filler.pop(0))))
    deck: list[Card] = []
    for pass_ in range(2):
        for s in order:
            deck.append(picks[s][pass_])
    deck.extend(board)
    deck.extend(filler)
    return deck
