"""Shared opponent-tracking state used by the adaptive agents.

Keeps one OpponentProfile and one WeightTable per opponent seat, fed from
the public event stream. Range priors come from infer_range at the start
of each hand; observed calls/raises reweight the table.
"""

from __future__ import annotations

import numpy as np

from ..cards import COMBO_CONTAINS
from ..engine import FOLD, GameState
from ..equity import IncomeRateTable, default_income_table
from ..modeling import (
    DEFAULT_MODEL_CONFIG,
    ModelConfig,
    OpponentProfile,
    WeightTable,
    classify,
    infer_range,
    observe,
    reweight,
    strength_percentiles,
)


class OpponentTracker:
    def __init__(self, hero_seat: int, *, reweighting: bool = True,
                 model_config: ModelConfig = DEFAULT_MODEL_CONFIG,
                 income_table: IncomeRateTable | None = None):
        self.hero_seat = hero_seat
        self.reweighting = reweighting
        self.config = model_config
        self.income_table = income_table or default_income_table()
        self.profiles: dict[int, OpponentProfile] = {}
        self.tables: dict[int, WeightTable] = {}
        self._hero_hole: tuple = ()

    def profile(self, seat: int) -> OpponentProfile:
        if seat not in self.profiles:
            self.profiles[seat] = OpponentProfile(player=f"seat{seat}")
        return self.profiles[seat]

    def start_hand(self, seats_dealt, hero_hole) -> None:
        self._hero_hole = tuple(hero_hole)
        self.tables = {}
        for seat in seats_dealt:
            if seat == self.hero_seat:
                continue
            self.profile(seat).start_hand()
            if self.reweighting:
                prior = infer_range(
                    self.profile(seat), config=self.config,
                    income_table=self.income_table,
                )
            else:
                prior = WeightTable.uniform()
            self.tables[seat] = prior.without_cards(self._hero_hole)

    def observe_event(self, event, state: GameState) -> None:
        if event.seat == self.hero_seat:
            return
        profile = self.profile(event.seat)
        observe(profile, event)
        if event.seat not in self.tables:
            return
        if event.action == FOLD:
            self.tables.pop(event.seat, None)
        elif self.reweighting:
            self.tables[event.seat] = reweight(
                self.tables[event.seat], event, profile, tuple(state.board),
                self._hero_hole, config=self.config,
                income_table=self.income_table,
            )

    def table_for(self, seat: int, board) -> np.ndarray:
        """Live weight vector for one opponent (dead cards zeroed)."""
        table = self.tables.get(seat)
        if table is None:
            table = WeightTable.uniform()
        weights = table.without_cards(tuple(board) + self._hero_hole).weights
        if weights.sum() <= 0:
            dead = [c.code for c in tuple(board) + self._hero_hole]
            weights = np.where(COMBO_CONTAINS[:, dead].any(axis=1), 0.0, 1.0)
        return weights

    def merged_table(self, seats, board) -> np.ndarray:
        """Elementwise mean of live opponent ranges (potential lookups)."""
        vecs = [self.table_for(s, board) for s in seats]
        if not vecs:
            return WeightTable.uniform().without_cards(
                tuple(board) + self._hero_hole
            ).weights
        return np.mean(vecs, axis=0)

    def opponent_type(self, seat: int) -> str:
        return classify(self.profile(seat), self.config)
