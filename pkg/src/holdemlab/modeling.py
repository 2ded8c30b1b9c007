"""Per-opponent statistical models: VP$IP, aggression factor, four-type
classification, and hand-weight tables with frequency-driven reweighting.

A profile is owned by one observer and fed every ActionEvent of the
profiled player; `start_hand` marks hand boundaries. Weight tables hold an
absolute weight in [0, 1] for each of the 1326 hole-card combos.
"""

from __future__ import annotations

import csv
import functools
import io
import logging
from dataclasses import dataclass, field

import numpy as np

from .cards import COMBO_CLASS_IDS, COMBO_CONTAINS, CLASS_BY_LABEL, Card
from .engine import ActionEvent, CALL, FOLD, PREFLOP, RAISE
from .equity import IncomeRateTable, combo_scores, default_income_table

log = logging.getLogger(__name__)

OPPONENT_TYPES = ("TA", "TP", "LA", "LP")


@dataclass(frozen=True)
class ModelConfig:
    """Thresholds for classification and reweighting (paper leaves them open)."""

    vpip_threshold: float = 0.28
    af_threshold: float = 1.0
    af_cap: float = 10.0
    warmup_hands: int = 20
    prior_type: str = "TP"
    ramp_width: float = 0.2
    ramp_floor: float = 0.01


DEFAULT_MODEL_CONFIG = ModelConfig()

_BUCKET_ACTIONS = (FOLD, CALL, RAISE)


@dataclass
class ActionFrequencyTable:
    """fold/call/raise counts per (street, facing_raise) context."""

    counts: dict[tuple[str, bool], list[int]] = field(default_factory=dict)

    def record(self, street: str, facing_raise: bool, action: str) -> None:
        bucket = self.counts.setdefault((street, facing_raise), [0, 0, 0])
        bucket[_BUCKET_ACTIONS.index(action)] += 1

    def frequency(self, street: str, facing_raise: bool, action: str) -> float:
        """Laplace-smoothed frequency of `action` in its context."""
        bucket = self.counts.get((street, facing_raise), [0, 0, 0])
        total = sum(bucket)
        return (bucket[_BUCKET_ACTIONS.index(action)] + 1) / (total + 3)


@dataclass
class OpponentProfile:
    player: str = ""
    hands_observed: int = 0
    vpip_numerator: int = 0
    raises: int = 0
    calls: int = 0
    freq_first: ActionFrequencyTable = field(default_factory=ActionFrequencyTable)
    freq_later: ActionFrequencyTable = field(default_factory=ActionFrequencyTable)
    _paid_this_hand: bool = False

    def start_hand(self) -> None:
        """Mark the player as dealt into a new hand."""
        self.hands_observed += 1
        self._paid_this_hand = False

    @property
    def vpip(self) -> float:
        if self.hands_observed == 0:
            return 0.0
        return self.vpip_numerator / self.hands_observed


def observe(profile: OpponentProfile, event: ActionEvent) -> OpponentProfile:
    """Fold one observed action of the profiled player into the counters.

    VP$IP counts the first voluntary pre-flop call/raise per hand; big-blind
    checks (zero-amount calls) are not voluntary. Checks do not count as
    calls for the aggression factor.
    """
    voluntary = event.street == PREFLOP and (
        event.action == RAISE or (event.action == CALL and event.amount > 0)
    )
    if voluntary and not profile._paid_this_hand:
        profile.vpip_numerator += 1
        profile._paid_this_hand = True

    if event.action == RAISE:
        profile.raises += 1
    elif event.action == CALL and event.amount > 0:
        profile.calls += 1

    table = profile.freq_first if event.is_first_decision_in_round else profile.freq_later
    table.record(event.street, event.facing_raise, event.action)
    return profile


def aggression_factor(profile: OpponentProfile,
                      config: ModelConfig = DEFAULT_MODEL_CONFIG) -> float:
    """raises / calls, capped when the player has never called."""
    if profile.calls == 0:
        return config.af_cap if profile.raises > 0 else 0.0
    return profile.raises / profile.calls


def classify(profile: OpponentProfile,
             config: ModelConfig = DEFAULT_MODEL_CONFIG) -> str:
    """Four-type classification; the prior type until warmup is reached.

    Loose iff vpip >= threshold, aggressive iff AF >= threshold (both
    boundaries inclusive).
    """
    if profile.hands_observed < config.warmup_hands:
        return config.prior_type
    loose = profile.vpip >= config.vpip_threshold
    aggressive = aggression_factor(profile, config) >= config.af_threshold
    return ("L" if loose else "T") + ("A" if aggressive else "P")


# ---------------------------------------------------------------------------
# Weight tables.
# ---------------------------------------------------------------------------


@dataclass
class WeightTable:
    """Absolute weight in [0, 1] per hole-card combo; dead combos weigh 0."""

    weights: np.ndarray

    def __post_init__(self):
        self.weights = np.asarray(self.weights, dtype=float)
        if self.weights.shape != (1326,):
            raise ValueError("weight table must cover the 1326 combos")

    @classmethod
    def uniform(cls) -> "WeightTable":
        return cls(np.ones(1326))

    def copy(self) -> "WeightTable":
        return WeightTable(self.weights.copy())

    def without_cards(self, cards) -> "WeightTable":
        """Zero every combo containing one of the given visible cards."""
        out = self.weights.copy()
        codes = [c.code for c in cards]
        if codes:
            out[COMBO_CONTAINS[:, codes].any(axis=1)] = 0.0
        return WeightTable(out)


@functools.lru_cache(maxsize=16)
def _class_percentile_by_combo(table_key: tuple) -> np.ndarray:
    # combo -> EV of its class, then tie-aware percentile over combos
    labels, values = table_key
    ev_by_class = np.empty(169)
    for label, ev in zip(labels, values):
        ev_by_class[CLASS_BY_LABEL[label].class_id] = ev
    combo_ev = ev_by_class[COMBO_CLASS_IDS]
    order = np.sort(combo_ev)
    lo = np.searchsorted(order, combo_ev, side="left")
    hi = np.searchsorted(order, combo_ev, side="right")
    return (lo + 0.5 * (hi - lo)) / len(combo_ev)


def _preflop_percentiles(income_table: IncomeRateTable) -> np.ndarray:
    labels = tuple(sorted(income_table.entries))
    values = tuple(income_table.entries[k] for k in labels)
    return _class_percentile_by_combo((labels, values))


def strength_percentiles(board, live_mask: np.ndarray,
                         income_table: IncomeRateTable | None = None) -> np.ndarray:
    """Tie-aware strength percentile in [0, 1] of every live combo.

    Post-flop strength is the made-hand score on the current board;
    pre-flop it is the class income rate (the standard pre-flop ordering).
    """
    if len(tuple(board)) == 0:
        pct = _preflop_percentiles(income_table or default_income_table())
        return pct
    scores = combo_scores(board).astype(float)
    live_scores = scores[live_mask]
    order = np.sort(live_scores)
    lo = np.searchsorted(order, scores, side="left")
    hi = np.searchsorted(order, scores, side="right")
    return (lo + 0.5 * (hi - lo)) / max(1, len(live_scores))


def reweight(table: WeightTable, event: ActionEvent, profile: OpponentProfile,
             board, hole_excluded=(), *,
             config: ModelConfig = DEFAULT_MODEL_CONFIG,
             income_table: IncomeRateTable | None = None) -> WeightTable:
    """Update a weight table after observing a call/check or raise.

    With observed action frequency f, holdings above the (1-f)+w/2
    strength percentile keep their weight, holdings below (1-f)-w/2 are
    scaled by the floor, and the band between scales linearly. Weights are
    absolute: nothing is renormalized. An all-zero result resets to
    uniform over live holdings (logged as a warning).
    """
    if event.action == FOLD:
        raise ValueError("folds remove the player; reweight handles call/raise only")

    freq_table = (
        profile.freq_first if event.is_first_decision_in_round else profile.freq_later
    )
    f = freq_table.frequency(event.street, event.facing_raise, event.action)

    dead_codes = [c.code for c in tuple(board) + tuple(hole_excluded)]
    live = ~COMBO_CONTAINS[:, dead_codes].any(axis=1) if dead_codes else np.ones(1326, bool)

    pct = strength_percentiles(board, live, income_table)
    threshold = 1.0 - f
    linear = (pct - (threshold - config.ramp_width / 2)) / config.ramp_width
    factor = np.clip(linear, config.ramp_floor, 1.0)

    out = table.weights * np.where(live, factor, 0.0)
    out[~live] = 0.0
    if out.sum() <= 0.0:
        log.warning("weight table for %s collapsed to zero; resetting to uniform",
                    profile.player or "<opponent>")
        out = np.where(live, 1.0, 0.0)
    return WeightTable(out)


def infer_range(profile: OpponentProfile, type_: str | None = None, *,
                config: ModelConfig = DEFAULT_MODEL_CONFIG,
                income_table: IncomeRateTable | None = None) -> WeightTable:
    """Pre-flop prior: uniform weight over the top-k fraction of classes by
    income rate, k = observed vpip clamped to [0.05, 1].

    Before warmup the range is uniform over everything (no evidence). The
    type argument is accepted for signature stability; the vpip already
    encodes the loose/tight axis that drives the prior.
    """
    table = income_table or default_income_table()
    if profile.hands_observed < config.warmup_hands:
        return WeightTable.uniform()
    k = float(np.clip(profile.vpip, 0.05, 1.0))
    keep = max(1, int(np.ceil(k * 169)))
    kept_classes = {
        CLASS_BY_LABEL[label].class_id for label in table.ordered_labels()[:keep]
    }
    weights = np.where(np.isin(COMBO_CLASS_IDS, list(kept_classes)), 1.0, 0.0)
    return WeightTable(weights)


def profiles_to_csv(profiles, config: ModelConfig = DEFAULT_MODEL_CONFIG) -> str:
    """Rows of "player,hands,vpip,af,type" for a collection of profiles."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["player", "hands", "vpip", "af", "type"])
    for p in profiles:
        writer.writerow(
            [p.player, p.hands_observed, f"{p.vpip:.4f}",
             f"{aggression_factor(p, config):.4f}", classify(p, config)]
        )
    return buf.getvalue()
