"""Hand strength, hand potential, and pre-flop income-rate tables.

All range-aware functions take an opponent range as a weight vector over
the 1326 hole-card combos (anything exposing a ``.weights`` ndarray, a raw
ndarray, or None for uniform). Weighted holdings that collide with visible
cards are ignored automatically.
"""

from __future__ import annotations

import csv
import functools
import io
from dataclasses import dataclass

import numpy as np

from .cards import (
    ALL_CLASSES,
    COMBO_CLASS_IDS,
    COMBO_CODES,
    COMBO_CONTAINS,
    Card,
    InvalidCardsError,
    combo_index,
    combo_indices,
    score_hands,
)

# Exhaustive enumeration is used whenever the outcome space fits under this
# many comparisons; above it we fall back to Monte Carlo.
MAX_ENUMERATION = 1_000_000
DEFAULT_PLAY_SAMPLES = 10_000
DEFAULT_TEST_SAMPLES = 100_000


class DegenerateRangeError(ValueError):
    """The opponent range has no mass left after removing dead cards."""


@dataclass(frozen=True)
class Strengths:
    """Current strength plus positive/negative potential, all in [0, 1]."""

    hs: float
    ppot: float
    npot: float
    ehs: float


def _weight_vector(range_) -> np.ndarray:
    if range_ is None:
        return np.ones(1326)
    weights = getattr(range_, "weights", range_)
    weights = np.asarray(weights, dtype=float)
    if weights.shape != (1326,):
        raise ValueError(f"range must cover the 1326 combos, got {weights.shape}")
    return weights


def _codes(cards) -> tuple[int, ...]:
    return tuple(c.code for c in cards)


def _check_spot(hole, board, board_sizes) -> tuple[tuple[int, ...], tuple[int, ...]]:
    hole_codes = _codes(hole)
    board_codes = _codes(board)
    if len(hole_codes) != 2:
        raise InvalidCardsError("hole must be exactly two cards")
    if len(board_codes) not in board_sizes:
        raise InvalidCardsError(f"board size {len(board_codes)} not in {board_sizes}")
    seen = hole_codes + board_codes
    if len(set(seen)) != len(seen):
        raise InvalidCardsError("hole and board cards must be disjoint")
    return hole_codes, board_codes


def _preflop_scores() -> np.ndarray:
    # Two-card made-hand order: any pair beats any unpaired holding,
    # then rank tiebreaks. Used for pre-flop "current strength" only.
    r1 = COMBO_CODES[:, 0] >> 2
    r2 = COMBO_CODES[:, 1] >> 2
    hi = np.maximum(r1, r2)
    lo = np.minimum(r1, r2)
    return np.where(r1 == r2, 0x100 | r1, (hi << 4) | lo).astype(np.int32)


@functools.lru_cache(maxsize=4096)
def _combo_scores_cached(board_key: tuple[int, ...]) -> np.ndarray:
    if not board_key:
        scores = _preflop_scores()
    else:
        board = np.array(board_key, dtype=np.int32)
        live = ~COMBO_CONTAINS[:, board].any(axis=1)
        rows = np.hstack(
            [COMBO_CODES[live], np.tile(board, (int(live.sum()), 1))]
        ).astype(np.int32)
        scores = np.full(1326, -1, dtype=np.int32)
        scores[live] = score_hands(rows)
    scores.flags.writeable = False
    return scores


def combo_scores(board) -> np.ndarray:
    """Best-hand score of every hole-card combo against this board.

    Combos that collide with a board card get score -1. Pre-flop (empty
    board) scores order two-card holdings as made hands. Cached per board.
    """
    return _combo_scores_cached(tuple(sorted(_codes(board))))


def _live_weights(weights, hole_codes, board_codes) -> np.ndarray:
    dead = np.array(hole_codes + board_codes, dtype=np.int32)
    live = ~COMBO_CONTAINS[:, dead].any(axis=1)
    out = np.where(live, weights, 0.0)
    if out.sum() <= 0.0:
        raise DegenerateRangeError("no live holdings with positive weight")
    return out


def hand_strength(hole, board, range_=None, opponents: int = 1, *,
                  samples: int | None = None, rng=None) -> float:
    """Probability the current hand beats weighted opponent holdings now.

    Ties count half; the single-opponent figure is raised to the opponent
    count. Exhaustive over the <=1326 live holdings unless an explicit
    Monte Carlo `samples` count is given.
    """
    hole_codes, board_codes = _check_spot(hole, board, (0, 3, 4, 5))
    weights = _live_weights(_weight_vector(range_), hole_codes, board_codes)
    scores = combo_scores(board)
    hero = scores[combo_index(*hole_codes)]

    if samples is None:
        total = weights.sum()
        beat = weights[scores < hero].sum() + 0.5 * weights[scores == hero].sum()
        hs1 = beat / total
    else:
        rng = rng or np.random.default_rng(0x5EED)
        idx = rng.choice(1326, size=samples, p=weights / weights.sum())
        picked = scores[idx]
        hs1 = ((picked < hero).sum() + 0.5 * (picked == hero).sum()) / samples
    return float(hs1) ** opponents


def _future_codes(dead: set[int]) -> np.ndarray:
    return np.array([c for c in range(52) if c not in dead], dtype=np.int32)


def hand_potential(hole, board, range_=None, *, lookahead: int | None = None,
                   samples: int | None = None, max_enum: int = MAX_ENUMERATION,
                   rng=None) -> tuple[float, float]:
    """(ppot, npot): chance of overtaking / being overtaken by the lookahead.

    One-card lookahead on the turn; one (default) or two cards on the flop.
    Enumerates exhaustively when the (holding x future) space fits within
    `max_enum` comparisons and no explicit sample count is given. A complete
    board returns (0.0, 0.0).
    """
    hole_codes, board_codes = _check_spot(hole, board, (3, 4, 5))
    if len(board_codes) == 5:
        return 0.0, 0.0
    if lookahead is None:
        lookahead = 1
    if len(board_codes) == 4 and lookahead != 1:
        raise ValueError("turn supports one-card lookahead only")
    if lookahead not in (1, 2):
        raise ValueError("lookahead must be 1 or 2")

    weights = _live_weights(_weight_vector(range_), hole_codes, board_codes)
    cur_scores = combo_scores(board)
    hero_cur = cur_scores[combo_index(*hole_codes)]

    live_idx = np.flatnonzero(weights > 0)
    futures = _future_codes(set(hole_codes) | set(board_codes))
    n_future = (
        len(futures) if lookahead == 1 else len(futures) * (len(futures) - 1) // 2
    )
    space = len(live_idx) * n_future

    if samples is None and space <= max_enum:
        return _potential_exact(
            hole_codes, board_codes, weights, live_idx, futures, lookahead, hero_cur,
            cur_scores,
        )
    if samples is None:
        samples = DEFAULT_PLAY_SAMPLES
    rng = rng or np.random.default_rng(0x5EED)
    return _potential_sampled(
        hole_codes, board_codes, weights, live_idx, futures, lookahead, hero_cur,
        cur_scores, samples, rng,
    )


def _tallies_to_potential(ahead, tied, behind, pot_w):
    # pot_w[cur][fin] mass; classic half-weight treatment of ties.
    denom_p = behind + 0.5 * tied
    denom_n = ahead + 0.5 * tied
    ppot = 0.0 if denom_p <= 0 else (
        pot_w[2][0] + 0.5 * pot_w[2][1] + 0.5 * pot_w[1][0]
    ) / denom_p
    npot = 0.0 if denom_n <= 0 else (
        pot_w[0][2] + 0.5 * pot_w[0][1] + 0.5 * pot_w[1][2]
    ) / denom_n
    return float(np.clip(ppot, 0.0, 1.0)), float(np.clip(npot, 0.0, 1.0))


def _final_state_masks(hero_fin, opp_fin):
    # 0 = hero ahead, 1 = tied, 2 = behind; broadcast over futures.
    ahead = opp_fin < hero_fin
    tied = opp_fin == hero_fin
    return ahead, tied


def _potential_exact(hole_codes, board_codes, weights, live_idx, futures,
                     lookahead, hero_cur, cur_scores):
    board = np.array(board_codes, dtype=np.int32)
    if lookahead == 1:
        future_sets = futures[:, None]
    else:
        a, b = np.triu_indices(len(futures), k=1)
        future_sets = np.stack([futures[a], futures[b]], axis=1)

    hero_rows = np.hstack(
        [
            np.tile(np.array(hole_codes, dtype=np.int32), (len(future_sets), 1)),
            np.tile(board, (len(future_sets), 1)),
            future_sets,
        ]
    )
    hero_fin = score_hands(hero_rows)

    opp_codes = COMBO_CODES[live_idx]
    w = weights[live_idx]
    cur = cur_scores[live_idx]
    cur_state = np.where(cur < hero_cur, 0, np.where(cur == hero_cur, 1, 2))

    pot_w = np.zeros((3, 3))
    n_opp = len(live_idx)
    chunk = max(1, (1 << 17) // max(1, len(future_sets)))
    # valid future mask: future cards must not be in the opponent's hand
    for lo in range(0, n_opp, chunk):
        sel = slice(lo, min(lo + chunk, n_opp))
        oc = opp_codes[sel]
        m = len(oc)
        f = len(future_sets)
        rows = np.hstack(
            [
                np.repeat(oc, f, axis=0),
                np.tile(board, (m * f, 1)),
                np.tile(future_sets, (m, 1)),
            ]
        )
        opp_fin = score_hands(rows).reshape(m, f)
        valid = ~(
            (future_sets[None, :, :] == oc[:, None, None, 0])
            | (future_sets[None, :, :] == oc[:, None, None, 1])
        ).any(axis=2)
        ahead, tied = _final_state_masks(hero_fin[None, :], opp_fin)
        ww = (w[sel][:, None] * valid) / 1.0
        fin_ahead = (ww * ahead).sum(axis=1)
        fin_tied = (ww * tied).sum(axis=1)
        fin_total = ww.sum(axis=1)
        fin_behind = fin_total - fin_ahead - fin_tied
        for cs in (0, 1, 2):
            mask = cur_state[sel] == cs
            if mask.any():
                pot_w[cs][0] += fin_ahead[mask].sum()
                pot_w[cs][1] += fin_tied[mask].sum()
                pot_w[cs][2] += fin_behind[mask].sum()

    totals = pot_w.sum(axis=1)
    return _tallies_to_potential(totals[0], totals[1], totals[2], pot_w)


def _potential_sampled(hole_codes, board_codes, weights, live_idx, futures,
                       lookahead, hero_cur, cur_scores, samples, rng):
    board = np.array(board_codes, dtype=np.int32)
    w = weights[live_idx]
    opp_pick = rng.choice(len(live_idx), size=samples, p=w / w.sum())
    opp_codes = COMBO_CODES[live_idx[opp_pick]]

    # Rejection-free future draw: sample from the futures list, then redraw
    # rows that collided with the sampled opponent's cards.
    def draw(n):
        if lookahead == 1:
            return futures[rng.integers(0, len(futures), size=(n, 1))]
        picks = np.empty((n, 2), dtype=np.int32)
        for i in range(n):
            picks[i] = rng.choice(futures, size=2, replace=False)
        return picks

    future_sets = draw(samples)
    for _ in range(16):
        clash = (
            (future_sets == opp_codes[:, 0:1]) | (future_sets == opp_codes[:, 1:2])
        ).any(axis=1)
        if not clash.any():
            break
        future_sets[clash] = draw(int(clash.sum()))

    uniq, inverse = np.unique(future_sets, axis=0, return_inverse=True)
    hero_rows = np.hstack(
        [
            np.tile(np.array(hole_codes, dtype=np.int32), (len(uniq), 1)),
            np.tile(board, (len(uniq), 1)),
            uniq,
        ]
    )
    hero_fin = score_hands(hero_rows)[inverse]
    opp_rows = np.hstack([opp_codes, np.tile(board, (samples, 1)), future_sets])
    opp_fin = score_hands(opp_rows)

    cur = cur_scores[live_idx[opp_pick]]
    cur_state = np.where(cur < hero_cur, 0, np.where(cur == hero_cur, 1, 2))
    fin_state = np.where(opp_fin < hero_fin, 0, np.where(opp_fin == hero_fin, 1, 2))

    pot_w = np.zeros((3, 3))
    np.add.at(pot_w, (cur_state, fin_state), 1.0)
    totals = pot_w.sum(axis=1)
    return _tallies_to_potential(totals[0], totals[1], totals[2], pot_w)


def effective_hand_strength(hole, board, range_=None, opponents: int = 1, *,
                            lookahead: int | None = None,
                            samples: int | None = None,
                            potential_samples: int | None = None,
                            rng=None) -> Strengths:
    """EHS = HS + (1 - HS) * PPot against the restricted opponent range.

    NPot is computed and reported but does not enter the headline figure;
    on a complete board EHS equals HS exactly.
    """
    hs = hand_strength(hole, board, range_, opponents, samples=samples, rng=rng)
    ppot, npot = (0.0, 0.0)
    if len(tuple(board)) < 5:
        ppot, npot = hand_potential(
            hole, board, range_, lookahead=lookahead,
            samples=potential_samples, rng=rng,
        )
    ehs = hs + (1.0 - hs) * ppot
    return Strengths(hs=hs, ppot=ppot, npot=npot, ehs=float(np.clip(ehs, 0.0, 1.0)))


# ---------------------------------------------------------------------------
# Pre-flop income-rate tables (offline roll-out simulation).
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IncomeRateTable:
    """Mean roll-out profit per starting-hand class, in small bets per hand.

    One iteration deals a full `players`-seat table to showdown with
    everyone calling one small bet pre-flop; every seat's class collects
    its net result, so each iteration updates `players` entries.
    """

    entries: dict[str, float]
    players: int
    iterations: int
    seed: int

    def ev(self, class_label: str) -> float:
        return self.entries[class_label]

    def ordered_labels(self) -> list[str]:
        """Class labels sorted by descending expected value."""
        return sorted(self.entries, key=self.entries.get, reverse=True)

    def percentile(self) -> dict[str, float]:
        """Label -> fraction of classes with strictly lower EV, in [0, 1]."""
        ordered = sorted(self.entries.values())
        return {
            label: np.searchsorted(ordered, ev, side="left") / (len(ordered) - 1)
            for label, ev in self.entries.items()
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["class", "ev_sb", "players", "iterations", "seed"])
        for pc in ALL_CLASSES:
            writer.writerow(
                [pc.label, repr(self.entries[pc.label]), self.players,
                 self.iterations, self.seed]
            )
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "IncomeRateTable":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or rows[0] != ["class", "ev_sb", "players", "iterations", "seed"]:
            raise ValueError("bad income-rate table header")
        entries = {}
        players = iterations = seed = 0
        for label, ev, p, it, s in rows[1:]:
            entries[label] = float(ev)
            players, iterations, seed = int(p), int(it), int(s)
        if len(entries) != 169:
            raise ValueError(f"expected 169 classes, got {len(entries)}")
        return cls(entries=entries, players=players, iterations=iterations, seed=seed)


def income_rate_table(players: int, iterations: int, seed: int = 0) -> IncomeRateTable:
    """Roll-out pre-flop EV per class: everyone calls, board runs out, the
    pot is split among the best hands. Deterministic for a given seed."""
    if not (2 <= players <= 10):
        raise ValueError("players must be 2..10")
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    rng = np.random.default_rng(seed)
    sums = np.zeros(169)
    counts = np.zeros(169, dtype=np.int64)
    deck = np.arange(52, dtype=np.int32)
    chunk = max(1, min(iterations, (1 << 21) // (players * 8)))

    done = 0
    while done < iterations:
        m = min(chunk, iterations - done)
        deals = rng.permuted(np.tile(deck, (m, 1)), axis=1)
        board = deals[:, 2 * players : 2 * players + 5]
        scores = np.empty((players, m), dtype=np.int32)
        class_ids = np.empty((players, m), dtype=np.int32)
        for s in range(players):
            hole = deals[:, 2 * s : 2 * s + 2]
            scores[s] = score_hands(np.hstack([hole, board]))
            class_ids[s] = COMBO_CLASS_IDS[combo_indices(hole[:, 0], hole[:, 1])]
        best = scores.max(axis=0)
        winners = scores == best
        share = players / winners.sum(axis=0)
        profit = np.where(winners, share, 0.0) - 1.0
        np.add.at(sums, class_ids.ravel(), profit.ravel())
        np.add.at(counts, class_ids.ravel(), 1)
        done += m

    evs = np.divide(sums, counts, out=np.zeros(169), where=counts > 0)
    entries = {pc.label: float(evs[pc.class_id]) for pc in ALL_CLASSES}
    return IncomeRateTable(
        entries=entries, players=players, iterations=iterations, seed=seed
    )


@functools.cache
def default_income_table() -> IncomeRateTable:
    """The packaged 10-player income-rate table used for range seeding."""
    from importlib import resources

    text = (
        resources.files("holdemlab.assets")
        .joinpath("income_rate_10p.csv")
        .read_text(encoding="utf-8")
    )
    return IncomeRateTable.from_csv(text)
