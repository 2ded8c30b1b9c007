import numpy as np
import pytest

from holdemlab.cards import combo_index, parse_cards
from holdemlab.equity import (
    DegenerateRangeError,
    IncomeRateTable,
    effective_hand_strength,
    hand_potential,
    hand_strength,
    income_rate_table,
)

from oracles import oracle_hand_strength


def cards(text):
    return parse_cards(text)


def tuples(text):
    return [(c.rank, c.suit) for c in parse_cards(text)]


class TestHandStrength:
    def test_nut_hand_on_complete_board(self):
        hs = hand_strength(cards("Ah Kh"), cards("Qh Jh Th 2c 3d"))
        assert hs == 1.0

    def test_aa_preflop_exhaustive(self):
        # Frozen from the brute-force oracle over all 1225 live holdings.
        hs = hand_strength(cards("As Ah"), [])
        assert hs == pytest.approx(0.9995918367346939, abs=1e-12)

    def test_river_spot_matches_oracle(self):
        hole, board = cards("Jc Jd"), cards("8s 4h Qd 2c 9h")
        got = hand_strength(hole, board)
        want = oracle_hand_strength(tuples("Jc Jd"), tuples("8s 4h Qd 2c 9h"))
        assert got == pytest.approx(want, abs=1e-12)

    def test_singleton_range(self):
        hole, board = cards("Ah Ad"), cards("Qs 7c 2d 9h 3s")
        weights = np.zeros(1326)
        kk = cards("Kh Kd")
        weights[combo_index(kk[0].code, kk[1].code)] = 1.0
        assert hand_strength(hole, board, weights) == 1.0
        # Swap roles: now the hero loses outright.
        weights = np.zeros(1326)
        aa = cards("Ah Ad")
        weights[combo_index(aa[0].code, aa[1].code)] = 1.0
        assert hand_strength(cards("Kh Kd"), board, weights) == 0.0
        # Identical rank on a board that plays: chopped pot.
        board2 = cards("As Kc Qd Jh Tc")
        weights = np.zeros(1326)
        x = cards("2h 3d")
        weights[combo_index(x[0].code, x[1].code)] = 1.0
        assert hand_strength(cards("2c 3c"), board2, weights) == 0.5

    def test_opponent_count_exponent(self):
        hole, board = cards("Jc Jd"), cards("8s 4h Qd 2c 9h")
        one = hand_strength(hole, board, opponents=1)
        three = hand_strength(hole, board, opponents=3)
        assert three == pytest.approx(one**3, abs=1e-12)

    def test_monte_carlo_close_to_exact(self):
        hole, board = cards("Ts 9s"), cards("8s 7d 2h")
        exact = hand_strength(hole, board)
        mc = hand_strength(hole, board, samples=100_000)
        assert mc == pytest.approx(exact, abs=0.01)

    def test_degenerate_range_rejected(self):
        hole, board = cards("Ah Ad"), cards("Ks 7c 2d")
        weights = np.zeros(1326)
        ks = cards("Ks 7c")  # dead: both cards on the board/hole
        weights[combo_index(ks[0].code, ks[1].code)] = 1.0
        with pytest.raises(DegenerateRangeError):
            hand_strength(hole, board, weights)


class TestHandPotential:
    def test_river_is_zero(self):
        assert hand_potential(cards("Ah Kh"), cards("Qh Jh Th 2c 3d")) == (0.0, 0.0)

    def test_nut_flush_draw_matches_enumeration(self):
        # Frozen from the naive one-card-lookahead enumeration oracle.
        ppot, npot = hand_potential(cards("Ah Kh"), cards("Qh 7h 2c"))
        assert ppot == pytest.approx(0.3031436935217004, abs=1e-9)
        assert npot == pytest.approx(0.08440651667959659, abs=1e-9)

    def test_lock_hand_has_no_npot(self):
        ppot, npot = hand_potential(cards("As Ad"), cards("Ac Ah Kd"))
        assert npot == 0.0
        assert ppot == 0.0  # never behind either

    def test_sampled_close_to_exact(self):
        hole, board = cards("Ah Kh"), cards("Qh 7h 2c")
        exact, _ = hand_potential(hole, board)
        sampled, _ = hand_potential(hole, board, samples=60_000)
        assert sampled == pytest.approx(exact, abs=0.02)

    def test_turn_lookahead(self):
        ppot, npot = hand_potential(cards("Ah Kh"), cards("Qh 7h 2c 2d"))
        assert 0.0 < ppot < 1.0
        with pytest.raises(ValueError):
            hand_potential(cards("Ah Kh"), cards("Qh 7h 2c 2d"), lookahead=2)


class TestEffectiveHandStrength:
    def test_complete_board_collapses_to_hs(self):
        s = effective_hand_strength(cards("Jc Jd"), cards("8s 4h Qd 2c 9h"))
        assert s.ppot == 0.0 and s.npot == 0.0
        assert s.ehs == s.hs

    def test_formula_composition(self):
        # hs/ppot frozen from the enumeration oracles for 8c8d on 9s5h2d.
        s = effective_hand_strength(cards("8c 8d"), cards("9s 5h 2d"))
        assert s.hs == pytest.approx(0.8330249768732655, abs=1e-9)
        assert s.ppot == pytest.approx(0.046168051708217916, abs=1e-9)
        assert s.ehs == pytest.approx(s.hs + (1 - s.hs) * s.ppot, abs=1e-12)

    def test_ehs_at_least_hs(self):
        rng = np.random.default_rng(11)
        from holdemlab.cards import full_deck

        deck = full_deck()
        for _ in range(25):
            picks = rng.choice(52, size=7, replace=False)
            hole = [deck[picks[0]], deck[picks[1]]]
            board = [deck[p] for p in picks[2 : rng.integers(5, 8)]]
            s = effective_hand_strength(hole, board, potential_samples=400)
            assert 0.0 <= s.hs <= s.ehs <= 1.0


class TestIncomeRateTable:
    def test_deterministic(self):
        a = income_rate_table(players=4, iterations=3000, seed=9)
        b = income_rate_table(players=4, iterations=3000, seed=9)
        assert a.entries == b.entries

    def test_aa_on_top(self):
        table = income_rate_table(players=6, iterations=40_000, seed=3)
        best = max(table.entries, key=table.entries.get)
        assert best == "AA"

    def test_trash_in_bottom_decile_ten_players(self):
        table = income_rate_table(players=10, iterations=40_000, seed=5)
        ordered = table.ordered_labels()
        assert "72o" in ordered[-17:]

    def test_csv_round_trip(self):
        table = income_rate_table(players=3, iterations=500, seed=1)
        again = IncomeRateTable.from_csv(table.to_csv())
        assert again == table

    def test_percentile_ordering(self):
        table = income_rate_table(players=6, iterations=20_000, seed=3)
        pct = table.percentile()
        assert pct["AA"] == 1.0
        assert pct["72o"] < 0.2

    @pytest.mark.slow
    def test_rank_correlation_under_doubling(self):
        a = income_rate_table(players=5, iterations=100_000, seed=21)
        b = income_rate_table(players=5, iterations=200_000, seed=22)
        va = np.array([a.entries[pc.label] for pc in __import__("holdemlab.cards", fromlist=["ALL_CLASSES"]).ALL_CLASSES])
        vb = np.array([b.entries[pc.label] for pc in __import__("holdemlab.cards", fromlist=["ALL_CLASSES"]).ALL_CLASSES])
        ra = np.argsort(np.argsort(va))
        rb = np.argsort(np.argsort(vb))
        corr = np.corrcoef(ra, rb)[0, 1]
        assert corr >= 0.95
