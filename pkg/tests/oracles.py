"""Independent brute-force oracles used to pin expected values.

Everything in here is deliberately naive and shares no code with the
library's evaluation or equity paths.
"""

from itertools import combinations


def naive_rank5(cards):
    """Classify exactly five (rank, suit) tuples.

    Returns a comparable tuple (category, tiebreaks...) with category
    0=high card .. 8=straight flush.
    """
    ranks = sorted((r for r, _ in cards), reverse=True)
    suits = [s for _, s in cards]
    flush = len(set(suits)) == 1

    distinct = sorted(set(ranks), reverse=True)
    straight_high = None
    if len(distinct) == 5:
        if distinct[0] - distinct[4] == 4:
            straight_high = distinct[0]
        elif distinct == [14, 5, 4, 3, 2]:
            straight_high = 5

    counts = sorted(
        ((ranks.count(r), r) for r in distinct), key=lambda t: (-t[0], -t[1])
    )

    if flush and straight_high:
        return (8, straight_high)
    if counts[0][0] == 4:
        return (7, counts[0][1], counts[1][1])
    if counts[0][0] == 3 and counts[1][0] == 2:
        return (6, counts[0][1], counts[1][1])
    if flush:
        return (5, *ranks)
    if straight_high:
        return (4, straight_high)
    if counts[0][0] == 3:
        return (3, counts[0][1], counts[1][1], counts[2][1])
    if counts[0][0] == 2 and counts[1][0] == 2:
        return (2, counts[0][1], counts[1][1], counts[2][1])
    if counts[0][0] == 2:
        return (1, counts[0][1], counts[1][1], counts[2][1], counts[3][1])
    return (0, *ranks)


def naive_best(cards):
    """Best naive_rank5 over every 5-card subset of 5..7 cards."""
    return max(naive_rank5(combo) for combo in combinations(cards, 5))


def cards_to_tuples(cards):
    """holdemlab Card objects -> plain (rank, suit) tuples."""
    return [(c.rank, c.suit) for c in cards]


def two_card_rank(cards):
    """Pre-flop made-hand order for exactly two (rank, suit) tuples."""
    (r1, _), (r2, _) = cards
    if r1 == r2:
        return (1, r1)
    return (0, max(r1, r2), min(r1, r2))


def full_deck_tuples():
    return [(r, s) for r in range(2, 15) for s in "cdhs"]


def oracle_hand_strength(hole, board, weight_of=None, opponents=1):
    """Exhaustive weighted enumeration of opponent holdings, ties half.

    hole/board are (rank, suit) tuples; weight_of maps a frozenset combo
    to its weight (default uniform).
    """
    dead = set(hole) | set(board)
    remaining = [c for c in full_deck_tuples() if c not in dead]
    hero = naive_best(list(hole) + list(board)) if board else two_card_rank(hole)
    beat = total = 0.0
    for combo in combinations(remaining, 2):
        w = 1.0 if weight_of is None else weight_of(frozenset(combo))
        if w <= 0.0:
            continue
        opp = (
            naive_best(list(combo) + list(board)) if board else two_card_rank(combo)
        )
        total += w
        if opp < hero:
            beat += w
        elif opp == hero:
            beat += 0.5 * w
    return (beat / total) ** opponents


def oracle_hand_potential_1(hole, board, weight_of=None):
    """One-card-lookahead potential by full enumeration, ties half."""
    dead = set(hole) | set(board)
    remaining = [c for c in full_deck_tuples() if c not in dead]
    hero_cur = naive_best(list(hole) + list(board))
    pot = [[0.0] * 3 for _ in range(3)]
    for combo in combinations(remaining, 2):
        w = 1.0 if weight_of is None else weight_of(frozenset(combo))
        if w <= 0.0:
            continue
        opp_cur = naive_best(list(combo) + list(board))
        cur = 0 if opp_cur < hero_cur else (1 if opp_cur == hero_cur else 2)
        for future in remaining:
            if future in combo:
                continue
            hero_fin = naive_best(list(hole) + list(board) + [future])
            opp_fin = naive_best(list(combo) + list(board) + [future])
            fin = 0 if opp_fin < hero_fin else (1 if opp_fin == hero_fin else 2)
            pot[cur][fin] += w
    totals = [sum(row) for row in pot]
    denom_p = totals[2] + 0.5 * totals[1]
    denom_n = totals[0] + 0.5 * totals[1]
    ppot = 0.0 if denom_p <= 0 else (
        (pot[2][0] + 0.5 * pot[2][1] + 0.5 * pot[1][0]) / denom_p
    )
    npot = 0.0 if denom_n <= 0 else (
        (pot[0][2] + 0.5 * pot[0][1] + 0.5 * pot[1][2]) / denom_n
    )
    return ppot, npot
