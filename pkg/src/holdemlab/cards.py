"""Cards, deterministic decks, hand evaluation, and pre-flop hand classes.

Card text format: rank character (2-9, T, J, Q, K, A) followed by a suit
character (c, d, h, s), e.g. "Ah" or "Td".
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from importlib import resources

import numpy as np

RANK_CHARS = "23456789TJQKA"
SUIT_CHARS = "cdhs"
RANK_OF_CHAR = {ch: i + 2 for i, ch in enumerate(RANK_CHARS)}

CATEGORY_NAMES = (
    "high card",
    "one pair",
    "two pair",
    "three of a kind",
    "straight",
    "flush",
    "full house",
    "four of a kind",
    "straight flush",
)

# Fixed tiebreak vector length per category, so HandRank comparison is a
# plain lexicographic comparison of equal-shape tuples.
TIEBREAK_LEN = (5, 4, 3, 3, 1, 5, 2, 2, 1)


class InvalidCardsError(ValueError):
    """Malformed card text, duplicate cards, or a wrongly sized card set."""


@dataclass(frozen=True, order=True)
class Card:
    rank: int  # 2..14, ace high
    suit: str  # one of "cdhs"

    def __post_init__(self):
        if not (2 <= self.rank <= 14) or self.suit not in SUIT_CHARS:
            raise InvalidCardsError(f"bad card ({self.rank}, {self.suit!r})")

    @property
    def code(self) -> int:
        """Dense integer code 0..51 (rank-major)."""
        return (self.rank - 2) * 4 + SUIT_CHARS.index(self.suit)

    @classmethod
    def from_code(cls, code: int) -> "Card":
        return _CARDS_BY_CODE[code]

    @classmethod
    def parse(cls, text: str) -> "Card":
        if len(text) != 2 or text[0] not in RANK_OF_CHAR or text[1] not in SUIT_CHARS:
            raise InvalidCardsError(f"bad card text {text!r}")
        return cls(RANK_OF_CHAR[text[0]], text[1])

    def __str__(self) -> str:
        return RANK_CHARS[self.rank - 2] + self.suit

    def __repr__(self) -> str:
        return f"Card({self})"


_CARDS_BY_CODE = tuple(
    Card(rank, suit) for rank in range(2, 15) for suit in SUIT_CHARS
)


def full_deck() -> list[Card]:
    """The 52 cards in a fixed canonical order."""
    return list(_CARDS_BY_CODE)


def parse_cards(text: str) -> list[Card]:
    """Parse a whitespace-separated card list like "Ah Kd 2c"."""
    return [Card.parse(tok) for tok in text.split()]


def cards_to_text(cards) -> str:
    return " ".join(str(c) for c in cards)


@functools.total_ordering
@dataclass(frozen=True)
class HandRank:
    """Total-order result of evaluating a 5..7 card hand.

    category: 0 (high card) .. 8 (straight flush).
    tiebreak: rank values, most significant first, fixed length per category.
    Comparison never involves suits.
    """

    category: int
    tiebreak: tuple[int, ...]

    def __eq__(self, other) -> bool:
        return (self.category, self.tiebreak) == (other.category, other.tiebreak)

    def __lt__(self, other) -> bool:
        return (self.category, self.tiebreak) < (other.category, other.tiebreak)

    @property
    def name(self) -> str:
        return CATEGORY_NAMES[self.category]


# ---------------------------------------------------------------------------
# Vectorized evaluation core.
#
# Hands are scored as packed int32 keys: category in the top nibble-group,
# then five tiebreak nibbles (rank indices 0..12, unused slots zero).
# Larger key <=> better hand, and the key depends only on ranks/category,
# never on suits.
# ---------------------------------------------------------------------------

_POW2 = (1 << np.arange(13)).astype(np.int32)


def _high_bit(mask: np.ndarray) -> np.ndarray:
    """Index of the highest set bit, -1 for zero. Exact for masks < 2**16."""
    out = np.full(mask.shape, -1, dtype=np.int32)
    nz = mask > 0
    out[nz] = np.log2(mask[nz]).astype(np.int32)
    return out


def _straight_top(present_bits: np.ndarray) -> np.ndarray:
    """Top rank index of the best straight in a 13-bit presence mask, -1 if none."""
    # Bit 0 of ext is the ace playing low; bit i (i>=1) is rank index i-1.
    ext = (present_bits.astype(np.int32) << 1) | (present_bits >> 12)
    runs = ext & (ext >> 1) & (ext >> 2) & (ext >> 3) & (ext >> 4)
    top = _high_bit(runs)
    return np.where(top >= 0, top + 3, -1)


def _take_top(bits: np.ndarray, count: int) -> list[np.ndarray]:
    """Indices of the `count` highest set bits per row (-1 padding)."""
    bits = bits.astype(np.int32).copy()
    out = []
    for _ in range(count):
        h = _high_bit(bits)
        out.append(h)
        bits &= ~np.where(h >= 0, _safe_shift(h), 0)
    return out


def _safe_shift(idx: np.ndarray) -> np.ndarray:
    return (1 << np.maximum(idx, 0)).astype(np.int32)


def score_hands(codes: np.ndarray) -> np.ndarray:
    """Packed comparable scores for an (n, k) array of card codes, k in 5..7.

    Scores order exactly as HandRank does; use decode_score to expand one.
    """
    codes = np.asarray(codes)
    if codes.ndim != 2 or not (5 <= codes.shape[1] <= 7):
        raise InvalidCardsError(f"expected (n, 5..7) card codes, got {codes.shape}")
    n = codes.shape[0]
    if n == 0:
        return np.empty(0, dtype=np.int32)
    out = np.empty(n, dtype=np.int32)
    step = 1 << 15
    for lo in range(0, n, step):
        out[lo : lo + step] = _score_block(codes[lo : lo + step])
    return out


def _score_block(codes: np.ndarray) -> np.ndarray:
    n, k = codes.shape
    ranks = (codes >> 2).astype(np.int8)
    suits = (codes & 3).astype(np.int8)

    one_hot = ranks[:, :, None] == np.arange(13, dtype=np.int8)
    rank_cnt = one_hot.sum(axis=1, dtype=np.int8)  # (n, 13)
    suit_cnt = (suits[:, :, None] == np.arange(4, dtype=np.int8)).sum(
        axis=1, dtype=np.int8
    )

    present = (rank_cnt > 0) @ _POW2
    pair_bits = (rank_cnt == 2) @ _POW2
    trip_bits = (rank_cnt == 3) @ _POW2
    quad_bits = (rank_cnt == 4) @ _POW2

    flush_suit = np.argmax(suit_cnt, axis=1)
    is_flush = suit_cnt[np.arange(n), flush_suit] >= 5
    flush_present = (
        ((suits == flush_suit[:, None].astype(np.int8))[:, :, None] & one_hot).any(
            axis=1
        )
        @ _POW2
    )
    flush_present = np.where(is_flush, flush_present, 0)

    straight_top = _straight_top(present)
    sflush_top = _straight_top(flush_present)

    quad = _high_bit(quad_bits)
    trip1 = _high_bit(trip_bits)
    # With 7 cards two trips can coexist; the lower one acts as the pair.
    lower_trips = trip_bits & ~np.where(trip1 >= 0, _safe_shift(trip1), 0)
    fh_pair = _high_bit(pair_bits | lower_trips)

    t = np.zeros((5, n), dtype=np.int32)
    category = np.zeros(n, dtype=np.int32)

    flush_top5 = _take_top(flush_present, 5)
    present_top5 = _take_top(present, 5)
    pair_top2 = _take_top(pair_bits, 2)

    # high card
    for i in range(5):
        t[i] = present_top5[i]

    has_pair = pair_top2[0] >= 0
    sel = has_pair & (category == 0) & (pair_top2[1] < 0) & (trip1 < 0) & (quad < 0)
    if sel.any():
        kick = _take_top(
            np.where(sel, present & ~_safe_shift(pair_top2[0]), 0), 3
        )
        category[sel] = 1
        t[0][sel] = pair_top2[0][sel]
        for i in range(3):
            t[i + 1][sel] = kick[i][sel]
        t[4][sel] = 0

    sel = (pair_top2[1] >= 0) & (trip1 < 0) & (quad < 0)
    if sel.any():
        kick_bits = present & ~_safe_shift(pair_top2[0]) & ~_safe_shift(pair_top2[1])
        kick = _high_bit(np.where(sel, kick_bits, 0))
        category[sel] = 2
        t[0][sel] = pair_top2[0][sel]
        t[1][sel] = pair_top2[1][sel]
        t[2][sel] = kick[sel]
        t[3][sel] = 0
        t[4][sel] = 0

    sel = (trip1 >= 0) & (fh_pair < 0) & (quad < 0)
    if sel.any():
        kick = _take_top(np.where(sel, present & ~_safe_shift(trip1), 0), 2)
        category[sel] = 3
        t[0][sel] = trip1[sel]
        t[1][sel] = kick[0][sel]
        t[2][sel] = kick[1][sel]
        t[3][sel] = 0
        t[4][sel] = 0

    for cat, cond, slots in (
        (4, straight_top >= 0, (straight_top,)),
        (5, is_flush, flush_top5),
        (6, (trip1 >= 0) & (fh_pair >= 0), (trip1, fh_pair)),
    ):
        sel = cond & (category < cat)
        if sel.any():
            category[sel] = cat
            for i in range(5):
                t[i][sel] = slots[i][sel] if i < len(slots) else 0

    sel = quad >= 0
    if sel.any():
        kick = _high_bit(np.where(sel, present & ~_safe_shift(quad), 0))
        category[sel] = 7
        t[0][sel] = quad[sel]
        t[1][sel] = kick[sel]
        t[2][sel] = 0
        t[3][sel] = 0
        t[4][sel] = 0

    sel = sflush_top >= 0
    if sel.any():
        category[sel] = 8
        t[0][sel] = sflush_top[sel]
        for i in range(1, 5):
            t[i][sel] = 0

    score = category
    for i in range(5):
        score = (score << 4) | np.maximum(t[i], 0)
    return score


def decode_score(score: int) -> HandRank:
    """Expand a packed score back into a HandRank."""
    nibbles = [(score >> shift) & 0xF for shift in (16, 12, 8, 4, 0)]
    category = (score >> 20) & 0xF
    length = TIEBREAK_LEN[category]
    return HandRank(category, tuple(v + 2 for v in nibbles[:length]))


def evaluate(cards) -> HandRank:
    """Rank of the best 5-card hand within 5..7 distinct cards."""
    cards = list(cards)
    if not (5 <= len(cards) <= 7):
        raise InvalidCardsError(f"need 5..7 cards, got {len(cards)}")
    codes = [c.code for c in cards]
    if len(set(codes)) != len(codes):
        raise InvalidCardsError("duplicate cards")
    score = score_hands(np.array([codes], dtype=np.int32))[0]
    return decode_score(int(score))


# ---------------------------------------------------------------------------
# Canonical pre-flop classes (169) and the 1326 hole-card combos.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PreflopClass:
    """One of the 169 suit-isomorphic starting-hand classes.

    class_id lives on the classic 13x13 grid (0 = AA): pairs on the
    diagonal, suited hands above it, offsuit below.
    """

    class_id: int
    label: str


def _grid_id(hi: int, lo: int, suited: bool) -> int:
    r1 = 14 - hi
    r2 = 14 - lo
    if hi == lo:
        return r1 * 13 + r1
    return r1 * 13 + r2 if suited else r2 * 13 + r1


def _class_label(hi: int, lo: int, suited: bool) -> str:
    a, b = RANK_CHARS[hi - 2], RANK_CHARS[lo - 2]
    if hi == lo:
        return a + b
    return a + b + ("s" if suited else "o")


def _build_classes() -> tuple[PreflopClass, ...]:
    by_id: dict[int, PreflopClass] = {}
    for hi in range(14, 1, -1):
        for lo in range(hi, 1, -1):
            for suited in ((False,) if hi == lo else (True, False)):
                cid = _grid_id(hi, lo, suited)
                by_id[cid] = PreflopClass(cid, _class_label(hi, lo, suited))
    return tuple(by_id[i] for i in range(169))


ALL_CLASSES = _build_classes()
CLASS_BY_LABEL = {pc.label: pc for pc in ALL_CLASSES}


def canonical_class(c1: Card, c2: Card) -> PreflopClass:
    """The suit-isomorphic class of a hole-card pair."""
    if c1 == c2:
        raise InvalidCardsError(f"duplicate card {c1}")
    hi, lo = (c1.rank, c2.rank) if c1.rank >= c2.rank else (c2.rank, c1.rank)
    suited = c1.suit == c2.suit
    return ALL_CLASSES[_grid_id(hi, lo, suited and hi != lo)]


def _build_combos():
    codes = []
    class_ids = []
    index = np.full((52, 52), -1, dtype=np.int32)
    i = 0
    for a in range(52):
        for b in range(a + 1, 52):
            codes.append((a, b))
            class_ids.append(
                canonical_class(Card.from_code(a), Card.from_code(b)).class_id
            )
            index[a, b] = index[b, a] = i
            i += 1
    return (
        np.array(codes, dtype=np.int32),
        np.array(class_ids, dtype=np.int32),
        index,
    )


# All C(52,2)=1326 hole-card pairs, in (low code, high code) lexicographic order.
COMBO_CODES, COMBO_CLASS_IDS, _COMBO_INDEX = _build_combos()

# COMBO_CONTAINS[i, c] is True when combo i holds card code c.
COMBO_CONTAINS = np.zeros((1326, 52), dtype=bool)
COMBO_CONTAINS[np.arange(1326), COMBO_CODES[:, 0]] = True
COMBO_CONTAINS[np.arange(1326), COMBO_CODES[:, 1]] = True


def combo_index(code_a: int, code_b: int) -> int:
    """Index of a hole-card pair into the 1326-entry combo order."""
    idx = _COMBO_INDEX[code_a, code_b]
    if idx < 0:
        raise InvalidCardsError("duplicate card in combo")
    return int(idx)


def combo_indices(codes_a: np.ndarray, codes_b: np.ndarray) -> np.ndarray:
    """Vectorized combo_index over parallel arrays of card codes."""
    return _COMBO_INDEX[codes_a, codes_b]


# ---------------------------------------------------------------------------
# Sklansky groups, loaded from the packaged table asset.
# ---------------------------------------------------------------------------

SklanskyGroup = "int | None"


@functools.cache
def _sklansky_table() -> dict[str, int | None]:
    text = (
        resources.files("holdemlab.assets")
        .joinpath("sklansky_groups.txt")
        .read_text(encoding="utf-8")
    )
    table: dict[str, int | None] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        label, group = line.split()
        if label not in CLASS_BY_LABEL:
            raise ValueError(f"unknown class label in group table: {label}")
        table[label] = None if group == "-" else int(group)
    missing = set(CLASS_BY_LABEL) - set(table)
    if missing:
        raise ValueError(f"group table missing {len(missing)} classes")
    return table


def sklansky_group(pc: PreflopClass) -> int | None:
    """Playability group 1 (best) .. 9, or None for unplayable classes."""
    return _sklansky_table()[pc.label]
