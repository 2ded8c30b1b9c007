"""Seeded random Strategy generator for round-trip property tests."""

import random

from holdemlab.pokerlang import (
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

_IMAGES = ("passive", "balanced", "aggressive")


def _number(rng):
    if rng.random() < 0.5:
        return float(rng.randint(0, 100))
    return round(rng.uniform(0, 20), 3)


def _comparison(rng, kind):
    if kind == "steal_bet":
        return SetLiteral(items=(rng.random() < 0.7,))
    if kind == "image_at_table":
        return SetLiteral(items=tuple(
            rng.sample(_IMAGES, rng.randint(1, len(_IMAGES)))
        ))
    if kind == "hand_region" and rng.random() < 0.6:
        return SetLiteral(items=tuple(
            rng.sample(HAND_REGIONS, rng.randint(1, 3))
        ))
    if rng.random() < 0.3:
        return SetLiteral(items=tuple(
            sorted({_number(rng) for _ in range(rng.randint(1, 4))})
        ))
    a, b = sorted((_number(rng), _number(rng)))
    return Interval(lo=a, hi=b)


def _condition(rng, activation):
    pool = EVALUATORS if activation else EVALUATORS + PREDICTORS
    kind = rng.choice(pool)
    return Condition(kind=kind, comparison=_comparison(rng, kind))


def _rule(rng):
    conditions = tuple(
        _condition(rng, activation=False) for _ in range(rng.randint(0, 3))
    )
    count = rng.randint(1, 3)
    budget = 100.0
    actions = []
    names = rng.sample(DEFINED_ACTIONS + PREDEFINED_ACTIONS, count)
    for name in names:
        pct = round(rng.uniform(1, budget / count), 1)
        actions.append(ActionItem(name=name, percent=max(pct, 1.0)))
    return Rule(conditions=conditions, actions=tuple(actions))


def random_strategy(seed: int, max_rules: int = 50) -> Strategy:
    rng = random.Random(seed)
    n_tactics = rng.randint(0, 3)
    tactics = []
    rules_left = max_rules
    for t in range(n_tactics):
        behaviours = []
        for _ in range(rng.randint(1, 3)):
            n_rules = rng.randint(1, max(1, min(4, rules_left)))
            rules_left -= n_rules
            behaviours.append(
                Behaviour(
                    weight=round(rng.uniform(0.5, 5), 2),
                    rules=tuple(_rule(rng) for _ in range(n_rules)),
                )
            )
        tactics.append(TacticDef(name=f"tac_{seed}_{t}", behaviours=tuple(behaviours)))

    choices = list(PREDEFINED_TACTICS) + [t.name for t in tactics]
    entries = []
    for _ in range(rng.randint(1, 4)):
        conditions = tuple(
            _condition(rng, activation=True) for _ in range(rng.randint(0, 2))
        )
        entries.append(Entry(conditions=conditions, tactic=rng.choice(choices)))
    return Strategy(entries=tuple(entries), tactics=tuple(tactics))
