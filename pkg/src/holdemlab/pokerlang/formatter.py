"""Canonical PokerLANG text from a Strategy tree.

format_strategy is idempotent and parse(format_strategy(s)) is
structurally equal to s.
"""

from __future__ import annotations

from .ast import Condition, Interval, Rule, SetLiteral, Strategy, TacticDef


def _num(x: float) -> str:
    f = float(x)
    if f.is_integer() and abs(f) < 1e15:
        return str(int(f))
    return repr(f)


def _atom(a) -> str:
    if isinstance(a, bool):
        return "true" if a else "false"
    if isinstance(a, (int, float)):
        return _num(a)
    return str(a)


def _comparison(c) -> str:
    if isinstance(c, Interval):
        return f"[{_num(c.lo)}, {_num(c.hi)}]"
    if isinstance(c, SetLiteral):
        return "{" + ", ".join(_atom(a) for a in c.items) + "}"
    raise TypeError(f"not a comparison: {c!r}")


def _condition(c: Condition) -> str:
    return f"{c.kind} in {_comparison(c.comparison)}"


def _rule(rule: Rule, indent: str) -> list[str]:
    lines = [f"{indent}rule {{"]
    for cond in rule.conditions:
        lines.append(f"{indent}  {_condition(cond)}")
    acts = " ".join(f"{a.name} {_num(a.percent)}%" for a in rule.actions)
    lines.append(f"{indent}  do {acts}")
    lines.append(f"{indent}}}")
    return lines


def _tactic(t: TacticDef) -> list[str]:
    lines = [f"tactic {t.name} {{"]
    for b in t.behaviours:
        lines.append(f"  behaviour {_num(b.weight)} {{")
        for rule in b.rules:
            lines.extend(_rule(rule, "    "))
        lines.append("  }")
    lines.append("}")
    return lines


def format_strategy(strategy: Strategy) -> str:
    lines = ["strategy {"]
    for entry in strategy.entries:
        if entry.conditions:
            conds = " ".join(_condition(c) for c in entry.conditions)
            lines.append(f"  when {conds} use {entry.tactic}")
        else:
            lines.append(f"  always use {entry.tactic}")
    lines.append("}")
    for t in strategy.tactics:
        lines.append("")
        lines.extend(_tactic(t))
    return "\n".join(lines) + "\n"
