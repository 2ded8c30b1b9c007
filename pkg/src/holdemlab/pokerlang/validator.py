"""Static checks on parsed strategies (beyond what the parser enforces)."""

from __future__ import annotations

from .ast import Strategy
from .diagnostics import Diagnostic


def validate(strategy: Strategy) -> list[Diagnostic]:
    """Flags per-rule percentage overflow, empty tactics, and entries made
    unreachable by an earlier unconditional entry. Clean input gives []."""
    diags: list[Diagnostic] = []

    unconditional_seen = False
    for entry in strategy.entries:
        line, col = entry.pos
        if unconditional_seen:
            diags.append(
                Diagnostic(line, col,
                           "unreachable entry: an earlier entry always activates",
                           severity="warning")
            )
        if not entry.conditions:
            unconditional_seen = True

    for tactic in strategy.tactics:
        line, col = tactic.pos
        if not tactic.behaviours:
            diags.append(
                Diagnostic(line, col, f"tactic {tactic.name!r} has no behaviours",
                           severity="warning")
            )
        for behaviour in tactic.behaviours:
            bline, bcol = behaviour.pos
            if not behaviour.rules:
                diags.append(
                    Diagnostic(bline, bcol, "behaviour has no rules",
                               severity="warning")
                )
            for rule in behaviour.rules:
                total = sum(a.percent for a in rule.actions)
                if total > 100:
                    rline, rcol = rule.pos
                    diags.append(
                        Diagnostic(
                            rline, rcol,
                            f"action percentages sum to {_fmt(total)}, over 100",
                        )
                    )
    return diags


def _fmt(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))
