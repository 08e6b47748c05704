"""Monomial orders: lex, graded reverse lex, and block elimination orders."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Tuple


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on a fixed variable tuple.

    kind is one of "lex", "grevlex", "block"; for "block" the variables in
    `eliminated` form the dominant block (they are larger than everything
    else, so a Groebner basis intersected with the remaining variables
    generates the elimination ideal).
    """

    kind: str
    vars: Tuple[str, ...]
    eliminated: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variable in priority list")
        if self.kind == "block":
            missing = [v for v in self.eliminated if v not in self.vars]
            if missing:
                raise ValueError(f"eliminated variables not in ring: {missing}")

    def key(self, exps: Tuple[int, ...]):
        """Sort key; larger key = larger monomial."""
        if self.kind == "lex":
            return exps
        if self.kind == "grevlex":
            return _grevlex_key(exps)
        elim = set(self.eliminated)
        block1 = tuple(e for v, e in zip(self.vars, exps) if v in elim)
        block2 = tuple(e for v, e in zip(self.vars, exps) if v not in elim)
        return (_grevlex_key(block1), _grevlex_key(block2))


def _grevlex_key(exps: Tuple[int, ...]):
    return (sum(exps), tuple(-e for e in reversed(exps)))


def lex(vars: Sequence[str]) -> MonomialOrder:
    return MonomialOrder("lex", tuple(vars))


def grevlex(vars: Sequence[str]) -> MonomialOrder:
    return MonomialOrder("grevlex", tuple(vars))


def block_elimination(vars: Sequence[str], drop: Sequence[str]) -> MonomialOrder:
    return MonomialOrder("block", tuple(vars), tuple(drop))
