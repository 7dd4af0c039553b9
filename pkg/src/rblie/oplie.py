"""RLS and RALS words: bases of the free operated Lie algebra and of its abelian-image quotient."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .words import Alphabet, Letter, Word, deglex_key, is_ls_word

__all__ = [
    "Bounds",
    "degree",
    "rdegree",
    "level",
    "is_rls_word",
    "is_rals_word",
    "enumerate_rls_words",
    "enumerate_rals_words",
]


@dataclass(frozen=True)
class Bounds:
    """Finite window on RLS words.

    ``max_degree`` bounds the number of top-level letters, ``max_rdegree`` the
    total operator count.  Operator arguments at every depth are bounded by
    ``max_arg_degree``, which defaults to ``max(max_degree, max_rdegree)``.
    ``max_level`` caps the operator nesting depth (``None``: no cap beyond
    the operator-degree bound).
    """

    max_degree: int
    max_rdegree: int = 0
    max_level: Optional[int] = None
    max_arg_degree: Optional[int] = None

    def __post_init__(self):
        for name in ("max_degree", "max_rdegree", "max_level", "max_arg_degree"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"{name} must be >= 0, got {v}")

    @property
    def arg_degree(self) -> int:
        if self.max_arg_degree is not None:
            return self.max_arg_degree
        return max(self.max_degree, self.max_rdegree)

    def contains(self, w: Word) -> bool:
        if len(w) > self.max_degree or rdegree(w) > self.max_rdegree:
            return False
        if self.max_level is not None and level(w) > self.max_level:
            return False
        return all(_args_within(a, self.arg_degree) for a in w)


def _args_within(a: Letter, bound: int) -> bool:
    if a.arg is None:
        return True
    return len(a.arg) <= bound and all(_args_within(b, bound) for b in a.arg)


def degree(w: Word) -> int:
    return len(w)


def rdegree(w: Word) -> int:
    """Number of operator symbols at all nesting depths."""
    return sum(a.rdegree for a in w)


def level(w: Word) -> int:
    """Least ``n`` with ``w`` in RLS_n, i.e. the operator nesting depth."""
    return max(a.level for a in w)


def is_rls_word(w: Word) -> bool:
    return bool(w) and is_ls_word(w) and all(a.arg is None or is_rls_word(a.arg) for a in w)


def is_rals_word(w: Word) -> bool:
    """No adjacent ``R([u])R([v])`` with ``[u] > [v]`` at any nesting depth."""
    for a, b in zip(w, w[1:]):
        if a.arg is not None and b.arg is not None and a.key > b.key:
            return False
    return all(a.arg is None or is_rals_word(a.arg) for a in w)


@lru_cache(maxsize=None)
def _rls(gens: tuple, max_degree: int, max_rdegree: int, arg_degree: int, max_level) -> tuple:
    letters = list(gens)
    if max_rdegree >= 1 and (max_level is None or max_level >= 1):
        inner_level = None if max_level is None else max_level - 1
        for u in _rls(gens, arg_degree, max_rdegree - 1, arg_degree, inner_level):
            letters.append(Letter.operator(u, check=False))
    letters.sort(key=lambda a: a.key, reverse=True)
    out = []

    # First letter of an LS word is its greatest letter, so extend only with letters <= it.
    def grow(word, budget, first):
        if is_ls_word(word):
            out.append(word)
        if len(word) == max_degree:
            return
        for a in letters:
            if a.key > first.key:
                continue
            if a.rdegree <= budget:
                grow(word + (a,), budget - a.rdegree, first)

    for a in letters:
        if a.rdegree <= max_rdegree:
            grow((a,), max_rdegree - a.rdegree, a)
    out.sort(key=deglex_key)
    return tuple(out)


def enumerate_rls_words(alphabet: Alphabet, bounds: Bounds) -> list:
    """RLS words within ``bounds`` in ascending deglex order."""
    if bounds.max_degree < 1:
        return []
    return list(_rls(tuple(alphabet.letters), bounds.max_degree, bounds.max_rdegree,
                     bounds.arg_degree, bounds.max_level))


def enumerate_rals_words(alphabet: Alphabet, bounds: Bounds) -> list:
    return [w for w in enumerate_rls_words(alphabet, bounds) if is_rals_word(w)]
