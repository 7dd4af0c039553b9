"""Exact elements of free Lie algebras over an ordered (possibly operator-extended) alphabet.

An element is a :class:`LiePoly`: a finitely supported map from LS words to
nonzero rationals, each word standing for its standard bracketing.  The
product :func:`bracket` rewrites into that basis with the classical rule
(anticommutativity plus the Jacobi step
``[[a1,a2],b] = [a1,[a2,b]] + [[a1,b],a2]``).
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import NotASubwordOccurrence, NotLyndonShirshov, OverlappingOccurrences
from .words import (
    Hole,
    Letter,
    Word,
    _lyn_less,
    cfl_factorization,
    deglex_key,
    flatten,
    format_word,
    is_ls_word,
    standard_bracketing,
    standard_factorization,
)

__all__ = [
    "LiePoly",
    "bracket",
    "apply_operator",
    "evaluate",
    "special_bracketing",
    "double_bracketing",
    "associative_expansion",
    "expand_tree",
    "jacobian",
]


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class LiePoly:
    """Linear combination of RLS words with exact rational coefficients."""

    __slots__ = ("terms", "_lead")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        for c in terms.values():
            if not isinstance(c, Rational):
                raise TypeError(f"coefficients must be exact rationals, got {c!r}")
        self.terms = {w: _clean(c) for w, c in terms.items() if c}
        self._lead = None

    @classmethod
    def _raw(cls, terms: dict) -> "LiePoly":
        p = cls.__new__(cls)
        p.terms = terms
        p._lead = None
        return p

    @classmethod
    def word(cls, w: Word, coeff=1) -> "LiePoly":
        w = tuple(w)
        if not is_ls_word(w):
            raise NotLyndonShirshov(f"{format_word(w)} is not a basis word")
        return cls._raw({w: coeff} if coeff else {})

    @classmethod
    def letter(cls, a: Letter) -> "LiePoly":
        return cls._raw({(a,): 1})

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: "LiePoly") -> "LiePoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = _clean(s)
            else:
                out.pop(w, None)
        return LiePoly._raw(out)

    def __neg__(self) -> "LiePoly":
        return LiePoly._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "LiePoly") -> "LiePoly":
        return self + (-other)

    def __mul__(self, c) -> "LiePoly":
        if not isinstance(c, Rational):
            return NotImplemented
        if not c:
            return LiePoly()
        return LiePoly._raw({w: _clean(c * v) for w, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LiePoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coeff(self, w: Word):
        return self.terms.get(tuple(w), 0)

    # leading data ---------------------------------------------------------
    @property
    def leading(self) -> Word:
        """Deglex-greatest word; raises ValueError on the zero polynomial."""
        if self._lead is None:
            if not self.terms:
                raise ValueError("the zero polynomial has no leading word")
            self._lead = max(self.terms, key=deglex_key)
        return self._lead

    @property
    def leading_coeff(self):
        return self.terms[self.leading]

    def is_monic(self) -> bool:
        return bool(self.terms) and self.leading_coeff == 1

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def rdegree(self) -> int:
        return max((sum(a.rdegree for a in w) for w in self.terms), default=0)

    def sorted_terms(self) -> list:
        """Terms in descending deglex order."""
        return sorted(self.terms.items(), key=lambda t: deglex_key(t[0]), reverse=True)

    def __repr__(self):
        from .termio import print_term

        return f"LiePoly({print_term(self)!r})"


# product ------------------------------------------------------------------
_BRACKETS: dict = {}


def _acc(out: dict, w, c):
    s = out.get(w, 0) + c
    if s:
        out[w] = s
    else:
        out.pop(w, None)


def _bracket_words(u: Word, v: Word) -> dict:
    """[[u],[v]] in the basis; the returned dict is shared and must not be mutated."""
    if u == v:
        return {}
    key = (u, v)
    hit = _BRACKETS.get(key)
    if hit is not None:
        return hit
    if _lyn_less(v, u):
        res = {w: -c for w, c in _bracket_words(v, u).items()}
    elif len(u) == 1:
        res = {u + v: 1}
    else:
        i = standard_factorization(u)
        u1, u2 = u[:i], u[i:]
        if not _lyn_less(u2, v):
            res = {u + v: 1}
        else:
            res = {}
            for w, c in _bracket_words(u2, v).items():
                for z, d in _bracket_words(u1, w).items():
                    _acc(res, z, c * d)
            for w, c in _bracket_words(u1, v).items():
                for z, d in _bracket_words(w, u2).items():
                    _acc(res, z, c * d)
    _BRACKETS[key] = res
    return res


def bracket(p: LiePoly, q: LiePoly) -> LiePoly:
    """Lie product of two polynomials, normalized to the LS basis."""
    out: dict = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            ab = a * b
            for w, c in _bracket_words(u, v).items():
                _acc(out, w, ab * c)
    return LiePoly._raw({w: _clean(c) for w, c in out.items()})


def apply_operator(p: LiePoly) -> LiePoly:
    """Linear extension of ``[u] -> R([u])`` (a one-letter word)."""
    return LiePoly._raw({(Letter.operator(w, check=False),): c for w, c in p.terms.items()})


def jacobian(p: LiePoly, q: LiePoly, r: LiePoly) -> LiePoly:
    """``[p,[q,r]] - [q,[p,r]] - [[p,q],r]``; zero in any Lie algebra."""
    return bracket(p, bracket(q, r)) - bracket(q, bracket(p, r)) - bracket(bracket(p, q), r)


# bracket trees ------------------------------------------------------------
def evaluate(tree, *holes: LiePoly) -> LiePoly:
    """Evaluate a bracket tree, substituting ``holes[i]`` for ``Hole(i)``."""
    if isinstance(tree, tuple):
        return bracket(evaluate(tree[0], *holes), evaluate(tree[1], *holes))
    if isinstance(tree, Hole):
        return holes[tree.index]
    return LiePoly.letter(tree)


# Annotated trees carry spans so that subtrees can be located and replaced:
#   ("L", start, letter) | ("H", start, end, index) | ("N", start, end, left, right, std)
# where std marks a subtree that is exactly the standard bracketing of its span.


def _std_annot(w: Word, offset: int):
    if len(w) == 1:
        return ("L", offset, w[0])
    i = standard_factorization(w)
    return ("N", offset, offset + len(w), _std_annot(w[:i], offset), _std_annot(w[i:], offset + i), True)


class _Straddle(Exception):
    pass


def _special_annot(w: Word, s: int, e: int, offset: int, index: int):
    n = len(w)
    if s == 0 and e == n:
        return ("H", offset, offset + n, index)
    i = standard_factorization(w)
    if s == 0 and e > i:
        node = ("H", offset, offset + e, index)
        pos = e
        for f in cfl_factorization(w[e:]):
            node = ("N", offset, offset + pos + len(f), node, _std_annot(f, offset + pos), False)
            pos += len(f)
        return node
    if e <= i:
        return ("N", offset, offset + n, _special_annot(w[:i], s, e, offset, index),
                _std_annot(w[i:], offset + i), False)
    if s >= i:
        return ("N", offset, offset + n, _std_annot(w[:i], offset),
                _special_annot(w[i:], s - i, e - i, offset + i, index), False)
    raise _Straddle


def _span(node):
    if node[0] == "L":
        return node[1], node[1] + 1
    return node[1], node[2]


def _strip(node):
    tag = node[0]
    if tag == "L":
        return node[2]
    if tag == "H":
        return Hole(node[3])
    return (_strip(node[3]), _strip(node[4]))


def _check_span(w: Word, start: int, end: int):
    if not (0 <= start < end <= len(w)):
        raise NotASubwordOccurrence(f"span [{start},{end}) is not a nonempty subword of a word of length {len(w)}")
    if not is_ls_word(w):
        raise NotLyndonShirshov(f"{format_word(w)} is not a Lyndon-Shirshov word")
    if not is_ls_word(w[start:end]):
        raise NotLyndonShirshov(f"subword {format_word(w[start:end])} is not a Lyndon-Shirshov word")


@lru_cache(maxsize=None)
def special_bracketing(w: Word, start: int, end: int):
    """Shirshov bracketing of ``w`` with the LS subword ``w[start:end]`` replaced by a hole.

    Substituting any monic polynomial with leading word ``w[start:end]`` for
    the hole yields ``[w]`` plus strictly deglex-smaller basis words.
    """
    _check_span(w, start, end)
    try:
        return _strip(_special_annot(w, start, end, 0, 0))
    except _Straddle:
        return _search_bracketing(w, ((start, end),))


def _replace_in(node, w: Word, s: int, e: int, index: int):
    """Rebracket the outermost standard subtree of ``node`` containing ``[s,e)``."""
    a, b = _span(node)
    if not (a <= s and e <= b):
        return None
    tag = node[0]
    if tag == "H":
        return None
    if tag == "L" or node[5]:
        return _special_annot(w[a:b], s - a, e - a, a, index)
    left, right = node[3], node[4]
    new = _replace_in(left, w, s, e, index)
    if new is not None:
        return ("N", node[1], node[2], new, right, False)
    new = _replace_in(right, w, s, e, index)
    if new is not None:
        return ("N", node[1], node[2], left, new, False)
    return None


@lru_cache(maxsize=None)
def double_bracketing(w: Word, occ1: tuple, occ2: tuple):
    """Bracketing of ``w`` with two disjoint LS subwords replaced by ``Hole(0)`` and ``Hole(1)``.

    Substituting monic polynomials with leading words ``w[occ1]`` and
    ``w[occ2]`` yields ``[w]`` plus strictly smaller basis words.
    """
    (s1, e1), (s2, e2) = occ1, occ2
    _check_span(w, s1, e1)
    _check_span(w, s2, e2)
    if s1 < e2 and s2 < e1:
        raise OverlappingOccurrences(f"spans {occ1} and {occ2} overlap")
    for (sa, ea, ia), (sb, eb, ib) in (((s1, e1, 0), (s2, e2, 1)), ((s2, e2, 1), (s1, e1, 0))):
        try:
            tree = _replace_in(_special_annot(w, sa, ea, 0, ia), w, sb, eb, ib)
        except _Straddle:
            continue
        if tree is not None:
            return _strip(tree)
    return _search_bracketing(w, (occ1, occ2))


def _all_trees(items):
    if len(items) == 1:
        yield items[0]
        return
    for k in range(1, len(items)):
        for left in _all_trees(items[:k]):
            for right in _all_trees(items[k:]):
                yield (left, right)


def _search_bracketing(w: Word, occs):
    """Exhaustive fallback: first bracketing satisfying the leading-term contract."""
    order = sorted(range(len(occs)), key=lambda i: occs[i][0])
    items, pos = [], 0
    for i in order:
        s, e = occs[i]
        items.extend(w[pos:s])
        items.append(Hole(i))
        pos = e
    items.extend(w[pos:])
    subs = [LiePoly.word(w[s:e]) for s, e in occs]
    for tree in _all_trees(tuple(items)):
        val = evaluate(tree, *subs)
        if val and val.leading == w and val.leading_coeff == 1:
            return tree
    raise AssertionError(f"no bracketing of {format_word(w)} satisfies the contract")


# associative expansion (test oracle) ---------------------------------------
def _mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for u, a in p.items():
        for v, b in q.items():
            _acc(out, u + v, a * b)
    return out


def expand_tree(tree, *holes: dict) -> dict:
    """Associative expansion ``[a,b] -> ab - ba`` of a bracket tree."""
    if isinstance(tree, tuple):
        a = expand_tree(tree[0], *holes)
        b = expand_tree(tree[1], *holes)
        out = _mul(a, b)
        for w, c in _mul(b, a).items():
            _acc(out, w, -c)
        return out
    if isinstance(tree, Hole):
        return holes[tree.index]
    return {(tree,): 1}


@lru_cache(maxsize=None)
def _expand_word(w: Word):
    return tuple(expand_tree(standard_bracketing(w)).items())


def associative_expansion(p: LiePoly) -> dict:
    """Image of ``p`` in the free associative algebra on the same letters."""
    out: dict = {}
    for w, c in p.terms.items():
        for z, d in _expand_word(w):
            _acc(out, z, c * d)
    return out


def all_trees(items):
    """Every binary bracketing of a sequence (Catalan many)."""
    return _all_trees(tuple(items))
