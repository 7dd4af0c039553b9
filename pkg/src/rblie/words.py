"""Letters, words and Lyndon-Shirshov machinery.

Words are plain tuples of interned :class:`Letter` objects.  The alphabet is
``X`` (generators, ordered by declaration with the first one greatest)
extended by operator letters ``R([u])``.  Every generator is smaller than
every operator letter and operator letters compare by deglex order of their
arguments, recursively.

A word is Lyndon-Shirshov (LS) when it is strictly greater than each of its
proper rotations.  This is the "greatest rotation" convention; internally it
is the classical Lyndon theory run over the reversed letter order, which is
what ``_lyn_less`` implements.
"""
from __future__ import annotations

import threading
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Tuple, Union

from .errors import NotLyndonShirshov

__all__ = [
    "Letter",
    "Alphabet",
    "Hole",
    "Word",
    "compare_letters",
    "compare_deglex",
    "deglex_key",
    "is_ls_word",
    "standard_factorization",
    "standard_bracketing",
    "cfl_factorization",
    "enumerate_ls_words",
    "flatten",
    "format_word",
    "format_letter",
]


class Letter:
    """An interned letter: a generator or an operator letter ``R([u])``.

    Letters are created only through :meth:`generator` and :meth:`operator`;
    equal letters are the same object, so identity is equality.
    """

    __slots__ = ("name", "rank", "arg", "key", "rdegree", "level", "__weakref__")

    _table: dict = {}
    _lock = threading.Lock()

    def __init__(self, name, rank, arg, key, rdegree, level):
        self.name = name
        self.rank = rank
        self.arg = arg
        self.key = key
        self.rdegree = rdegree
        self.level = level

    @classmethod
    def generator(cls, name: str, rank: int) -> "Letter":
        ident = ("g", rank, name)
        letter = cls._table.get(ident)
        if letter is None:
            with cls._lock:
                letter = cls._table.get(ident)
                if letter is None:
                    letter = cls(name, rank, None, (0, -rank, name), 0, 0)
                    cls._table[ident] = letter
        return letter

    @classmethod
    def operator(cls, arg: "Word", check: bool = True) -> "Letter":
        """The operator letter ``R([arg])``; ``arg`` must be an RLS word."""
        arg = tuple(arg)
        letter = cls._table.get(arg)
        if letter is None:
            if check and not is_ls_word(arg):
                raise NotLyndonShirshov(f"operator argument {format_word(arg)} is not LS")
            key = (1, len(arg), tuple(a.key for a in arg))
            rdeg = 1 + sum(a.rdegree for a in arg)
            level = 1 + max(a.level for a in arg)
            with cls._lock:
                letter = cls._table.setdefault(arg, cls(None, None, arg, key, rdeg, level))
        return letter

    @property
    def is_operator(self) -> bool:
        return self.arg is not None

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self is other or self.key < other.key

    def __gt__(self, other):
        return self.key > other.key

    def __ge__(self, other):
        return self is other or self.key > other.key

    def __repr__(self):
        return format_letter(self)


Word = Tuple[Letter, ...]


class Hole:
    """Placeholder leaf of a bracket tree (``*`` for index 0, ``*1``... otherwise)."""

    __slots__ = ("index",)

    def __init__(self, index: int = 0):
        self.index = index

    def __eq__(self, other):
        return isinstance(other, Hole) and other.index == self.index

    def __hash__(self):
        return hash(("hole", self.index))

    def __repr__(self):
        return "*" if self.index == 0 else f"*{self.index}"


BracketTree = Union[Letter, Hole, tuple]


class Alphabet:
    """An ordered set of generators; ``names[0]`` is the greatest letter."""

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        if not names:
            raise ValueError("an alphabet needs at least one generator")
        self.names = names
        self.letters = tuple(Letter.generator(n, i) for i, n in enumerate(names))
        self._by_name = dict(zip(names, self.letters))

    def __getitem__(self, name: str) -> Letter:
        return self._by_name[name]

    def __contains__(self, name) -> bool:
        return name in self._by_name

    def __len__(self):
        return len(self.names)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def word(self, text: str) -> Word:
        """Word from single-character generator names, e.g. ``"xxy"``."""
        return tuple(self._by_name[ch] for ch in text)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and other.names == self.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({list(self.names)!r})"


def compare_letters(a: Letter, b: Letter) -> int:
    if a is b:
        return 0
    return -1 if a.key < b.key else 1


def deglex_key(w: Word):
    return (len(w), w)


def compare_deglex(u: Word, v: Word) -> int:
    if len(u) != len(v):
        return -1 if len(u) < len(v) else 1
    for a, b in zip(u, v):
        if a is not b:
            return -1 if a.key < b.key else 1
    return 0


def _lyn_less(u: Word, v: Word) -> bool:
    # Lexicographic order over the reversed alphabet, a proper prefix being smaller.
    for a, b in zip(u, v):
        if a is not b:
            return a.key > b.key
    return len(u) < len(v)


@lru_cache(maxsize=None)
def is_ls_word(w: Word) -> bool:
    """True iff ``w`` is a letter or strictly greater than all proper rotations."""
    n = len(w)
    if n == 0:
        return False
    if n == 1:
        return True
    return all(w > w[i:] + w[:i] for i in range(1, n))


@lru_cache(maxsize=None)
def standard_factorization(w: Word) -> int:
    """Split point ``i`` such that ``w[i:]`` is the longest proper LS suffix."""
    if len(w) < 2 or not is_ls_word(w):
        raise NotLyndonShirshov(f"{format_word(w)} has no standard factorization")
    for i in range(1, len(w)):
        if is_ls_word(w[i:]):
            return i
    raise AssertionError("a letter is always an LS suffix")


@lru_cache(maxsize=None)
def standard_bracketing(w: Word) -> BracketTree:
    """Standard bracketing as a nested pair tree whose leaves are letters."""
    if not is_ls_word(w):
        raise NotLyndonShirshov(f"{format_word(w)} is not a Lyndon-Shirshov word")
    if len(w) == 1:
        return w[0]
    i = standard_factorization(w)
    return (standard_bracketing(w[:i]), standard_bracketing(w[i:]))


def cfl_factorization(w: Word) -> list:
    """Factor ``w`` into LS words, non-increasing in the reversed-alphabet lex order.

    Duval's algorithm; the factorization is unique.
    """
    out = []
    n = len(w)
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and not w[j].key > w[k].key:
            k = i if w[k].key > w[j].key else k + 1
            j += 1
        while i <= k:
            out.append(w[i:i + j - k])
            i += j - k
    return out


def flatten(tree: BracketTree) -> tuple:
    if isinstance(tree, tuple):
        return flatten(tree[0]) + flatten(tree[1])
    return (tree,)


def _fkm(k: int, n: int) -> Iterator[list]:
    # Lyndon words over 0..k-1 of length <= n, lexicographic order.
    w = [-1]
    while w:
        w[-1] += 1
        yield w
        m = len(w)
        while len(w) < n:
            w.append(w[-m])
        while w and w[-1] == k - 1:
            w.pop()


def enumerate_ls_words(letters: Sequence[Letter], max_degree: int) -> list:
    """All LS words over ``letters`` of degree <= ``max_degree``, ascending deglex."""
    if max_degree < 1 or not letters:
        return []
    desc = sorted(set(letters), key=lambda a: a.key, reverse=True)
    words = [tuple(desc[i] for i in idx) for idx in _fkm(len(desc), max_degree)]
    words.sort(key=deglex_key)
    return words


def format_letter(a: Letter) -> str:
    if a.arg is None:
        return a.name
    return f"R({format_word(a.arg)})"


def _format_tree(tree) -> str:
    if isinstance(tree, tuple):
        return f"[{_format_tree(tree[0])},{_format_tree(tree[1])}]"
    if isinstance(tree, Hole):
        return repr(tree)
    return format_letter(tree)


@lru_cache(maxsize=None)
def format_word(w: Word) -> str:
    """Fully bracketed text of an LS word, e.g. ``[x,[x,y]]``."""
    if is_ls_word(w):
        return _format_tree(standard_bracketing(w))
    return "".join(format_letter(a) for a in w)


def format_tree(tree) -> str:
    return _format_tree(tree)
