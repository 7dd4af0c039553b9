"""Reference implementations used only to check the library.

They follow the definitions directly (rotations, suffix scans, commutator
expansion, brute-force products over the extended alphabet) and share no
code with the package beyond the letter objects themselves.
"""
import itertools
from fractions import Fraction

from rblie.words import Letter


def mobius(n):
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


def witt(k, n):
    """Number of Lyndon words of length n over k letters."""
    return sum(mobius(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


def okey(a):
    # Letter order rebuilt from the structure: generators by declaration
    # (first greatest), below every operator letter, operator letters by deglex
    # of their arguments.
    if a.arg is None:
        return (0, -a.rank)
    return (1, len(a.arg), tuple(okey(b) for b in a.arg))


def wkey(w):
    return tuple(okey(a) for a in w)


def is_ls_by_rotation(w):
    k = wkey(w)
    return len(w) == 1 or all(k > k[i:] + k[:i] for i in range(1, len(w)))


def is_ls_by_suffix(w):
    # Equivalent characterization: strictly greater than every proper suffix
    # under the order where a proper prefix is larger.
    k = wkey(w)
    for i in range(1, len(k)):
        s = k[i:]
        if s == k[:len(s)]:
            return False
        if s > k:
            return False
    return True


def longest_ls_suffix(w):
    for i in range(1, len(w)):
        if is_ls_by_rotation(w[i:]):
            return i
    raise ValueError("word has no proper LS suffix")


def std_tree(w):
    if len(w) == 1:
        return w[0]
    i = longest_ls_suffix(w)
    return (std_tree(w[:i]), std_tree(w[i:]))


def _mul(p, q):
    out = {}
    for u, a in p.items():
        for v, b in q.items():
            out[u + v] = out.get(u + v, 0) + a * b
    return {w: c for w, c in out.items() if c}


def commutator(p, q):
    out = dict(_mul(p, q))
    for w, c in _mul(q, p).items():
        out[w] = out.get(w, 0) - c
    return {w: c for w, c in out.items() if c}


def expand(tree, hole=None):
    """Associative expansion of a bracket tree; ``hole`` is the value for any non-letter leaf."""
    if isinstance(tree, tuple):
        return commutator(expand(tree[0], hole), expand(tree[1], hole))
    if isinstance(tree, Letter):
        return {(tree,): 1}
    return dict(hole)


def expand_poly(p):
    out = {}
    for w, c in p.terms.items():
        for z, d in expand(std_tree(w)).items():
            out[z] = out.get(z, 0) + c * d
    return {w: c for w, c in out.items() if c}


def assoc_leading(d):
    """Deglex-greatest word of an associative polynomial and its coefficient."""
    w = max(d, key=lambda z: (len(z), wkey(z)))
    return w, Fraction(d[w])


def rls_brute(gens, max_degree, max_rdegree, arg_degree):
    """RLS words by the level construction: all products of letters, then the rotation test."""
    if max_degree < 1:
        return set()
    letters = list(gens)
    if max_rdegree >= 1:
        for u in rls_brute(gens, arg_degree, max_rdegree - 1, arg_degree):
            letters.append(Letter.operator(u))
    out = set()
    for n in range(1, max_degree + 1):
        for w in itertools.product(letters, repeat=n):
            if sum(a.rdegree for a in w) <= max_rdegree and is_ls_by_rotation(w):
                out.add(w)
    return out


def no_descending_operator_pair(w):
    for a, b in zip(w, w[1:]):
        if a.arg is not None and b.arg is not None and okey(a) > okey(b):
            return False
    return all(a.arg is None or no_descending_operator_pair(a.arg) for a in w)
