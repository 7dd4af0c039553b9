"""Rewriting of operated Lie polynomials modulo a set of monic relations.

A :class:`RewriteSystem` holds explicit monic rules and optional
:class:`RuleProvider` schemas that produce rules on demand for candidate
leading words.  A rule with leading word ``u`` acts on every RLS word that
contains ``u`` as a contiguous subword, at the top level or inside operator
arguments at any depth; the acting polynomial is obtained from the Shirshov
bracketing and re-wrapped through each enclosing operator letter.

The reduction strategy is deterministic: the deglex-greatest reducible
monomial is reduced first, using the outermost, then leftmost, then
smallest-rule site.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import BoundExceeded, FuseBlown, InvalidRule
from .lie import LiePoly, apply_operator, evaluate, special_bracketing
from .oplie import Bounds, enumerate_rls_words, rdegree
from .words import Alphabet, Word, deglex_key, format_word, is_ls_word

__all__ = [
    "RuleProvider",
    "RewriteSystem",
    "ReductionSite",
    "Composition",
    "GsbReport",
    "ConfluenceReport",
    "find_reduction_sites",
    "reduce_once",
    "normal_form",
    "compositions",
    "check_gsb",
    "brute_force_confluence",
    "SearchTooLarge",
    "DEFAULT_FUSE",
]

DEFAULT_FUSE = 10**6


def _fuse() -> int:
    return int(os.environ.get("RBLIE_FUSE", DEFAULT_FUSE))


@dataclass(frozen=True)
class ReductionSite:
    """Occurrence of a rule's leading word inside an RLS word.

    ``path`` lists the positions of the operator letters descended through,
    outermost first; ``start:end`` is the span at the innermost level.
    """

    path: tuple
    start: int
    end: int
    rule: LiePoly = field(compare=False, hash=False)


@dataclass
class Composition:
    left: LiePoly
    right: LiePoly
    word: Word
    value: LiePoly


def check_rule(rule: LiePoly) -> LiePoly:
    if not rule.is_monic():
        raise InvalidRule(f"rule {rule!r} is not monic")
    if rdegree(rule.leading) < rule.rdegree():
        raise InvalidRule(f"rule {rule!r}: leading word has fewer operators than another monomial")
    return rule


class RuleProvider:
    """Schema producing a monic rule for some candidate leading words.

    Subclasses set ``lengths`` (the degrees of leading words they can match)
    and implement :meth:`matches` and :meth:`_make_rule`.
    """

    lengths: frozenset = frozenset()

    def __init__(self):
        self.system: Optional[RewriteSystem] = None
        self.memo: dict = {}

    def bind(self, system: "RewriteSystem"):
        self.system = system

    def matches(self, w: Word) -> bool:
        raise NotImplementedError

    def _make_rule(self, w: Word) -> LiePoly:
        raise NotImplementedError

    def rule_for(self, w: Word) -> Optional[LiePoly]:
        if not self.matches(w):
            return None
        rule = self.memo.get(w)
        if rule is None:
            rule = check_rule(self._make_rule(w))
            if rule.leading != w:
                raise InvalidRule(f"provider produced a rule with leading word {format_word(rule.leading)}"
                                  f" for {format_word(w)}")
            rule = self.memo.setdefault(w, rule)
        return rule

    def instances(self, bounds: Bounds) -> list:
        """Rules whose leading words lie within ``bounds``, ascending by leading word."""
        out = []
        for w in enumerate_rls_words(self.system.alphabet, bounds):
            if len(w) in self.lengths:
                rule = self.rule_for(w)
                if rule is not None:
                    out.append(rule)
        return out


class RewriteSystem:
    """Monic rules plus providers acting on RLie polynomials.

    ``memoize`` caches normal forms per word.  The cached route gives the
    same results as step-by-step reduction only on confluent systems, so it
    is meant for systems known to be Groebner-Shirshov bases.
    """

    def __init__(self, alphabet: Alphabet, rules: Iterable[LiePoly] = (), providers=(),
                 rdegree_bound: Optional[int] = None, memoize: bool = False, name: str = ""):
        self.alphabet = alphabet
        self.rules = [check_rule(r) for r in rules]
        self.providers = []
        self.rdegree_bound = rdegree_bound
        self.memoize = memoize
        self.name = name
        self._by_lead: dict = {}
        for r in self.rules:
            self._by_lead.setdefault(r.leading, []).append(r)
        for p in providers:
            self.add_provider(p)
        self._reset()

    def _reset(self):
        self._lengths = sorted({len(u) for u in self._by_lead} | {n for p in self.providers for n in p.lengths})
        self._terminal: dict = {}
        self._embed: dict = {}
        self._nf: dict = {}

    def add_provider(self, provider: RuleProvider):
        provider.bind(self)
        self.providers.append(provider)
        self._reset()

    # matching ---------------------------------------------------------------
    def _local_rules(self, word: Word, start: int, length: int) -> list:
        sub = word[start:start + length]
        found = list(self._by_lead.get(sub, ()))
        for p in self.providers:
            if length in p.lengths:
                r = p.rule_for(sub)
                if r is not None:
                    found.append(r)
        return found

    def _local_match(self, word: Word) -> bool:
        n = len(word)
        for start in range(n):
            for length in self._lengths:
                if start + length > n:
                    break
                sub = word[start:start + length]
                if sub in self._by_lead:
                    return True
                for p in self.providers:
                    if length in p.lengths and p.matches(sub):
                        return True
        return False

    def is_terminal(self, w: Word) -> bool:
        """True iff no rule applies to ``w`` at any nesting depth."""
        hit = self._terminal.get(w)
        if hit is None:
            hit = not self._local_match(w) and all(a.arg is None or self.is_terminal(a.arg) for a in w)
            self._terminal[w] = hit
        return hit

    def _levels(self, w: Word):
        frontier = [((), w)]
        while frontier:
            yield frontier
            nxt = []
            for path, word in frontier:
                for i, a in enumerate(word):
                    if a.arg is not None and not self.is_terminal(a.arg):
                        nxt.append((path + (i,), a.arg))
            frontier = nxt

    def sites(self, w: Word) -> list:
        """Every reduction site of ``w`` in canonical order."""
        if self.is_terminal(w):
            return []
        out = []
        for frontier in self._levels(w):
            for path, word in frontier:
                n = len(word)
                for start in range(n):
                    for length in self._lengths:
                        if start + length > n:
                            break
                        for r in self._local_rules(word, start, length):
                            out.append(ReductionSite(path, start, start + length, r))
        return out

    def first_site(self, w: Word) -> Optional[ReductionSite]:
        if self.is_terminal(w):
            return None
        for frontier in self._levels(w):
            for path, word in frontier:
                n = len(word)
                for start in range(n):
                    for length in self._lengths:
                        if start + length > n:
                            break
                        rules = self._local_rules(word, start, length)
                        if rules:
                            return ReductionSite(path, start, start + length, rules[0])
        raise AssertionError("non-terminal word without a site")

    def embedding(self, w: Word, site: ReductionSite) -> LiePoly:
        """The element of the closure with leading word ``w`` that ``site`` describes."""
        key = (w, site.path, site.start, site.end, id(site.rule))
        h = self._embed.get(key)
        if h is None:
            chain = [w]
            for i in site.path:
                chain.append(chain[-1][i].arg)
            inner = chain[-1]
            h = evaluate(special_bracketing(inner, site.start, site.end), site.rule)
            for depth in range(len(site.path) - 1, -1, -1):
                i = site.path[depth]
                h = evaluate(special_bracketing(chain[depth], i, i + 1), apply_operator(h))
            self._embed[key] = h
        return h

    def _check_bound(self, f: LiePoly):
        if self.rdegree_bound is not None and f.rdegree() > self.rdegree_bound:
            raise BoundExceeded(f"R-degree {f.rdegree()} exceeds the system bound {self.rdegree_bound}")

    # normal forms -----------------------------------------------------------
    def reduce_once(self, f: LiePoly) -> Optional[LiePoly]:
        """One canonical rewriting step, or ``None`` if ``f`` is terminal."""
        self._check_bound(f)
        for w, c in f.sorted_terms():
            site = self.first_site(w)
            if site is not None:
                return f - c * self.embedding(w, site)
        return None

    def normal_form(self, f: LiePoly) -> LiePoly:
        self._check_bound(f)
        if self.memoize:
            out: dict = {}
            for w, c in f.terms.items():
                for t, d in self._nf_word(w).items():
                    s = out.get(t, 0) + c * d
                    if s:
                        out[t] = s
                    else:
                        out.pop(t)
            return LiePoly(out)
        return self._nf_steps(f)

    def _nf_steps(self, f: LiePoly) -> LiePoly:
        work = dict(f.terms)
        out = {}
        steps, fuse = 0, _fuse()
        while work:
            w = max(work, key=deglex_key)
            c = work.pop(w)
            site = self.first_site(w)
            if site is None:
                out[w] = c
                continue
            steps += 1
            if steps > fuse:
                raise FuseBlown(f"normal form did not finish within {fuse} steps")
            for v, d in self.embedding(w, site).terms.items():
                if v == w:
                    continue
                s = work.get(v, 0) - c * d
                if s:
                    work[v] = s
                else:
                    work.pop(v, None)
        return LiePoly(out)

    def _nf_word(self, w: Word) -> dict:
        hit = self._nf.get(w)
        if hit is not None:
            return hit
        site = self.first_site(w)
        if site is None:
            res = {w: 1}
        else:
            res = {}
            for v, d in self.embedding(w, site).sorted_terms():
                if v == w:
                    continue
                for t, e in self._nf_word(v).items():
                    s = res.get(t, 0) - d * e
                    if s:
                        res[t] = s
                    else:
                        res.pop(t)
        self._nf[w] = res
        return res

    # rule inspection --------------------------------------------------------
    def instances(self, bounds: Bounds) -> list:
        """Explicit rules plus provider rules whose leading words lie within ``bounds``."""
        out = list(self.rules)
        for p in self.providers:
            out.extend(p.instances(bounds))
        return out

    def validate(self, bounds: Optional[Bounds] = None) -> dict:
        """Flags ``monic``, ``rdeg_condition`` and ``reduced`` over the rules in ``bounds``."""
        rules = self.instances(bounds) if bounds is not None else list(self.rules)
        flags = {"monic": True, "rdeg_condition": True, "reduced": True}
        for r in rules:
            if not r.is_monic():
                flags["monic"] = False
            if rdegree(r.leading) < r.rdegree():
                flags["rdeg_condition"] = False
            lead = r.leading
            own = self.sites(lead)
            if len(own) != 1 or own[0].rule is not r or own[0].path or (own[0].start, own[0].end) != (0, len(lead)):
                flags["reduced"] = False
            elif any(not self.is_terminal(w) for w in r.terms if w != lead):
                flags["reduced"] = False
        return flags

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<RewriteSystem{label}: {len(self.rules)} rules, {len(self.providers)} providers>"


def find_reduction_sites(w: Word, system: RewriteSystem) -> list:
    if system.rdegree_bound is not None and rdegree(w) > system.rdegree_bound:
        raise BoundExceeded(f"R-degree {rdegree(w)} exceeds the system bound {system.rdegree_bound}")
    return system.sites(tuple(w))


def reduce_once(f: LiePoly, system: RewriteSystem) -> Optional[LiePoly]:
    return system.reduce_once(f)


def normal_form(f: LiePoly, system: RewriteSystem) -> LiePoly:
    return system.normal_form(f)


# compositions ----------------------------------------------------------------
def _composition(s1: LiePoly, s2: LiePoly, k: int) -> Optional[Composition]:
    u, v = s1.leading, s2.leading
    w = u + v[k:]
    if not is_ls_word(w):
        return None
    j = len(u) - k
    value = evaluate(special_bracketing(w, 0, len(u)), s1) - evaluate(special_bracketing(w, j, len(w)), s2)
    return Composition(s1, s2, w, value)


def compositions(s1: LiePoly, s2: LiePoly) -> list:
    """All compositions of ``s1`` and ``s2`` over proper overlaps of their leading words."""
    u, v = s1.leading, s2.leading
    out = []
    for k in range(1, min(len(u), len(v))):
        if u[len(u) - k:] == v[:k]:
            comp = _composition(s1, s2, k)
            if comp is not None:
                out.append(comp)
    return out


@dataclass
class GsbReport:
    passed: bool
    rules: int
    compositions: int
    witnesses: list

    @property
    def witness(self):
        return self.witnesses[0] if self.witnesses else None


def check_gsb(system: RewriteSystem, bounds: Bounds, max_witnesses: int = 1) -> GsbReport:
    """Check that every composition whose word lies in ``bounds`` reduces to zero.

    Rules are the explicit ones plus every provider instance whose leading
    word lies in ``bounds``.  A failing composition is reported as
    ``(composition, normal_form)``.
    """
    rules = system.instances(bounds)
    by_first: dict = {}
    for r in rules:
        by_first.setdefault(r.leading[0], []).append(r)
    checked = 0
    witnesses = []
    for s1 in rules:
        u = s1.leading
        for j in range(1, len(u)):
            k = len(u) - j
            for s2 in by_first.get(u[j], ()):
                v = s2.leading
                if k >= len(v) or u[j:] != v[:k]:
                    continue
                w = u + v[k:]
                if not bounds.contains(w):
                    continue
                comp = _composition(s1, s2, k)
                if comp is None:
                    continue
                checked += 1
                if comp.value and not deglex_key(comp.value.leading) < deglex_key(w):
                    raise AssertionError("composition does not lower the leading word")
                nf = system.normal_form(comp.value)
                if nf:
                    witnesses.append((comp, nf))
                    if len(witnesses) >= max_witnesses:
                        return GsbReport(False, len(rules), checked, witnesses)
    return GsbReport(not witnesses, len(rules), checked, witnesses)


# brute-force confluence --------------------------------------------------------
@dataclass
class ConfluenceReport:
    passed: bool
    inputs: int
    vertices: int
    counterexample: Optional[tuple] = None


class SearchTooLarge(RuntimeError):
    """The rewriting graph explored by the brute-force checker exceeded its vertex cap."""


def brute_force_confluence(system: RewriteSystem, inputs: Iterable[LiePoly],
                           max_vertices: int = 100_000) -> ConfluenceReport:
    """Follow every rewriting edge (all monomials, all sites) from each input.

    Confluence holds on an input iff all maximal paths end at one terminal
    vertex, which must also equal ``system.normal_form``.  The counterexample
    is ``(input, reachable terminals, normal form)``.
    """
    reach: dict = {}

    def successors(f: LiePoly):
        for w, c in f.sorted_terms():
            for site in system.sites(w):
                yield f - c * system.embedding(w, site)

    def terminals(f: LiePoly) -> frozenset:
        hit = reach.get(f)
        if hit is not None:
            return hit
        if len(reach) >= max_vertices:
            raise SearchTooLarge(f"more than {max_vertices} vertices")
        reach[f] = frozenset()  # guards against cycles, which the rdeg condition rules out
        result = set()
        for g in successors(f):
            result |= terminals(g)
        if not result:
            result = {f}
        reach[f] = frozenset(result)
        return reach[f]

    count = 0
    for f in inputs:
        count += 1
        ends = terminals(f)
        nf = system._nf_steps(f)
        if len(ends) != 1 or next(iter(ends)) != nf:
            return ConfluenceReport(False, count, len(reach), (f, ends, nf))
    return ConfluenceReport(True, count, len(reach))
