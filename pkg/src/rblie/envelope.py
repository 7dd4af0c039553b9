"""Universal Rota-Baxter and abelian-image envelopes of a Lie algebra.

Given a Lie algebra ``L`` by an ordered basis and structure constants, the
envelope systems live in the free operated Lie algebra on that basis:

* ``S0``: the multiplication table ``xy - [x,y]`` for ``x > y``;
* the Rota-Baxter system: ``S0`` plus, for terminal words ``a > b``,
  ``rho(a,b) = R(a)R(b) - R(t([R(a),b])) - R(t([a,R(b)])) - lam*R(t([a,b]))``
  where ``t`` is the normal form map of the system itself;
* the abelian-image system: ``S0`` plus ``R(a)R(b)`` for terminal ``a > b``.

The infinite families are realised lazily by rule providers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .errors import JacobiViolation
from .lie import LiePoly, apply_operator, bracket
from .oplie import Bounds, enumerate_rls_words, is_rals_word, rdegree
from .rewrite import GsbReport, RewriteSystem, RuleProvider, check_gsb, compositions
from .words import Alphabet, Letter, Word, deglex_key

__all__ = [
    "LiePresentation",
    "build_s0",
    "s0_system",
    "AbelianImageProvider",
    "RbProvider",
    "RbEnvelope",
    "rb_provider",
    "build_ra_system",
    "build_rals_system",
    "terminal_words",
    "ra_pattern_words",
    "verify_rb_identity",
    "check_rb_compositions",
    "pbw_compare",
]


@dataclass
class LiePresentation:
    """A Lie algebra with ordered basis ``basis`` (first element greatest).

    ``table`` maps ``(left, right)`` with ``left > right`` to the bracket
    ``[left, right]`` as ``{basis name: coefficient}``; absent pairs commute.
    """

    basis: Tuple[str, ...]
    table: Dict[Tuple[str, str], Dict[str, Fraction]] = field(default_factory=dict)
    weight: Fraction = Fraction(0)
    name: str = ""

    def __post_init__(self):
        self.basis = tuple(self.basis)
        self.alphabet = Alphabet(self.basis)
        rank = {n: i for i, n in enumerate(self.basis)}
        clean = {}
        for (a, b), form in self.table.items():
            for n in (a, b, *form):
                if n not in rank:
                    raise ValueError(f"unknown basis element {n!r}")
            if rank[a] >= rank[b]:
                raise ValueError(f"bracket ({a},{b}) must have left > right in the basis order")
            clean[(a, b)] = {n: Fraction(c) for n, c in form.items() if c}
        self.table = clean

    def product(self, a: str, b: str) -> LiePoly:
        """``[a,b]`` in ``L`` as a degree-one polynomial."""
        if a == b:
            return LiePoly()
        sign = 1
        if self.basis.index(a) > self.basis.index(b):
            a, b, sign = b, a, -1
        form = self.table.get((a, b), {})
        return LiePoly({(self.alphabet[n],): sign * c for n, c in form.items()})

    def perturbed(self, left: str, right: str, target: str, delta=1) -> "LiePresentation":
        """Copy with ``delta`` added to the coefficient of ``target`` in ``[left,right]``."""
        table = {k: dict(v) for k, v in self.table.items()}
        form = table.setdefault((left, right), {})
        form[target] = form.get(target, 0) + Fraction(delta)
        return LiePresentation(self.basis, table, self.weight, self.name + "*")


def build_s0(p: LiePresentation, validate: bool = True) -> list:
    """Rules ``xy - [x,y]`` for ``x > y``; with ``validate``, raise unless they form a GSB."""
    letters = p.alphabet.letters
    rules = []
    for i, x in enumerate(letters):
        for y in letters[i + 1:]:
            rules.append(LiePoly.word((x, y)) - p.product(x.name, y.name))
    if validate:
        report = check_gsb(RewriteSystem(p.alphabet, rules), Bounds(3, 0))
        if not report.passed:
            comp, nf = report.witness
            raise JacobiViolation(f"multiplication table fails the Jacobi identity: composition at "
                                  f"{comp.word} reduces to {nf!r}")
    return rules


def s0_system(p: LiePresentation, validate: bool = True, **kw) -> RewriteSystem:
    kw.setdefault("name", "s0")
    return RewriteSystem(p.alphabet, build_s0(p, validate), **kw)


def _operator_pair(system: RewriteSystem, w: Word) -> bool:
    if len(w) != 2:
        return False
    a, b = w
    return (a.arg is not None and b.arg is not None and a.key > b.key
            and system.is_terminal(a.arg) and system.is_terminal(b.arg))


class AbelianImageProvider(RuleProvider):
    """``R(a)R(b)`` (right side zero) for terminal words ``a > b``."""

    lengths = frozenset({2})

    def matches(self, w: Word) -> bool:
        return _operator_pair(self.system, w)

    def _make_rule(self, w: Word) -> LiePoly:
        return LiePoly.word(w)


class RbProvider(RuleProvider):
    """Rota-Baxter relations ``rho(a,b)`` of a fixed weight, built on demand."""

    lengths = frozenset({2})

    def __init__(self, weight=0):
        super().__init__()
        self.weight = Fraction(weight)

    def matches(self, w: Word) -> bool:
        return _operator_pair(self.system, w)

    def _make_rule(self, w: Word) -> LiePoly:
        a = LiePoly.word(w[0].arg)
        b = LiePoly.word(w[1].arg)
        t = self.system.normal_form
        rhs = apply_operator(t(bracket(apply_operator(a), b))) + apply_operator(t(bracket(a, apply_operator(b))))
        if self.weight:
            rhs = rhs + self.weight * apply_operator(t(bracket(a, b)))
        return LiePoly.word(w) - rhs


class RbEnvelope:
    """Rewriting system presenting the universal Rota-Baxter envelope of ``presentation``."""

    def __init__(self, presentation: LiePresentation, weight=None, rdegree_bound: Optional[int] = None,
                 validate: bool = True):
        self.presentation = presentation
        self.weight = Fraction(presentation.weight if weight is None else weight)
        self.provider = RbProvider(self.weight)
        self.system = RewriteSystem(presentation.alphabet, build_s0(presentation, validate),
                                    [self.provider], rdegree_bound=rdegree_bound, memoize=True, name="rb")

    @property
    def alphabet(self) -> Alphabet:
        return self.presentation.alphabet

    def rho(self, a: Word, b: Word) -> Optional[LiePoly]:
        """``rho(a,b)`` for terminal ``a > b``; ``None`` when the provider does not fire."""
        return self.provider.rule_for((Letter.operator(a), Letter.operator(b)))

    def normal_form(self, f: LiePoly) -> LiePoly:
        return self.system.normal_form(f)


def rb_provider(w: Word, env: RbEnvelope) -> Optional[LiePoly]:
    return env.provider.rule_for(tuple(w))


def build_ra_system(p: LiePresentation, validate: bool = True, **kw) -> RewriteSystem:
    kw.setdefault("name", "ra")
    kw.setdefault("memoize", True)
    return RewriteSystem(p.alphabet, build_s0(p, validate), [AbelianImageProvider()], **kw)


def build_rals_system(alphabet: Alphabet, **kw) -> RewriteSystem:
    """Free operated Lie algebra modulo ``R(a)R(b)`` for ``a > b``: its terminal words are RALS."""
    kw.setdefault("name", "rals")
    kw.setdefault("memoize", True)
    return RewriteSystem(alphabet, [], [AbelianImageProvider()], **kw)


def terminal_words(system: RewriteSystem, bounds: Bounds) -> list:
    """Reduced RLS words within ``bounds``, ascending."""
    return [w for w in enumerate_rls_words(system.alphabet, bounds) if system.is_terminal(w)]


def _no_generator_descent(w: Word) -> bool:
    for a, b in zip(w, w[1:]):
        if a.arg is None and b.arg is None and a.key > b.key:
            return False
    return all(a.arg is None or _no_generator_descent(a.arg) for a in w)


def ra_pattern_words(alphabet: Alphabet, bounds: Bounds) -> list:
    """RALS words avoiding ``xy`` (generators ``x > y``) at every depth.

    Computed from the word patterns alone, independently of any rewriting.
    """
    return [w for w in enumerate_rls_words(alphabet, bounds) if is_rals_word(w) and _no_generator_descent(w)]


# Rota-Baxter identity ----------------------------------------------------------
@dataclass
class RbIdentityReport:
    passed: bool
    pairs: int
    failures: list


def rb_residual(env: RbEnvelope, a: Word, b: Word) -> LiePoly:
    """Normal form of ``[R(a),R(b)] - R([R(a),b]) - R([a,R(b)]) - lam*R([a,b])``."""
    pa, pb = LiePoly.word(a), LiePoly.word(b)
    ra, rb = apply_operator(pa), apply_operator(pb)
    f = (bracket(ra, rb) - apply_operator(bracket(ra, pb)) - apply_operator(bracket(pa, rb))
         - env.weight * apply_operator(bracket(pa, pb)))
    return env.normal_form(f)


def verify_rb_identity(env: RbEnvelope, bounds: Bounds, max_failures: int = 10) -> RbIdentityReport:
    """Check the Rota-Baxter identity on all pairs ``a >= b`` of terminal words within ``bounds``.

    The residual is antisymmetric in ``(a, b)``, so the unordered pairs cover all of them.
    """
    words = terminal_words(env.system, bounds)
    failures = []
    pairs = 0
    for i, a in enumerate(words):
        for b in words[:i + 1]:
            pairs += 1
            res = rb_residual(env, a, b)
            if res:
                failures.append((a, b, res))
                if len(failures) >= max_failures:
                    return RbIdentityReport(False, pairs, failures)
    return RbIdentityReport(not failures, pairs, failures)


@dataclass
class TripleReport:
    passed: bool
    triples: int
    failures: list


def check_rb_compositions(env: RbEnvelope, bounds: Bounds, max_failures: int = 10) -> TripleReport:
    """Compositions of ``rho(a,b)`` and ``rho(b,c)`` at ``R(a)R(b)R(c)`` for terminal ``a > b > c``."""
    words = terminal_words(env.system, bounds)
    failures = []
    count = 0
    for i, c in enumerate(words):
        for j in range(i + 1, len(words)):
            b = words[j]
            s2 = env.rho(b, c)
            for a in words[j + 1:]:
                s1 = env.rho(a, b)
                w = (Letter.operator(a), Letter.operator(b), Letter.operator(c))
                for comp in compositions(s1, s2):
                    if comp.word != w:
                        continue
                    count += 1
                    nf = env.normal_form(comp.value)
                    if nf:
                        failures.append((a, b, c, nf))
                        if len(failures) >= max_failures:
                            return TripleReport(False, count, failures)
    return TripleReport(not failures, count, failures)


# PBW comparison ------------------------------------------------------------------
@dataclass
class PbwReport:
    equal: bool
    counts: dict  # (degree, rdegree) -> (rb count, ra count)
    witness: Optional[Tuple[str, Word]] = None
    rb_gsb: Optional[GsbReport] = None
    ra_gsb: Optional[GsbReport] = None


def _graded_counts(words) -> dict:
    out: dict = {}
    for w in words:
        key = (len(w), rdegree(w))
        out[key] = out.get(key, 0) + 1
    return out


def pbw_compare(p: LiePresentation, weight=None, bounds: Bounds = Bounds(3, 2),
                validate: bool = True) -> PbwReport:
    """Compare reduced words of the Rota-Baxter and abelian-image envelopes within ``bounds``."""
    env = RbEnvelope(p, weight)
    ra = build_ra_system(p)
    rb_gsb = ra_gsb = None
    if validate:
        rb_gsb = check_gsb(env.system, bounds)
        ra_gsb = check_gsb(ra, bounds)
    t_rb = terminal_words(env.system, bounds)
    t_ra = terminal_words(ra, bounds)
    c_rb, c_ra = _graded_counts(t_rb), _graded_counts(t_ra)
    counts = {k: (c_rb.get(k, 0), c_ra.get(k, 0)) for k in sorted(set(c_rb) | set(c_ra))}
    only_rb = sorted(set(t_rb) - set(t_ra), key=deglex_key)
    only_ra = sorted(set(t_ra) - set(t_rb), key=deglex_key)
    witness = ("rb", only_rb[0]) if only_rb else ("ra", only_ra[0]) if only_ra else None
    equal = witness is None
    if validate:
        equal = equal and rb_gsb.passed and ra_gsb.passed
    return PbwReport(equal, counts, witness, rb_gsb, ra_gsb)
