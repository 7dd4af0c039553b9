"""Acceptance gate: ten criteria, each with its time limit.

Run with ``pytest tests/test_acceptance.py`` (a summary line per criterion is
printed at the end of the session) or directly with ``python tests/test_acceptance.py``.
"""
import functools
import random
import subprocess
import sys
import time
from fractions import Fraction

from rblie.envelope import (RbEnvelope, build_rals_system, check_rb_compositions, pbw_compare,
                            ra_pattern_words, s0_system, terminal_words, verify_rb_identity)
from rblie.lie import LiePoly, bracket, evaluate, special_bracketing
from rblie.oplie import Bounds, enumerate_rals_words, enumerate_rls_words
from rblie.rewrite import RewriteSystem, brute_force_confluence, check_gsb
from rblie.termio import bundled_presentation
from rblie.words import Alphabet, enumerate_ls_words, is_ls_word

from oracles import assoc_leading, commutator, expand, expand_poly, witt

RESULTS = {}


def criterion(number, title, limit):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            detail = ""
            try:
                detail = fn(*args, **kwargs) or ""
                elapsed = time.perf_counter() - start
                ok = elapsed < limit
                if not ok:
                    detail = f"over time limit {limit}s"
            except Exception as exc:
                elapsed = time.perf_counter() - start
                RESULTS[number] = f"criterion {number:>2} FAIL  {title} ({elapsed:.2f}s): {type(exc).__name__}: {exc}"
                raise
            status = "PASS" if ok else "FAIL"
            note = f" - {detail}" if detail else ""
            RESULTS[number] = f"criterion {number:>2} {status}  {title} ({elapsed:.2f}s / {limit}s){note}"
            assert ok, RESULTS[number]
        return run
    return wrap


XY = Alphabet("xy")


@criterion(1, "Witt counts over two generators, degrees 1..8", 1)
def test_criterion_01_witt_counts():
    words = enumerate_ls_words(XY.letters, 8)
    counts = [sum(1 for w in words if len(w) == n) for n in range(1, 9)]
    assert counts == [witt(2, n) for n in range(1, 9)]
    assert counts == [2, 1, 2, 3, 6, 9, 18, 30]
    return f"counts {counts}"


@criterion(2, "bracket agrees with the associative oracle, total degree <= 7", 30)
def test_criterion_02_free_lie_oracle():
    words = enumerate_ls_words(XY.letters, 6)
    pairs = 0
    for u in words:
        for v in words:
            if len(u) + len(v) > 7:
                continue
            pu, pv = LiePoly.word(u), LiePoly.word(v)
            assert expand_poly(bracket(pu, pv)) == commutator(expand_poly(pu), expand_poly(pv)), (u, v)
            pairs += 1
    return f"{pairs} pairs"


@criterion(3, "special bracketing leading-term contract, degree <= 6", 60)
def test_criterion_03_special_bracketing():
    cases = 0
    for w in enumerate_ls_words(XY.letters, 6):
        for s in range(len(w)):
            for e in range(s + 1, len(w) + 1):
                if not is_ls_word(w[s:e]):
                    continue
                tree = special_bracketing(w, s, e)
                filler = LiePoly.word(w[s:e])
                val = evaluate(tree, filler)
                assert val.leading == w and val.leading_coeff == 1
                lead, coeff = assoc_leading(expand(tree, expand_poly(filler)))
                assert lead == w and coeff == 1
                cases += 1
    return f"{cases} occurrences"


@criterion(4, "multiplication tables: GSB for sl2 and Heisenberg, perturbed tables fail", 10)
def test_criterion_04_gsb_positive_negative():
    sl2, heis = bundled_presentation("sl2"), bundled_presentation("heisenberg")
    for p in (sl2, heis):
        assert check_gsb(s0_system(p), Bounds(3, 0)).passed
    witnesses = []
    for p, pair, target in ((sl2, ("e", "h"), "e"), (heis, ("x", "z"), "x")):
        bad = p.perturbed(*pair, target, 1)
        report = check_gsb(s0_system(bad, validate=False), Bounds(3, 0))
        assert not report.passed
        comp, nf = report.witness
        assert nf
        witnesses.append(repr(nf))
    return "witnesses " + ", ".join(witnesses)


@criterion(5, "abelian-image provider: reduced words equal RALS within (3, 2)", 10)
def test_criterion_05_rals_basis():
    total = 0
    for alph in (Alphabet("x"), XY):
        bounds = Bounds(3, 2)
        words = terminal_words(build_rals_system(alph), bounds)
        assert set(words) == set(enumerate_rals_words(alph, bounds))
        total += len(words)
    return f"{total} words"


@criterion(6, "Rota-Baxter identity on sl2 and abelian1 within (2, 2), four weights", 300)
def test_criterion_06_rb_identity():
    pairs = 0
    for name in ("sl2", "abelian1"):
        p = bundled_presentation(name)
        for weight in (0, 1, -1, Fraction(1, 2)):
            report = verify_rb_identity(RbEnvelope(p, weight), Bounds(2, 2))
            assert report.passed, (name, weight, report.failures[:1])
            pairs += report.pairs
    return f"{pairs} pairs"


@criterion(7, "compositions of rho(a,b), rho(b,c) reduce to zero within (2, 1)", 300)
def test_criterion_07_rho_compositions():
    triples = 0
    for name in ("sl2", "abelian1"):
        p = bundled_presentation(name)
        for weight in (0, 1):
            report = check_rb_compositions(RbEnvelope(p, weight), Bounds(2, 1))
            assert report.passed, (name, weight, report.failures[:1])
            triples += report.triples
    assert triples > 0
    return f"{triples} triples"


@criterion(8, "PBW: RB and RA reduced words coincide within (3, 2)", 300)
def test_criterion_08_pbw():
    bounds = Bounds(3, 2)
    for name in ("sl2", "abelian1"):
        p = bundled_presentation(name)
        for weight in (0, 1):
            report = pbw_compare(p, weight, bounds)
            assert report.equal, (name, weight, report.witness)
            assert all(a == b for a, b in report.counts.values())
        env = RbEnvelope(p, 1)
        assert terminal_words(env.system, bounds) == ra_pattern_words(p.alphabet, bounds)
    return "EQUAL for sl2 and abelian1"


@criterion(9, "brute-force confluence on 200 inputs within (3, 1)", 120)
def test_criterion_09_confluence():
    sl2 = bundled_presentation("sl2")
    words = enumerate_rls_words(sl2.alphabet, Bounds(3, 1))
    rng = random.Random(20)
    inputs = []
    for _ in range(200):
        f = LiePoly()
        while not f:
            for _ in range(rng.randint(1, 3)):
                f = f + LiePoly.word(rng.choice(words), rng.choice([1, -1, 2, Fraction(1, 2)]))
        inputs.append(f)
    vertices = 0
    for weight in (0, 1):
        report = brute_force_confluence(RbEnvelope(sl2, weight).system, inputs)
        assert report.passed and report.inputs == 200, report.counterexample
        vertices += report.vertices
    x, y = XY.letters
    bad = RewriteSystem(XY, [LiePoly.word((x, y)) - LiePoly.letter(x), LiePoly.word((x, y)) - LiePoly.letter(y)])
    assert not brute_force_confluence(bad, [LiePoly.word((x, y))]).passed
    return f"{vertices} vertices explored; non-confluent system detected"


@criterion(10, "normal form idempotent on 500 inputs; CLI output byte-exact", 60)
def test_criterion_10_determinism():
    sl2 = bundled_presentation("sl2")
    env = RbEnvelope(sl2, 1)
    words = enumerate_rls_words(sl2.alphabet, Bounds(3, 2))
    rng = random.Random(10)
    for _ in range(500):
        f = LiePoly()
        for _ in range(rng.randint(1, 4)):
            f = f + LiePoly.word(rng.choice(words), Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
        nf = env.normal_form(f)
        assert env.normal_form(nf) == nf
    commands = [
        ["nf", "--algebra", "sl2", "--weight", "1", "--term", "[R([e,f]),R(e)] - 1/2*[R(e),R(f)]"],
        ["--format", "json", "pbw", "--algebra", "sl2", "--max-deg", "2", "--max-rdeg", "2"],
        ["lswords", "--alphabet", "x,y", "--max-deg", "6"],
    ]
    for argv in commands:
        outputs = {subprocess.run([sys.executable, "-m", "rblie", *argv], capture_output=True, check=True).stdout
                   for _ in range(3)}
        assert len(outputs) == 1
    return "500 inputs, 3 commands x 3 runs"


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except Exception:
                failed += 1
    for n in sorted(RESULTS):
        print(RESULTS[n])
    sys.exit(1 if failed else 0)
