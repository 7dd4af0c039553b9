# The Rota-Baxter envelope of sl2
# ===============================
#
# sl2 is given by structure constants with e > h > f.  Its multiplication
# table becomes rewriting rules xy -> [x,y]; the Rota-Baxter relations
# R(a)R(b) -> ... are produced on demand for reduced words a > b.

from rblie import Bounds, RbEnvelope, build_ra_system, pbw_compare, terminal_words
from rblie.envelope import verify_rb_identity
from rblie.termio import bundled_presentation, parse_term, print_term
from rblie.words import format_word

sl2 = bundled_presentation("sl2")
env = RbEnvelope(sl2, weight=1)

# %% Normal forms.  R(e)R(f) is rewritten through the weight-1 relation.
for text in ["[R(e),R(f)]", "R([e,f])", "[R([R(e),f]),R(h)]"]:
    f = parse_term(text, sl2.alphabet)
    print(f"{text:>22}  ->  {print_term(env.normal_form(f))}")

# %% The operator really satisfies the Rota-Baxter identity on reduced words.
report = verify_rb_identity(env, Bounds(2, 1))
print("identity holds on", report.pairs, "pairs:", report.passed)

# %% Reduced words are the same for the Rota-Baxter envelope and the envelope
# whose operator has abelian image: only the lower terms of the rules differ.
bounds = Bounds(3, 2)
report = pbw_compare(sl2, 1, bounds)
print("deg rdeg   rb   ra")
for (d, r), (a, b) in report.counts.items():
    print(f"{d:>3} {r:>4} {a:>4} {b:>4}")
print("EQUAL" if report.equal else "DIFFERENT")

# %% A few reduced words of operator degree one.
ra = build_ra_system(sl2)
print([format_word(w) for w in terminal_words(ra, Bounds(2, 1)) if len(w) == 2][:6])
