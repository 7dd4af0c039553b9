# Lyndon-Shirshov words and the free Lie algebra
# ==============================================
#
# Generators are declared greatest first.  A word is Lyndon-Shirshov (LS)
# when it beats every proper rotation, and each LS word carries a standard
# bracketing; together they form a basis of the free Lie algebra.

from rblie import Alphabet, LiePoly, bracket, enumerate_ls_words, format_word, standard_bracketing
from rblie.lie import associative_expansion, evaluate, special_bracketing
from rblie.termio import parse_term, print_term

X = Alphabet("xy")
x, y = X.letters

# %% Counting basis words by degree gives 2, 1, 2, 3, 6, 9, ...
words = enumerate_ls_words(X.letters, 6)
for n in range(1, 7):
    print(n, [format_word(w) for w in words if len(w) == n])

# %% Standard bracketing splits off the longest proper LS suffix.
print(standard_bracketing(X.word("xyy")))
print(format_word(X.word("xxyxy")))

# %% Products are rewritten into the basis, with exact rational coefficients.
p = parse_term("[x,y] - 1/2*x", X)
q = parse_term("[x,[x,y]]", X)
print(print_term(bracket(p, q)))

# %% The commutator expansion in the free associative algebra is a handy check.
print(associative_expansion(LiePoly.word(X.word("xxy"))))

# %% A subword can be made the "innermost" factor: substitute any monic
# polynomial with that leading word and the whole word comes back on top.
w = X.word("xxyy")
tree = special_bracketing(w, 1, 4)
print(tree, print_term(evaluate(tree, LiePoly.word(X.word("xyy")) + LiePoly.word(X.word("x"), 5))))
