"""Rota-Baxter Lie algebras by Groebner-Shirshov rewriting.

Lyndon-Shirshov words, the free (operated) Lie algebra with exact rational
coefficients, a rewriting engine with composition checks, and the
Rota-Baxter and abelian-image envelopes of a Lie algebra given by structure
constants.
"""
from .envelope import (AbelianImageProvider, LiePresentation, RbEnvelope, RbProvider, build_ra_system,
                       build_rals_system, build_s0, check_rb_compositions, pbw_compare, ra_pattern_words,
                       rb_provider, s0_system, terminal_words, verify_rb_identity)
from .errors import (BoundExceeded, FuseBlown, InvalidRule, JacobiViolation, NotASubwordOccurrence,
                     NotLyndonShirshov, OverlappingOccurrences, ParseError, PresentationError, RbLieError,
                     UnknownGenerator)
from .lie import (LiePoly, apply_operator, associative_expansion, bracket, double_bracketing, evaluate,
                  jacobian, special_bracketing)
from .oplie import (Bounds, enumerate_rals_words, enumerate_rls_words, is_rals_word, is_rls_word, level,
                    rdegree)
from .rewrite import (GsbReport, ReductionSite, RewriteSystem, RuleProvider, brute_force_confluence, check_gsb,
                      compositions, find_reduction_sites, normal_form, reduce_once)
from .termio import bundled_presentation, load_presentation, parse_term, print_term
from .words import (Alphabet, Hole, Letter, cfl_factorization, compare_deglex, deglex_key, enumerate_ls_words,
                    format_word, is_ls_word, standard_bracketing, standard_factorization)

__version__ = "0.1.0"
