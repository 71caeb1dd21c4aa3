"""End-to-end acceptance checks.

Each test covers one headline result and prints a single pass/fail line,
so a plain test run doubles as a checklist.  Set HOMOPERAD_LONG_TESTS=1
to also run the long completion (orders 12 to 14).
"""

import os
import random
import sys
from fractions import Fraction
from math import factorial

from homoperad.automata import determinize, grammar_from_rules
from homoperad.completion import complete, overlaps, resolve, Resolved
from homoperad.homalgebra import (
    check_hom_associative,
    check_hom_jacobi,
    check_multiplicative,
    check_skew,
    commutator_algebra,
    example1,
    q_sl2,
    weak_morphism_violations,
    yau_twist,
)
from homoperad.orders import LEX_MA, RIGHT_COMB
from homoperad.rewrite import (
    RewritingSystem,
    is_irreducible,
    normal_form_term,
    parse_rules,
)
from homoperad.scalars import RatFunc
from homoperad.series import free_series, hilbert_series
from homoperad.sigma_model import (
    SigmaDerivationModel,
    check_six_term_jacobi,
    sigma_bracket,
)
from homoperad.terms import (
    ASS_SIGNATURE,
    HOM_SIGNATURE,
    enumerate_plane,
    parse,
    print_term,
)

HOMASS_RULE = "m a 1 m 2 3 -> m m 1 2 a 3"


def truncated_poly_algebra(n):
    """K[t]/(t^n) with alpha = identity; a plain associative algebra."""
    from homoperad.homalgebra import FiniteHomAlgebra

    zero = Fraction(0)
    mult = [
        [
            [Fraction(1) if k == i + j else zero for k in range(n)]
            if i + j < n
            else [zero] * n
            for j in range(n)
        ]
        for i in range(n)
    ]
    ident = [[Fraction(1) if i == j else zero for j in range(n)] for i in range(n)]
    return FiniteHomAlgebra(n, mult, ident)


def poly_endomorphism(n, image):
    A = truncated_poly_algebra(n)
    beta = [[Fraction(0)] * n for _ in range(n)]
    power = A.basis(0)
    for k in range(n):
        for i in range(n):
            beta[i][k] = power[i]
        power = A.multiply(power, image)
    return beta


def report(criterion, ok):
    line = f"acceptance criterion {criterion}: {'pass' if ok else 'FAIL'}"
    print(line, file=sys.stderr)
    assert ok, line


def homass_system():
    rules = parse_rules(HOMASS_RULE, HOM_SIGNATURE, LEX_MA)
    return RewritingSystem(HOM_SIGNATURE, LEX_MA, rules)


def homass_completion(max_order):
    state = complete(homass_system(), max_order=max_order)
    assert state.status == "complete"
    return state


def test_criterion_1_associative_operad():
    rules = parse_rules("m 1 m 2 3 -> m m 1 2 3", ASS_SIGNATURE, RIGHT_COMB)
    system = RewritingSystem(ASS_SIGNATURE, RIGHT_COMB, rules)
    ambs = overlaps(rules[0], rules[0], ASS_SIGNATURE)
    ok = len(ambs) == 1
    ok = ok and isinstance(resolve(ambs[0], system), Resolved)
    # census counts rules by vertex count, so the single binary-tree rule
    # sits at order 2
    state = complete(system, max_order=6)
    ok = ok and state.status == "complete" and state.census() == {2: 1}
    for n in range(1, 7):
        plane = [
            parse(print_term(c.word), ASS_SIGNATURE)
            for c in enumerate_plane(0, n - 1)
        ]
        irr = [c for c in plane if is_irreducible(c, state.system)]
        ok = ok and len(irr) == 1
        ok = ok and len(irr) * factorial(n) == factorial(n)
    report(1, ok)


def test_criterion_2_hom_associative_census():
    reduced = complete(homass_system(), max_order=11, inter_reduce=True)
    plain = complete(homass_system(), max_order=11, inter_reduce=False)
    want = {3: 1, 5: 1, 7: 1, 8: 2, 9: 1, 10: 4, 11: 7}
    ok = reduced.status == plain.status == "complete"
    ok = ok and reduced.census() == want
    # the two inter-reduction policies must agree order by order; report
    # both censuses if they ever drift apart
    if reduced.census() != plain.census():
        print(
            f"policy mismatch: reduced={reduced.census()} plain={plain.census()}",
            file=sys.stderr,
        )
        ok = False
    if os.environ.get("HOMOPERAD_LONG_TESTS"):
        state = complete(homass_system(), max_order=14, budget_seconds=7200)
        want14 = {**want, 12: 12, 13: 19, 14: 38}
        ok = ok and state.status == "complete" and state.census() == want14
    report(2, ok)


def test_criterion_3_derived_rules_verbatim():
    state = homass_completion(7)
    got = {}
    for r in state.system.rules:
        if r.order in (5, 7):
            (rhs_mono, coeff), = r.rhs.terms.items()
            got[r.order] = (
                print_term(r.lhs.word),
                print_term(rhs_mono.word),
                coeff,
            )
    ok = got == {
        5: ("m m 1 a 2 a m 3 4", "m m 1 m 2 3 a a 4", Fraction(1)),
        7: ("m m 1 m 2 a 3 a a m 4 5", "m m 1 m 2 m 3 4 a a a 5", Fraction(1)),
    }
    report(3, ok)


HILBERT_8 = {
    (0, 0): 1, (0, 1): 1, (1, 0): 1,
    (0, 2): 2, (1, 1): 3, (2, 0): 1,
    (0, 3): 5, (1, 2): 9, (2, 1): 6, (3, 0): 1,
    (0, 4): 14, (1, 3): 30, (2, 2): 26, (3, 1): 10, (4, 0): 1,
    (0, 5): 42, (1, 4): 105, (2, 3): 110, (3, 2): 60, (4, 1): 15, (5, 0): 1,
    (0, 6): 132, (1, 5): 378, (2, 4): 465, (3, 3): 315, (4, 2): 120,
    (5, 1): 21, (6, 0): 1,
    (0, 7): 429, (1, 6): 1386, (2, 5): 1960, (3, 4): 1575, (4, 3): 770,
    (5, 2): 217, (6, 1): 28, (7, 0): 1,
    (0, 8): 1430, (1, 7): 5148, (2, 6): 8232, (3, 5): 7644, (4, 4): 4494,
    (5, 3): 1680, (6, 2): 364, (7, 1): 36, (8, 0): 1,
}

DIFFERENCE_8 = {
    (1, 2): 1, (2, 2): 4, (3, 2): 10, (4, 2): 20, (5, 2): 35, (6, 2): 56,
    (1, 3): 5, (2, 3): 30, (3, 3): 105, (4, 3): 280, (5, 3): 630,
    (1, 4): 21, (2, 4): 165, (3, 4): 735, (4, 4): 2436,
    (1, 5): 84, (2, 5): 812, (3, 5): 4368,
    (1, 6): 330, (2, 6): 3780,
    (1, 7): 1287,
}


def test_criterion_4_hilbert_series_degree_8():
    # completing through order 8 covers the gradings (5,3) and (4,4)
    rules = homass_completion(8).system.rules
    h = hilbert_series(rules, 8)
    diff = free_series(8) - h
    ok = True
    for total in range(9):
        for i in range(total + 1):
            j = total - i
            ok = ok and h.coefficient(i, j) == HILBERT_8[(i, j)]
            ok = ok and diff.coefficient(i, j) == DIFFERENCE_8.get((i, j), 0)
    report(4, ok)


def test_criterion_5_free_series_oracle():
    f = free_series(12)
    aut = determinize(grammar_from_rules([]))
    from homoperad.series import BivariateSeries, solve_series

    g = solve_series(aut, 12)
    fixed = BivariateSeries.zero(12)
    for b in aut.states:
        if not aut.accepting(b):
            fixed = fixed + g[b]
    ok = True
    for k in range(13):
        for l in range((12 - k) // 2 + 1):
            if k + 2 * l > 12:
                continue
            closed = Fraction(
                factorial(k + 2 * l), factorial(k) * factorial(l) ** 2 * (l + 1)
            )
            ok = ok and f.coefficient(k, l) == closed
            ok = ok and fixed.coefficient(k, l) == closed
    catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    ok = ok and all(f.coefficient(0, l) == c for l, c in enumerate(catalan))
    report(5, ok)


def test_criterion_6_automaton_vs_brute_force():
    rule_texts = [
        HOMASS_RULE,
        HOMASS_RULE + "\nm m 1 a 2 a m 3 4 -> m m 1 m 2 3 a a 4",
    ]
    ok = True
    for text in rule_texts:
        rules = parse_rules(text, HOM_SIGNATURE, LEX_MA)
        system = RewritingSystem(HOM_SIGNATURE, LEX_MA, rules)
        aut = determinize(grammar_from_rules(rules))
        for k in range(11):
            for l in range((10 - k) // 2 + 1):
                if k + 2 * l > 10:
                    continue
                for c in enumerate_plane(k, l):
                    ok = ok and aut.accepts(c.word) == (
                        not is_irreducible(c, system)
                    )
    aut1 = determinize(
        grammar_from_rules(parse_rules(HOMASS_RULE, HOM_SIGNATURE, LEX_MA))
    )
    ok = ok and set(aut1.states) == {
        (1,), (1, 2), (1, 3), (0, 1, 3), (0, 1, 2),
    }
    report(6, ok)


def test_criterion_7_unique_normal_forms():
    system = homass_completion(6).system
    rng = random.Random(2026)
    ok = True
    for k in range(7):
        for l in range(7 - k):
            for c in enumerate_plane(k, l):
                base = normal_form_term(c, system)
                for _ in range(100):
                    if normal_form_term(c, system, rng=rng) != base:
                        ok = False
                        break
    report(7, ok)


def test_criterion_8_hom_algebra_lab():
    ok = True
    for a, b in [(Fraction(1), Fraction(2)), (Fraction(3), Fraction(0)),
                 (Fraction(2), Fraction(2))]:
        A = example1(a, b)
        ok = ok and check_hom_associative(A) == []
        from homoperad.homalgebra import associator

        d = associator(A, A.basis(0), A.basis(0), A.basis(2))
        ok = ok and d == [Fraction(0), Fraction(0), (a - b) * b]
    for q in [Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2), RatFunc.q()]:
        L = q_sl2(q)
        ok = ok and check_hom_jacobi(L) == [] and check_skew(L) == []
    ok = ok and check_multiplicative(q_sl2(Fraction(2))) != []
    ok = ok and check_multiplicative(q_sl2(Fraction(1))) == []

    rng = random.Random(99)
    for _ in range(50):
        n = rng.randint(2, 4)
        A = truncated_poly_algebra(n)
        image = [Fraction(0)] + [
            Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            for _ in range(n - 1)
        ]
        beta = poly_endomorphism(n, image)
        ok = ok and weak_morphism_violations(A, beta) == []
        L = commutator_algebra(yau_twist(A, beta))
        ok = ok and check_skew(L) == [] and check_hom_jacobi(L) == []
    report(8, ok)


def test_criterion_9_sigma_derivation_model():
    ok = True
    for q in (Fraction(2), Fraction(1, 3), RatFunc.q()):
        M = SigmaDerivationModel(12, q)
        for i in range(12):
            for j in range(i, 12):
                if i + j > M.N:
                    continue
                lhs = sigma_bracket(M, M.monomial(i), M.monomial(j))
                rhs = sigma_bracket(M, M.monomial(j), M.monomial(i))
                ok = ok and [x + y for x, y in zip(lhs, rhs)] == M.zero()
                for k in range(j, 12):
                    if i + j + k > M.N + 1 or j + k > M.N or i + k > M.N:
                        continue
                    d = check_six_term_jacobi(
                        M, M.monomial(i), M.monomial(j), M.monomial(k)
                    )
                    ok = ok and d == M.zero()
    report(9, ok)
