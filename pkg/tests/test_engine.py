"""Truncated boundary restriction: chain terms, weighted profiles, the
intersection-complex pair, the inclusion-exclusion expansion, exact Euler
evaluation."""

import itertools
import math
from fractions import Fraction

import pytest

from siegelstrata import (Chain, ClassTerm, InputError, LeviWeight,
                          SymbolicClass, Weight, chain_bounds_for_profile,
                          chain_term, double_coset_count, euler_evaluate,
                          expansion_terms, graded_report, ic_profiles,
                          lie_n_cohomology, restrict_ic, restrict_weighted,
                          restrict_weighted_via_expansion)
from siegelstrata.reps import GradedVirtualRep, make_summand


# ---------------------------------------------------------------------------
# Chain and input validation

def test_chain_validation():
    Chain(())
    Chain(((1, 0), (0, -3)))
    Chain(((2, math.inf),))
    with pytest.raises(InputError):
        Chain(((0, 0), (1, 0)))      # indices must strictly decrease
    with pytest.raises(InputError):
        Chain(((1, 0), (1, 1)))
    with pytest.raises(InputError):
        Chain(((-1, 0),))
    with pytest.raises(InputError):
        Chain(((0, "x"),))


def test_chain_term_validates(ctx2):
    lam = Weight((0, 0), 0)
    with pytest.raises(InputError):
        chain_term(ctx2, Chain(((0, 0),)), 1, lam)     # r above a chain index
    with pytest.raises(InputError):
        chain_term(ctx2, Chain(((5, 0),)), 0, lam)
    with pytest.raises(InputError):
        chain_term(ctx2, Chain(()), 2, lam)            # r out of range
    with pytest.raises(InputError):
        restrict_weighted(ctx2, (0,), lam, 0)          # profile too short


# ---------------------------------------------------------------------------
# chain_term: frozen examples

def test_chain_term_empty_chain_d1(ctx1):
    cls = chain_term(ctx1, Chain(()), 0, Weight((0,), 0))
    assert len(cls.terms) == 1
    term = cls.terms[0]
    assert term.coefficient == 1 and term.S == (0,)
    assert [s.degree for s in term.module.summands] == [0, 1]


def test_chain_term_single_cut_d1(ctx1):
    # threshold a = 0 at index 0 keeps pairings < 0: only the degree-1 class
    cls = chain_term(ctx1, Chain(((0, 0),)), 0, Weight((0,), 0))
    assert [s.degree for s in cls.terms[0].module.summands] == [1]


def test_chain_term_infinite_threshold_d2(ctx2):
    # a = -inf imposes nothing: the full Borel module with coefficient 4
    cls = chain_term(ctx2, Chain(((1, -math.inf),)), 0, Weight((0, 0), 0))
    term = cls.terms[0]
    assert term.S == (0, 1) and term.coefficient == 4
    assert len(term.module.summands) == 8
    # a = +inf empties it
    cls = chain_term(ctx2, Chain(((1, math.inf),)), 0, Weight((0, 0), 0))
    assert cls.is_zero()


# ---------------------------------------------------------------------------
# restrict_weighted: frozen d=1 behavior

@pytest.mark.parametrize("k", range(6))
def test_d1_both_ic_profiles_identical_module(ctx1, k):
    lam = Weight((k,), 0)
    upper, lower = ic_profiles(1)
    a = restrict_weighted(ctx1, upper, lam, 0)
    b = restrict_weighted(ctx1, lower, lam, 0)
    assert a.flatten() == b.flatten()
    rows = graded_report(a)
    assert len(rows) == 1
    S, degree, levi, mult, central, sheaf, pairings = rows[0]
    assert (S, degree, mult) == ((0,), 0, 1)
    assert levi.avector == (k,) and central == k and sheaf == -k


def test_d1_plus_infinity_kills(ctx1):
    cls = restrict_weighted(ctx1, (math.inf,), Weight((2,), 0), 0)
    assert cls.is_zero()
    assert euler_evaluate(cls, ctx1) == 0


def test_d1_minus_infinity_keeps_all(ctx1):
    cls = restrict_weighted(ctx1, (-math.inf,), Weight((2,), 0), 0)
    assert [s.degree for s in cls.terms[0].module.summands] == [0, 1]


# ---------------------------------------------------------------------------
# the degeneration identity has two natural readings (which infinite
# threshold makes the cuts vacuous); both are pinned

@pytest.mark.parametrize("r", [0, 1])
def test_degeneration_formula_reading(ctx2, r):
    # profile +inf away from r (vacuous < cuts), -inf at r (vacuous >= cut):
    # the alternating sum of untruncated modules over S containing r
    lam = Weight((1, 1), 0)
    profile = [math.inf] * 2
    profile[r] = -math.inf
    got = restrict_weighted(ctx2, tuple(profile), lam, r)
    expected_terms = []
    for size in range(2 - r):
        for extra in itertools.combinations(range(r + 1, 2), size):
            S = (r,) + extra
            sign = -1 if size % 2 else 1
            expected_terms.append(ClassTerm(
                sign * double_coset_count(ctx2, r, S), S,
                lie_n_cohomology(ctx2, S, lam)))
    assert got.flatten() == SymbolicClass.build(expected_terms).flatten()


@pytest.mark.parametrize("r", [0, 1])
def test_degeneration_prose_reading(ctx2, r):
    # all thresholds -inf: every strict cut empties its module, leaving the
    # single untruncated S = {r} term
    lam = Weight((1, 1), 0)
    got = restrict_weighted(ctx2, (-math.inf, -math.inf), lam, r)
    assert len(got.terms) == 1
    term = got.terms[0]
    assert term.S == (r,) and term.coefficient == 1
    assert term.module.summands == lie_n_cohomology(ctx2, (r,), lam).summands


# ---------------------------------------------------------------------------
# monotonicity in the stratum threshold (d = 1: kept sets grow as t drops)

def test_profile_monotone_d1(ctx1):
    lam = Weight((2,), 0)
    kept = []
    for t in range(6, -7, -1):
        cls = restrict_weighted(ctx1, (t,), lam, 0)
        kept.append(set(cls.flatten()))
    for smaller, larger in zip(kept, kept[1:]):
        assert smaller <= larger
    assert kept[0] == set() and len(kept[-1]) == 2


# ---------------------------------------------------------------------------
# duality at d = 1: dual profile + dual weight give the same Euler value

@pytest.mark.parametrize("k", range(5))
def test_duality_d1_euler(ctx1, k):
    lam = Weight((k,), 0)
    dual = Weight((k,), -k)          # -w0(lam): a unchanged, m0 = -k
    for t in range(-6, 7):
        left = euler_evaluate(restrict_weighted(ctx1, (t,), lam, 0), ctx1)
        right = euler_evaluate(restrict_weighted(ctx1, (-1 - t,), dual, 0), ctx1)
        assert left == right, (k, t)


# ---------------------------------------------------------------------------
# linearity

def test_euler_linearity(ctx2):
    lam = Weight((1, 1), 0)
    a = restrict_weighted(ctx2, ic_profiles(2)[0], lam, 0)
    b = restrict_weighted(ctx2, (0, 0), lam, 0)
    ea, eb = euler_evaluate(a, ctx2), euler_evaluate(b, ctx2)
    assert euler_evaluate(a.plus(b), ctx2) == ea + eb
    assert euler_evaluate(a.scaled(-3), ctx2) == -3 * ea
    assert a.plus(a.scaled(-1)).is_zero()


def test_class_sum_over_direct_sum_of_weights(ctx1):
    # restriction of V_2 + V_4 is the sum of the restrictions, term by term
    p = (0,)
    c2 = restrict_weighted(ctx1, p, Weight((2,), 0), 0)
    c4 = restrict_weighted(ctx1, p, Weight((4,), 0), 0)
    f2, f4 = c2.flatten(), c4.flatten()
    assert not set(f2) & set(f4)
    assert c2.plus(c4).flatten() == {**f2, **f4}


# ---------------------------------------------------------------------------
# expansion

def test_expansion_terms_combinatorics():
    assert expansion_terms(0) == (((), 1),)
    assert expansion_terms(2) == (((), 1), ((1,), -1), ((2,), -1), ((1, 2), 1))
    for n in range(6):
        terms = expansion_terms(n)
        assert len(terms) == 2 ** n
        assert terms[0] == ((), 1)
        assert sum(sign for _, sign in terms) == (0 if n else 1)
        for subset, sign in terms:
            assert list(subset) == sorted(set(subset))
            assert all(1 <= i <= n for i in subset)
            assert sign == (-1) ** len(subset)
    with pytest.raises(InputError):
        expansion_terms(-1)


@pytest.mark.parametrize("r", [0, 1])
def test_expansion_assembles_restriction_d2(ctx2, r):
    profiles = [ic_profiles(2)[0], ic_profiles(2)[1], (0, 0), (-5, 2),
                (math.inf, -1), (1, -math.inf)]
    for a in [(0, 0), (1, 1), (3, 1)]:
        for m0 in (0, 2):
            lam = Weight(a, m0)
            for profile in profiles:
                direct = restrict_weighted(ctx2, profile, lam, r)
                assembled = restrict_weighted_via_expansion(ctx2, profile, lam, r)
                assert direct.flatten() == assembled.flatten()


def test_expansion_assembles_restriction_d1(ctx1):
    for k in range(4):
        for t in (-3, 0, 2, math.inf, -math.inf):
            lam = Weight((k,), 0)
            direct = restrict_weighted(ctx1, (t,), lam, 0)
            assembled = restrict_weighted_via_expansion(ctx1, (t,), lam, 0)
            assert direct.flatten() == assembled.flatten()


def test_chain_bounds_for_profile():
    lam = Weight((1, 1), 0)  # m = 2
    chain = chain_bounds_for_profile(lam, (-2, -1), (0, 1))
    assert chain.entries == ((1, 0), (0, 0))
    chain = chain_bounds_for_profile(lam, (math.inf, -math.inf), (0, 1))
    assert chain.entries == ((1, math.inf), (0, -math.inf))


# ---------------------------------------------------------------------------
# the intersection-complex pair and its frozen Euler values

def test_restrict_ic_returns_pair(ctx2):
    up, lo = restrict_ic(ctx2, Weight((1, 1), 0), 0)
    assert isinstance(up, SymbolicClass) and isinstance(lo, SymbolicClass)
    assert euler_evaluate(up, ctx2) == euler_evaluate(lo, ctx2) == Fraction(4)


def test_ic_shift_is_what_makes_the_profiles_agree(ctx2):
    # the same cut positions *without* the central-weight shift correspond to
    # profiles displaced by m = 2; those two classes disagree in Euler value,
    # which is exactly why the shifted normalization is the right one
    lam = Weight((1, 1), 0)
    raw_upper = restrict_weighted(ctx2, (-4, -3), lam, 0)   # thresholds -2,-1
    raw_lower = restrict_weighted(ctx2, (-5, -4), lam, 0)   # thresholds -3,-2
    assert euler_evaluate(raw_upper, ctx2) == Fraction(-2)
    assert euler_evaluate(raw_lower, ctx2) == Fraction(2)


def test_restrict_ic_d1_trivial_weight(ctx1):
    up, lo = restrict_ic(ctx1, Weight((0,), 0), 0)
    for cls in (up, lo):
        f = cls.flatten()
        assert len(f) == 1
        (S, degree, levi), mult = next(iter(f.items()))
        assert S == (0,) and degree == 0 and mult == 1
        assert levi.avector == (0,)
    assert euler_evaluate(up, ctx1) == 1


# ---------------------------------------------------------------------------
# euler_evaluate building blocks

def test_euler_single_gl2_term(ctx2):
    # one degree-0 summand of GL_2-dimension 5 at level 3: 5 * e_2(3) = -10
    module = GradedVirtualRep.build([make_summand(0, LeviWeight(((1, -3),), (), 2))])
    cls = SymbolicClass.build([ClassTerm(1, (0,), module)])
    assert euler_evaluate(cls, ctx2) == Fraction(-10)


def test_euler_gsp_factor_counts_dimension_only(ctx2):
    # S = (1,): Levi GL_1 x GSp_2; a GSp-block weight of dimension 3 scales
    # the term by 3 and the GL_1 factor contributes e_1 = 1
    module = GradedVirtualRep.build([make_summand(0, LeviWeight(((0,),), (2,), 0))])
    cls = SymbolicClass.build([ClassTerm(2, (1,), module)])
    assert euler_evaluate(cls, ctx2) == Fraction(6)


def test_euler_degree_sign(ctx1):
    module = GradedVirtualRep.build([make_summand(1, LeviWeight(((3,),), (), 0))])
    cls = SymbolicClass.build([ClassTerm(1, (0,), module)])
    assert euler_evaluate(cls, ctx1) == Fraction(-1)


# ---------------------------------------------------------------------------
# SymbolicClass canonical form and the report

def test_build_merges_and_drops(ctx1):
    module = lie_n_cohomology(ctx1, (0,), Weight((2,), 0))
    t = ClassTerm(1, (0,), module)
    merged = SymbolicClass.build([t, t])
    assert len(merged.terms) == 1 and merged.terms[0].coefficient == 2
    cancelled = SymbolicClass.build([t, ClassTerm(-1, (0,), module)])
    assert cancelled.terms == ()


def test_flatten_is_order_independent(ctx2):
    lam = Weight((1, 1), 0)
    cls = restrict_weighted(ctx2, (0, 0), lam, 0)
    for perm in itertools.permutations(cls.terms):
        assert SymbolicClass.build(perm).flatten() == cls.flatten()


def test_graded_report_rows(ctx2):
    cls = restrict_weighted(ctx2, ic_profiles(2)[0], Weight((1, 1), 0), 0)
    rows = graded_report(cls)
    assert len(rows) == sum(len(t.module.summands) for t in cls.terms)
    assert list(rows) == sorted(rows, key=lambda r: (r[0], r[1], r[2].avector))
    for S, degree, levi, mult, central, sheaf, pairings in rows:
        assert sheaf == -central
        assert len(pairings) == 2
        assert central == sum(levi.avector) + 2 * levi.m0
