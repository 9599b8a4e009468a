"""Restriction of weight-truncated complexes to boundary strata.

The class of the restriction to the index-r stratum of the weight-w
truncation of Rj_* V_lambda is an alternating sum over parabolic subsets
S containing r: each S contributes card(I_S) copies of the Lie-algebra
cohomology of N_S cut by torus-pairing thresholds (>= at r, < at the other
indices of S), with sign (-1)^(|S|-1).  Intersection-complex restrictions
are the same sums at the two adjacent dimension profiles.

``SymbolicClass`` is the value type: a formal integer combination of
(parabolic set, graded Levi module) terms.  ``flatten`` is its canonical
form, so two differently-assembled classes compare exactly.  The chain
expansion (one unsigned truncation per threshold subset) re-derives the
same class along a different code path; the test suite pins both the
agreement and frozen Euler evaluations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import euler_char_congruence
from .errors import InputError
from .grouptheory import GroupContext, normalize_parabolic_set, parabolic_data
from .kostant import lie_n_cohomology
from .reps import (Bound, GradedVirtualRep, LeviWeight, Weight, _check_bound,
                   central_weight, torus_pairing, truncate, weyl_dim)
from .strata import double_coset_count, ic_profiles


@dataclass(frozen=True)
class Chain:
    """Truncation thresholds (s_1, a_1), ..., (s_k, a_k), s_i strictly decreasing.

    Each pair cuts by the S_{s_i}-pairing; a_i lives in Z union {+-inf}.
    The empty chain is allowed and means no truncation.
    """

    entries: tuple[tuple[int, Bound], ...]

    def __post_init__(self):
        entries = tuple((int(s), _check_bound(a)) for s, a in self.entries)
        for (s1, _), (s2, _) in zip(entries, entries[1:]):
            if s1 <= s2:
                raise InputError(f"chain indices must strictly decrease, got {entries}")
        if entries and entries[-1][0] < 0:
            raise InputError(f"chain indices must be >= 0, got {entries}")
        object.__setattr__(self, "entries", entries)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.entries)


@dataclass(frozen=True)
class ClassTerm:
    """coefficient * (graded Levi module supported on the S-boundary)."""

    coefficient: int
    S: tuple[int, ...]
    module: GradedVirtualRep


def _term_key(t: ClassTerm):
    return (t.S,
            tuple((s.degree, s.levi.avector, s.levi.m0, s.mult)
                  for s in t.module.summands),
            t.coefficient)


@dataclass(frozen=True)
class SymbolicClass:
    """Formal integer combination of ClassTerms, canonically ordered."""

    terms: tuple[ClassTerm, ...]

    @staticmethod
    def build(terms) -> "SymbolicClass":
        merged: dict = {}
        for t in terms:
            key = (t.S, t.module)
            merged[key] = merged.get(key, 0) + t.coefficient
        kept = [ClassTerm(c, S, module)
                for (S, module), c in merged.items()
                if c != 0 and module.summands]
        kept.sort(key=_term_key)
        return SymbolicClass(tuple(kept))

    def flatten(self) -> dict[tuple[tuple[int, ...], int, LeviWeight], int]:
        """Canonical map (S, degree, Levi weight) -> total multiplicity."""
        out: dict = {}
        for t in self.terms:
            for s in t.module.summands:
                key = (t.S, s.degree, s.levi)
                val = out.get(key, 0) + t.coefficient * s.mult
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        return out

    def is_zero(self) -> bool:
        return not self.flatten()

    def scaled(self, k: int) -> "SymbolicClass":
        if k == 0:
            return SymbolicClass(())
        return SymbolicClass.build(
            ClassTerm(k * t.coefficient, t.S, t.module) for t in self.terms)

    def plus(self, other: "SymbolicClass") -> "SymbolicClass":
        return SymbolicClass.build(self.terms + other.terms)


def _check_profile(d: int, profile) -> tuple[Bound, ...]:
    profile = tuple(profile)
    if len(profile) != d:
        raise InputError(
            f"profile needs one threshold per parabolic index: expected {d}, "
            f"got {len(profile)}")
    return tuple(_check_bound(p) for p in profile)


def _check_r(d: int, r: int) -> int:
    if not (isinstance(r, int) and 0 <= r <= d - 1):
        raise InputError(f"stratum index {r!r} out of range for d={d}")
    return r


def chain_term(ctx: GroupContext, chain: Chain, r: int, lam: Weight) -> SymbolicClass:
    """Unsigned building block: card(I_S) * truncation of H*(Lie N_S, V_lam).

    S is the chain support together with r; chain indices below r are
    rejected (the stratum must sit under every cut).  Each chain pair
    (s, a) keeps the Levi constituents whose S_s-pairing is
    < -a + s(s+1)/2; a threshold of -inf imposes nothing, one of +inf
    kills the term.
    """
    _check_r(ctx.d, r)
    if not isinstance(chain, Chain):
        chain = Chain(tuple(chain))
    for s, _ in chain.entries:
        if s > ctx.d - 1:
            raise InputError(f"chain index {s} outside [{r}, {ctx.d - 1}]")
        if r > s:
            raise InputError(
                f"stratum {r} exceeds chain index {s}: cuts must sit at or above it")
    S = normalize_parabolic_set(ctx.d, set(chain.indices) | {r})
    conds = [(s, -a + s * (s + 1) // 2, "<") for s, a in chain.entries]
    module = truncate(lie_n_cohomology(ctx, S, lam), conds)
    return SymbolicClass.build(
        [ClassTerm(double_coset_count(ctx, r, S), S, module)])


def restrict_weighted(ctx: GroupContext, profile, lam: Weight,
                      r: int) -> SymbolicClass:
    """Class of the restriction to the index-r stratum of the weight-truncated
    direct image, at truncation profile (one bound per parabolic index).

    Sum over S = {r} + extras, sign (-1)^(|S|-1), coefficient card(I_S);
    the constituents kept are those whose S_r-pairing is >= profile[r] + m
    and whose S_s-pairing is < profile[s] + m for the extra indices, where
    m is the central weight of lam (the pairings of a weight-w constituent
    sit m above the profile normalization, which is stated for the
    trivial-central-character slice).
    """
    _check_r(ctx.d, r)
    profile = _check_profile(ctx.d, profile)
    m = central_weight(lam)
    terms = []
    for size in range(ctx.d - r):
        for extra in itertools.combinations(range(r + 1, ctx.d), size):
            S = (r,) + extra
            conds = [(r, profile[r] + m, ">=")]
            conds += [(s, profile[s] + m, "<") for s in extra]
            module = truncate(lie_n_cohomology(ctx, S, lam), conds)
            sign = -1 if size % 2 else 1
            terms.append(
                ClassTerm(sign * double_coset_count(ctx, r, S), S, module))
    return SymbolicClass.build(terms)


def restrict_ic(ctx: GroupContext, lam: Weight,
                r: int) -> tuple[SymbolicClass, SymbolicClass]:
    """Restriction of the intersection complex, one class per cut profile.

    Returns the (upper, lower) pair: the middle-perversity truncation is
    pinched between two adjacent dimension profiles, and the two resulting
    classes must agree in Euler-mode evaluation (the caller checks; the
    acceptance suite pins the equality).
    """
    upper, lower = ic_profiles(ctx.d)
    return (restrict_weighted(ctx, upper, lam, r),
            restrict_weighted(ctx, lower, lam, r))


def chain_bounds_for_profile(lam: Weight, profile, indices) -> Chain:
    """Chain whose literal thresholds reproduce the shifted profile cuts:
    a_s = s(s+1)/2 - profile[s] - m, so that -a_s + s(s+1)/2 = profile[s] + m."""
    m = central_weight(lam)
    entries = []
    for s in sorted(set(indices), reverse=True):
        p = _check_bound(profile[s])
        if p == math.inf:
            a: Bound = -math.inf
        elif p == -math.inf:
            a = math.inf
        else:
            a = s * (s + 1) // 2 - p - m
        entries.append((s, a))
    return Chain(tuple(entries))


def expansion_terms(numStrata: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Inclusion-exclusion support for truncation over ``numStrata`` cuts:
    every increasing subset (n_1 < ... < n_q) of {1..numStrata}, paired with
    its sign (-1)^q.  2^numStrata terms, ordered by (size, lexicographic);
    the empty subset comes first with sign +1.
    """
    if not (isinstance(numStrata, int) and numStrata >= 0):
        raise InputError(f"numStrata must be a non-negative integer, got {numStrata!r}")
    out = []
    for size in range(numStrata + 1):
        sign = -1 if size % 2 else 1
        for subset in itertools.combinations(range(1, numStrata + 1), size):
            out.append((subset, sign))
    return tuple(out)


def restrict_weighted_via_expansion(ctx: GroupContext, profile, lam: Weight,
                                    r: int) -> SymbolicClass:
    """Same class as ``restrict_weighted``, assembled from chain terms only.

    The cuts strictly above r expand through ``expansion_terms`` (subset
    element i names parabolic index r + i); the >= cut at r itself expands
    through [w_{>=t} X] = [X] - [w_{<t} X].
    """
    _check_r(ctx.d, r)
    profile = _check_profile(ctx.d, profile)
    total = SymbolicClass(())
    for subset, sign in expansion_terms(ctx.d - 1 - r):
        extras = tuple(r + i for i in subset)
        plain = chain_bounds_for_profile(lam, profile, extras)
        with_r = chain_bounds_for_profile(lam, profile, extras + (r,))
        part = chain_term(ctx, plain, r, lam).plus(
            chain_term(ctx, with_r, r, lam).scaled(-1))
        total = total.plus(part.scaled(sign))
    return total


def euler_evaluate(cls: SymbolicClass, ctx: GroupContext) -> Fraction:
    """Exact Euler evaluation against the level-n congruence subgroups.

    Each (S, degree, Levi weight) entry contributes

        total * (-1)^degree * dim(V) * prod over GL blocks k of e_k

    with e_k the Euler characteristic of the principal level-n congruence
    subgroup of SL_k(Z); the GSp factor of the Levi enters through the
    dimension only (its own arithmetic quotient is the smaller stratum, not
    a finite group).  Blocks of size >= 3 kill their terms since their
    congruence Euler characteristic vanishes.
    """
    total = Fraction(0)
    for (S, degree, levi), mult in sorted(
            cls.flatten().items(),
            key=lambda kv: (kv[0][0], kv[0][1], kv[0][2].avector, kv[0][2].m0)):
        factor = Fraction(1)
        for k in parabolic_data(ctx, S).leviBlocks:
            factor *= euler_char_congruence(k, ctx.n)
        sign = -1 if degree % 2 else 1
        total += mult * sign * weyl_dim(levi) * factor
    return total


def graded_report(cls: SymbolicClass):
    """Flat rows (S, degree, Levi weight, mult, central weight, sheaf weight,
    pairings), sorted; one row per surviving (S, degree, weight) entry.

    The sheaf weight is minus the central weight; pairings lists the
    S_s-pairing of the weight for every s in 0..d-1.
    """
    rows = []
    for (S, degree, levi), mult in cls.flatten().items():
        w = levi.as_weight()
        central = central_weight(w)
        pairings = tuple(torus_pairing(w, s) for s in range(len(w.a)))
        rows.append((S, degree, levi, mult, central, -central, pairings))
    rows.sort(key=lambda row: (row[0], row[1], row[2].avector, row[2].m0))
    return tuple(rows)
