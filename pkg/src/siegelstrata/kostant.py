"""Graded Levi decomposition of H*(Lie N_S, V_lambda).

For an irreducible V_lambda and a standard parabolic P_S, the cohomology of
the nilpotent radical's Lie algebra is multiplicity-free over the Levi:

    H^k(Lie N_S, V_lambda) = sum over w in W^S with length k of V^Levi_{w.lambda}

where w.lambda = w(lambda+rho)-rho is the dot action and W^S the minimal
coset representatives.  This is the exact Grothendieck-group value of the
boundary coefficient complexes, which is all the downstream calculus needs.

>>> from .grouptheory import build_context
>>> from .reps import Weight
>>> m = lie_n_cohomology(build_context(1, 3), (0,), Weight((3,), 0))
>>> [(s.degree, s.levi.avector, s.levi.m0) for s in m.summands]
[(0, (3,), 0), (1, (-5,), 4)]
"""

from __future__ import annotations

from .errors import InputError
from .grouptheory import (GroupContext, ParabolicData, kostant_reps,
                          levi_weyl_order, parabolic_data)
from .reps import (GradedVirtualRep, LeviWeight, Weight, central_weight,
                   check_dominant, dot_action, is_levi_dominant, make_summand)


def levi_split(mu: Weight, pd: ParabolicData) -> LeviWeight:
    """Reading of a torus weight as a highest weight for the Levi of P_S."""
    blocks = tuple(tuple(mu.a[lo:hi]) for lo, hi in pd.blockRanges)
    lo, hi = pd.gspRange
    return LeviWeight(blocks, tuple(mu.a[lo:hi]), mu.m0)


def lie_n_cohomology(ctx: GroupContext, S, lam: Weight) -> GradedVirtualRep:
    """The class of RGamma(Lie N_S, V_lam): one summand per Kostant representative.

    Summands are annotated with their S_s-pairings and central weight; the
    central weight equals central_weight(lam) on every summand, and each
    Levi weight is dominant for the Levi shape (both asserted).
    """
    if len(lam.a) != ctx.d:
        raise InputError(f"weight has {len(lam.a)} coordinates, expected {ctx.d}")
    check_dominant(lam)
    pd = parabolic_data(ctx, S)
    target = central_weight(lam)
    out = []
    for w in kostant_reps(ctx, S):
        mu = dot_action(w, lam, ctx.rho)
        levi = levi_split(mu, pd)
        assert is_levi_dominant(levi), (w, mu)
        summand = make_summand(w.length, levi)
        assert summand.central == target
        out.append(summand)
    module = GradedVirtualRep.build(out)
    # Dot-action orbits of a dominant lam are free, so nothing merged.
    assert len(module.summands) == ctx.weylOrder // levi_weyl_order(pd)
    return module
