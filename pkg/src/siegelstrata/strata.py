"""Boundary-stratification combinatorics of the minimal compactification.

For genus d and principal level n the boundary strata of parabolic index
r in {0..d-1} are counted by the double quotient of GSp_2d(Z/n) by the
finite shadow of P_r(Z)Q_r(Z-hat); refinements along larger parabolic sets
S (min S = r) carry the extra multiplicity card(I_S) that appears in the
stratum-restriction formula.  Every closed form here has a brute-force
companion built from subgroup closures in the matrix model.
"""

from __future__ import annotations

from functools import lru_cache

from .arith import (DEFAULT_CAP, GSp, _order_any_level, brute_force_group,
                    euler_phi, integral_image_order, left_orbits, similitude,
                    subgroup_closure)
from .errors import InputError
from .grouptheory import GroupContext, build_context, normalize_parabolic_set, parabolic_data
from .matrixmodel import (linear_detpm_generators, linear_parabolic_generators,
                          parabolic_generators)


def stratum_dims(d: int) -> tuple[int, ...]:
    """(c_0, ..., c_d) with c_r = (d-r)(d+1-r)/2: open stratum first, points last."""
    if not (isinstance(d, int) and d >= 1):
        raise InputError(f"genus must be a positive integer, got {d!r}")
    return tuple((d - r) * (d + 1 - r) // 2 for r in range(d + 1))


def ic_profiles(d: int):
    """The two threshold profiles whose weighted complexes realize the
    intersection complex: t_r = 1 + c_{d-r} - c_0 and s_r = t_r - 1,
    indexed by parabolic index r."""
    dims = stratum_dims(d)
    c0 = dims[0]
    upper = tuple(1 + dims[d - r] - c0 for r in range(d))
    lower = tuple(dims[d - r] - c0 for r in range(d))
    return upper, lower


def _strata_count_raw(d: int, n: int, r: int) -> int:
    num = _order_any_level(GSp(2 * d), n)
    dim_n = (d - r) * (d - r + 1) // 2 + 2 * r * (d - r)
    den = _order_any_level(GSp(2 * r), n) * n ** dim_n * integral_image_order(d - r, n)
    q, rem = divmod(num, den)
    assert rem == 0, (d, n, r)
    return q


def strata_count(ctx: GroupContext, r: int) -> int:
    """Number of boundary strata of parabolic index r at level n.

    |GSp_2d(Z/n)| / ( |GSp_2r(Z/n)| * n^{dim N_r} * integral_image_order(d-r, n) ):
    the denominator is the order of the finite shadow of P_r(Z)Q_r(Z-hat),
    where the GL part of an integral element has determinant +-1 and the
    similitude scaling of the linear block is already accounted by the
    GSp_2r factor.
    """
    if not (isinstance(r, int) and 0 <= r <= ctx.d - 1):
        raise InputError(f"parabolic index {r!r} out of range for d={ctx.d}")
    return _strata_count_raw(ctx.d, ctx.n, r)


def double_coset_count(ctx: GroupContext, r: int, S) -> int:
    """card(I_S): index of the P_S(Z)-image inside the P_r(Z)-image in GL_{d-r}.

    Equals integral_image_order(d-r, n) / ( n^{dim N_{l,S}} * prod_i
    integral_image_order(n_i, n) ) over the GL blocks n_i of the Levi of S.
    """
    S = normalize_parabolic_set(ctx.d, S)
    if S[0] != r:
        raise InputError(f"min(S)={S[0]} must equal the stratum index r={r}")
    pd = parabolic_data(ctx, S)
    dim_linear_radical = pd.dimN - parabolic_data(ctx, (r,)).dimN
    num = integral_image_order(ctx.d - r, ctx.n)
    den = ctx.n ** dim_linear_radical
    for b in pd.leviBlocks:
        den *= integral_image_order(b, ctx.n)
    q, rem = divmod(num, den)
    assert rem == 0, (ctx.d, ctx.n, S)
    return q


def subgroup_order_formula(ctx: GroupContext, S) -> int:
    """Order of the finite shadow H_S(n): |GSp_2r| * n^{dim N_S} * prod |GL_k(Z)-image|."""
    pd = parabolic_data(ctx, normalize_parabolic_set(ctx.d, S))
    out = _order_any_level(GSp(2 * pd.sympRank), ctx.n) * ctx.n ** pd.dimN
    for b in pd.leviBlocks:
        out *= integral_image_order(b, ctx.n)
    return out


# ---------------------------------------------------------------------------
# brute-force companions

@lru_cache(maxsize=None)
def _closure_for(d: int, n: int, S: tuple[int, ...], cap: int):
    ctx = build_context(d, n)
    gens = parabolic_generators(ctx, S)
    group = subgroup_closure(gens, n, cap)
    assert all(similitude(g, n) is not None for g in gens)
    return group


def strata_count_bruteforce(d: int, n: int, r: int,
                            cap: int = DEFAULT_CAP) -> int:
    """Coset count |GSp_2d(Z/n)| / |closure(H_r generators)|.

    Orbits of a subgroup acting by left multiplication on the full group are
    its right cosets, so the count is the index; the closure itself is an
    independent object (it only knows the generator matrices).
    """
    ambient = brute_force_group(GSp(2 * d), n, cap)
    h = _closure_for(d, n, (r,), cap)
    q, rem = divmod(len(ambient), len(h))
    assert rem == 0
    return q


def strata_orbit_partition(d: int, n: int, r: int, cap: int = DEFAULT_CAP):
    """Literal orbit partition (canonical rep -> orbit size); small cases only."""
    ambient = brute_force_group(GSp(2 * d), n, cap)
    if len(ambient) > 2_000:
        raise InputError("use strata_count_bruteforce for ambient groups this large")
    ctx = build_context(d, n)
    gens = parabolic_generators(ctx, (r,))
    return left_orbits(ambient, gens, n)


def double_coset_count_bruteforce(d: int, n: int, r: int, S,
                                  cap: int = DEFAULT_CAP) -> int:
    """Literal orbit count of the P_S(Z)-image acting on the P_r(Z)-image of GL_{d-r}."""
    S = normalize_parabolic_set(d, S)
    if S[0] != r:
        raise InputError(f"min(S)={S[0]} must equal r={r}")
    k = d - r
    ambient = subgroup_closure(linear_detpm_generators(k, n), n, cap)
    blocks = parabolic_data(build_context(d, n), S).leviBlocks
    gens = linear_parabolic_generators(k, blocks, n)
    sub = subgroup_closure(gens, n, cap)
    assert sub <= ambient
    orbits = left_orbits(ambient, gens, n)
    assert sum(orbits.values()) == len(ambient)
    assert all(size == len(sub) for size in orbits.values())
    return len(orbits)


def refinement_check_bruteforce(d: int, n: int, r: int, S,
                                cap: int = DEFAULT_CAP) -> bool:
    """Each index-r stratum refines into card(I_S) level-S cosets.

    Verified as [H_r : H_S] = card(I_S) on actual closures (H_S inside H_r),
    which is the fiber-sum identity: summing the I_S fibers over the index-r
    strata recovers the H_S-coset count.
    """
    S = normalize_parabolic_set(d, S)
    h_r = _closure_for(d, n, (r,), cap)
    h_s = _closure_for(d, n, S, cap)
    assert h_s <= h_r
    q, rem = divmod(len(h_r), len(h_s))
    assert rem == 0
    ctx = build_context(d, n)
    return q == double_coset_count(ctx, r, S)


def similitude_image_bruteforce(d: int, n: int, cap: int = DEFAULT_CAP):
    """The set of similitude factors realized by GSp_2d(Z/n); should be all units."""
    ambient = brute_force_group(GSp(2 * d), n, cap)
    values = set()
    for g in ambient:
        c = similitude(g, n)
        assert c is not None
        values.add(c)
    assert len(values) == euler_phi(n)
    return values
