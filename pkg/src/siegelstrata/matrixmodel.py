"""Explicit 2d x 2d matrix realizations: root vectors, torus cocharacters,
Levi embeddings, and generators of the parabolic coset-counting subgroups.

Everything here backs the brute-force oracles.  The conventions match the
antidiagonal form of ``arith.j_form``: for 1-indexed i < j <= d,

    e_i - e_j        |->  E_{i,j} - E_{2d+1-j, 2d+1-i}
    e_i + e_j - e_0  |->  E_{i,2d+1-j} + E_{j,2d+1-i}
    2e_i - e_0       |->  E_{i,2d+1-i}

and negative roots are the transposes.  These satisfy X^2 = 0 (so I + t*X
realizes the root subgroup) and t(X) J + J X = 0; both facts, and the torus
conjugation weight of every root vector, are verified by the test suite
before anything else trusts them.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .arith import identity_matrix, j_form, mat_inv_mod, mat_mod, mat_mul
from .errors import InputError
from .grouptheory import GroupContext, build_context, parabolic_data
from .reps import Weight


def root_matrix(d: int, root: Weight):
    """Integer nilpotent matrix spanning the root space of ``root``."""
    size = 2 * d
    m = [[0] * size for _ in range(size)]
    support = [(i, x) for i, x in enumerate(root.a) if x]  # 0-indexed coords
    if root.m0 == 0 and len(support) == 2:
        (i, xi), (j, xj) = support
        if xi == -1 and xj == 1:
            (i, xi), (j, xj) = (j, xj), (i, xi)
        if (xi, xj) != (1, -1):
            raise InputError(f"not a root: {root}")
        m[i][j] = 1
        m[size - 1 - j][size - 1 - i] = -1
    elif root.m0 == -1:
        if len(support) == 1 and support[0][1] == 2:
            i = support[0][0]
            m[i][size - 1 - i] = 1
        elif len(support) == 2 and all(x == 1 for _, x in support):
            (i, _), (j, _) = support
            m[i][size - 1 - j] = 1
            m[j][size - 1 - i] = 1
        else:
            raise InputError(f"not a root: {root}")
    elif root.m0 == 1:
        # negative long/short roots: transpose of the positive partner
        return tuple(zip(*root_matrix(d, root.neg())))
    else:
        raise InputError(f"not a root: {root}")
    return tuple(tuple(row) for row in m)


def negative_root_matrix(d: int, root: Weight):
    """Transpose realization for -root (used for symplectic generators)."""
    return tuple(zip(*root_matrix(d, root)))


def root_element(d: int, root: Weight, n: int, t: int = 1):
    """I + t * X_root reduced mod n."""
    x = root_matrix(d, root)
    size = 2 * d
    return tuple(
        tuple((int(i == j) + t * x[i][j]) % n for j in range(size))
        for i in range(size))


def torus_element(d: int, ts, c, n: int):
    """diag(t_1..t_d, c/t_d, ..., c/t_1) mod n; each t_i and c must be units."""
    size = 2 * d
    for t in list(ts) + [c]:
        if gcd(t % n, n) != 1:
            raise InputError("torus entries must be units")
    diag = list(ts) + [c * pow(ts[d - 1 - k], -1, n) for k in range(d)]
    return tuple(
        tuple((diag[i] % n) if i == j else 0 for j in range(size))
        for i in range(size))


def s_cochar_matrix(d: int, s: int, lam: int):
    """The point S_s(lam) as an exact integer matrix: diag(lam^2 I_{d-s},
    lam I_{2s}, I_{d-s}), similitude lam^2."""
    if not 0 <= s <= d - 1:
        raise InputError(f"parabolic index {s} out of range")
    diag = [lam ** 2] * (d - s) + [lam] * (2 * s) + [1] * (d - s)
    size = 2 * d
    return tuple(
        tuple(diag[i] if i == j else 0 for j in range(size)) for i in range(size))


def conjugation_weight(g_diag, x):
    """Scalar q with g x g^-1 = q * x for a diagonal integer matrix g.

    Exact over the rationals; returns None if x is not an eigenvector of the
    conjugation (which would mean the root conventions are wrong).  For
    g = S_s(lam) and x a root vector, q should be lam**pairing.
    """
    size = len(x)
    diag = [g_diag[i][i] for i in range(size)]
    ratios = set()
    for i in range(size):
        for j in range(size):
            if x[i][j]:
                ratios.add(Fraction(diag[i], diag[j]))
    if len(ratios) != 1:
        return None
    ratio = ratios.pop()
    # express as a power of lam = diag entries' base; caller passes lam
    return ratio


def embed_linear(d: int, r: int, a, n: int):
    """GL_{d-r} into the Levi of P_r: block diag(A, I_{2r}, R tA^-1 R)."""
    k = d - r
    size = 2 * d
    a = mat_mod(a, n)
    ainv = mat_inv_mod(a, n)
    # R tA^-1 R with R the antidiagonal permutation: reverse both indices.
    back = tuple(
        tuple(ainv[k - 1 - j][k - 1 - i] for j in range(k)) for i in range(k))
    g = [[0] * size for _ in range(size)]
    for i in range(k):
        for j in range(k):
            g[i][j] = a[i][j]
            g[size - k + i][size - k + j] = back[i][j]
    for i in range(k, size - k):
        g[i][i] = 1
    return tuple(tuple(row) for row in g)


def embed_gsp(d: int, r: int, b, c: int, n: int):
    """GSp_2r into the Levi of P_r: diag(c(B) I_{d-r}, B, I_{d-r})."""
    k = d - r
    size = 2 * d
    g = [[0] * size for _ in range(size)]
    for i in range(k):
        g[i][i] = c % n
        g[size - 1 - i][size - 1 - i] = 1
    for i in range(2 * r):
        for j in range(2 * r):
            g[k + i][k + j] = b[i][j] % n
    return tuple(tuple(row) for row in g)


def _units(n: int):
    return [u for u in range(1, n) if gcd(u, n) == 1]


def parabolic_generators(ctx: GroupContext, S):
    """Generators (mod n) of the finite shadow H_S of P_S(Z)Q_r(Z-hat).

    The shadow is the subgroup of GSp_2d(Z/n) that the stratum and
    double-coset counts quotient by:
      - per GL block: elementary root elements (full block-SL image) and a
        determinant -1 flip (integral GL has determinant +-1),
      - all root elements of Lie N_S,
      - the embedded GSp_2r(Z/n): symplectic root elements (positive and
        negative) plus the similitude torus diag(u I_r | u...), which also
        feeds the scalar u into the GL side, per the Levi embedding.
    Completeness of this generating set is itself under test: the closure
    order is compared with the independent order formula product.
    """
    d, n = ctx.d, ctx.n
    pd = parabolic_data(ctx, S)
    r = pd.sympRank
    gens = []
    for lo, hi in pd.blockRanges:
        for i in range(lo, hi):
            for j in range(lo, hi):
                if i != j:
                    a = [0] * d
                    a[i], a[j] = 1, -1
                    gens.append(root_element(d, Weight(tuple(a), 0), n))
        if n > 2:
            flip = [[int(i == j) for j in range(d - r)] for i in range(d - r)]
            flip[lo][lo] = n - 1
            gens.append(embed_linear(d, r, tuple(map(tuple, flip)), n))
    for root in pd.nRoots:
        gens.append(root_element(d, root, n))
    if r >= 1:
        small = build_context(r, max(ctx.n, 3), allow_large_d=True)
        for root in small.positiveRoots:
            x = root_matrix(r, root)
            xn = negative_root_matrix(r, root)
            for y in (x, xn):
                ident_plus = tuple(
                    tuple((int(i == j) + y[i][j]) % n for j in range(2 * r))
                    for i in range(2 * r))
                gens.append(embed_gsp(d, r, ident_plus, 1, n))
        for u in _units(n):
            b = tuple(
                tuple((u if i < r else 1) if i == j else 0 for j in range(2 * r))
                for i in range(2 * r))
            gens.append(embed_gsp(d, r, b, u, n))
    else:
        for u in _units(n):
            gens.append(torus_element(d, [u] * d, u, n))
    ident = identity_matrix(2 * d)
    uniq = []
    for g in gens:
        if g != ident and g not in uniq:
            uniq.append(g)
    return uniq


def linear_detpm_generators(k: int, n: int):
    """Generators of the image of GL_k(Z) in GL_k(Z/n) (det in {+-1})."""
    gens = []
    for i in range(k):
        for j in range(k):
            if i != j:
                m = [[int(a == b) for b in range(k)] for a in range(k)]
                m[i][j] = 1
                gens.append(tuple(map(tuple, m)))
    flip = [[int(a == b) for b in range(k)] for a in range(k)]
    flip[0][0] = n - 1
    gens.append(tuple(map(tuple, flip)))
    return gens


def linear_parabolic_generators(k: int, blocks, n: int):
    """Image of the block upper-triangular integral subgroup of GL_k.

    ``blocks`` is a composition of k; generators are per-block elementaries
    and flips plus the cross-block elementary roots (the unipotent radical).
    """
    if sum(blocks) != k:
        raise InputError(f"blocks {blocks} do not sum to {k}")
    gens = []
    starts = [0]
    for b in blocks:
        starts.append(starts[-1] + b)
    ranges = [(starts[i], starts[i + 1]) for i in range(len(blocks))]
    for lo, hi in ranges:
        for i in range(lo, hi):
            for j in range(lo, hi):
                if i != j:
                    m = [[int(a == b) for b in range(k)] for a in range(k)]
                    m[i][j] = 1
                    gens.append(tuple(map(tuple, m)))
        flip = [[int(a == b) for b in range(k)] for a in range(k)]
        flip[lo][lo] = n - 1
        gens.append(tuple(map(tuple, flip)))
    for bi in range(len(ranges)):
        for bj in range(bi + 1, len(ranges)):
            for i in range(*ranges[bi]):
                for j in range(*ranges[bj]):
                    m = [[int(a == b) for b in range(k)] for a in range(k)]
                    m[i][j] = 1
                    gens.append(tuple(map(tuple, m)))
    return gens
