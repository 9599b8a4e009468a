"""Root datum of GSp_2d and its Weyl group of signed permutations.

The group is taken with respect to the antidiagonal form: J has +1 on the
upper antidiagonal half and -1 on the lower, so the diagonal torus is
diag(t_1..t_d, c/t_d, ..., c/t_1) and the d^2 positive roots are

    e_i - e_j          (1 <= i < j <= d)
    e_i + e_j - e_0    (1 <= i <= j <= d)

in similitude coordinates (e_0 dual to c).  The Weyl group is the
hyperoctahedral group: permutations of the coordinates together with the
reflections t -> c/t, i.e. signed permutations with e_i -> e_0 - e_{s(i)}
on flipped coordinates.

Standard parabolic subsets S of {0..d-1} cut the Levi into GL blocks plus a
GSp_2r tail, r = min(S); this module computes those block shapes and the
root inventories of the nilpotent radicals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError, LevelError, ScopeError
from .reps import Weight

MAX_DEFAULT_GENUS = 6  # 2^d * d! grows fast; overridable via allow_large_d


@dataclass(frozen=True, order=True)
class WeylElt:
    """Signed permutation: e_i -> e_{perm[i]}, negated where signs[i] is True.

    Coordinates are 0-indexed internally; ``length`` is the type-C Coxeter
    length, i.e. the number of positive roots sent to negative ones.
    """

    perm: tuple[int, ...]
    signs: tuple[bool, ...]
    length: int

    @property
    def d(self) -> int:
        return len(self.perm)

    def apply_vector(self, v):
        """Image of a vector in symplectic coordinates (no e_0 bookkeeping)."""
        out = [0] * len(v)
        for i, x in enumerate(v):
            out[self.perm[i]] = -x if self.signs[i] else x
        return tuple(out)

    def inverse(self) -> "WeylElt":
        d = self.d
        perm = [0] * d
        signs = [False] * d
        for i in range(d):
            perm[self.perm[i]] = i
            signs[self.perm[i]] = self.signs[i]
        return WeylElt(tuple(perm), tuple(signs), self.length)

    def compose(self, other: "WeylElt") -> "WeylElt":
        """self o other (apply ``other`` first)."""
        d = self.d
        perm = tuple(self.perm[other.perm[i]] for i in range(d))
        signs = tuple(other.signs[i] ^ self.signs[other.perm[i]] for i in range(d))
        return _weyl_elt(perm, signs)

    @staticmethod
    def identity(d: int) -> "WeylElt":
        return WeylElt(tuple(range(d)), (False,) * d, 0)


@lru_cache(maxsize=None)
def _symplectic_positive_roots(d: int):
    # Symplectic (a-coordinate) vectors only; enough for inversion counting.
    roots = []
    for i in range(d):
        for j in range(i + 1, d):
            v = [0] * d
            v[i], v[j] = 1, -1
            roots.append(tuple(v))
    for i in range(d):
        for j in range(i, d):
            v = [0] * d
            v[i] += 1
            v[j] += 1
            roots.append(tuple(v))
    return tuple(roots)


def _is_negative(v) -> bool:
    for x in v:
        if x:
            return x < 0
    return False


def _weyl_elt(perm, signs) -> WeylElt:
    d = len(perm)
    length = 0
    for root in _symplectic_positive_roots(d):
        out = [0] * d
        for i, x in enumerate(root):
            if x:
                out[perm[i]] += -x if signs[i] else x
        if _is_negative(out):
            length += 1
    return WeylElt(tuple(perm), tuple(signs), length)


@lru_cache(maxsize=None)
def weyl_group(d: int) -> tuple[WeylElt, ...]:
    """All 2^d * d! signed permutations, sorted by (length, perm, signs)."""
    if not (isinstance(d, int) and d >= 1):
        raise LevelError(f"genus must be a positive integer, got {d!r}")
    if d > MAX_DEFAULT_GENUS:
        raise ScopeError(f"genus {d} exceeds the default Weyl-group guard "
                         f"({MAX_DEFAULT_GENUS}); enumerate explicitly if you mean it")
    elems = [
        _weyl_elt(perm, signs)
        for perm in itertools.permutations(range(d))
        for signs in itertools.product((False, True), repeat=d)
    ]
    elems.sort(key=lambda w: (w.length, w.perm, w.signs))
    return tuple(elems)


def longest_element(d: int) -> WeylElt:
    """-1 on every coordinate; the unique element of length d^2."""
    return _weyl_elt(tuple(range(d)), (True,) * d)


@dataclass(frozen=True)
class GroupContext:
    """Immutable combinatorial data for (GSp_2d, principal level n)."""

    d: int
    n: int
    positiveRoots: tuple[Weight, ...]
    rho: Weight
    weylOrder: int
    dimG: int
    c: int
    stratumDims: tuple[int, ...]


def build_context(d: int, n: int, allow_large_d: bool = False) -> GroupContext:
    """Validate (d, n) and assemble the root datum.

    n >= 3 is the standing neatness hypothesis (principal level structures
    are rigid only from level 3 on); d > 6 needs ``allow_large_d``.
    """
    if not (isinstance(d, int) and d >= 1):
        raise LevelError(f"genus must be a positive integer, got {d!r}")
    if not (isinstance(n, int) and n >= 3):
        raise LevelError(f"level must be an integer >= 3, got {n!r}")
    if d > MAX_DEFAULT_GENUS and not allow_large_d:
        raise ScopeError(f"genus {d} > {MAX_DEFAULT_GENUS}; pass allow_large_d=True")

    roots = []
    for i in range(d):
        for j in range(i + 1, d):
            a = [0] * d
            a[i], a[j] = 1, -1
            roots.append(Weight(tuple(a), 0))
    for i in range(d):
        for j in range(i, d):
            a = [0] * d
            a[i] += 1
            a[j] += 1
            roots.append(Weight(tuple(a), -1))
    rho = Weight(tuple(range(d, 0, -1)), 0)  # m0 normalized to 0; see dot_action
    dims = tuple((d - r) * (d + 1 - r) // 2 for r in range(d + 1))
    ctx = GroupContext(
        d=d, n=n,
        positiveRoots=tuple(roots),
        rho=rho,
        weylOrder=(2 ** d) * _factorial(d),
        dimG=2 * d * d + d + 1,
        c=d * (d + 1) // 2,
        stratumDims=dims,
    )
    assert len(ctx.positiveRoots) == d * d
    assert ctx.dimG == 2 * len(ctx.positiveRoots) + d + 1
    assert ctx.c == ctx.stratumDims[0]
    return ctx


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def normalize_parabolic_set(d: int, S) -> tuple[int, ...]:
    """Sorted tuple form of a non-empty subset of {0..d-1}."""
    try:
        items = sorted(set(int(s) for s in S))
    except TypeError:
        raise InputError(f"parabolic set must be an iterable of integers, got {S!r}")
    if not items:
        raise InputError("parabolic set must be non-empty")
    if items[0] < 0 or items[-1] > d - 1:
        raise InputError(f"parabolic indices {items} out of range for d={d}")
    return tuple(items)


@dataclass(frozen=True)
class ParabolicData:
    """Levi shape and nilpotent-radical roots of the parabolic P_S.

    ``leviBlocks`` are the GL block sizes (a composition of d-r), with the
    GSp_2r factor on the last r coordinates, r = min(S).  ``blockRanges``
    gives the half-open coordinate range of each GL block; ``gspRange`` the
    GSp one.  nRoots are the positive roots outside the Levi, uRoots those
    of the center U_r of the full radical N_r.
    """

    S: tuple[int, ...]
    r: int
    leviBlocks: tuple[int, ...]
    sympRank: int
    blockRanges: tuple[tuple[int, int], ...]
    gspRange: tuple[int, int]
    nRoots: tuple[Weight, ...]
    uRoots: tuple[Weight, ...]
    leviRoots: tuple[Weight, ...]
    leviSimpleRoots: tuple[Weight, ...]
    dimN: int
    dimU: int


@lru_cache(maxsize=None)
def _parabolic_data(d: int, S: tuple[int, ...]) -> ParabolicData:
    r = S[0]
    # Cut points of the GL part: coordinate d-s for each s in S above r.
    cuts = [0] + [d - s for s in sorted(S, reverse=True)]
    ranges = [(cuts[i], cuts[i + 1]) for i in range(len(cuts) - 1)
              if cuts[i + 1] > cuts[i]]
    blocks = tuple(hi - lo for lo, hi in ranges)
    gsp_range = (d - r, d)
    assert sum(blocks) == d - r

    def block_of(i: int):
        for b, (lo, hi) in enumerate(ranges):
            if lo <= i < hi:
                return b
        return None  # in the GSp range

    levi, nil, uu = [], [], []
    for root in build_context(d, 3, allow_large_d=True).positiveRoots:
        pos = [i for i, x in enumerate(root.a) if x]
        if root.m0 == 0:
            i, j = pos if len(pos) == 2 else (pos[0], pos[0])
            in_levi = (block_of(i) is not None and block_of(i) == block_of(j)) or (
                i >= d - r and j >= d - r)
        else:
            i, j = (pos[0], pos[0]) if len(pos) == 1 else tuple(pos)
            in_levi = i >= d - r and j >= d - r
            if i < d - r and j < d - r:
                uu.append(root)
        (levi if in_levi else nil).append(root)

    simple = []
    for lo, hi in ranges:
        for i in range(lo, hi - 1):
            a = [0] * d
            a[i], a[i + 1] = 1, -1
            simple.append(Weight(tuple(a), 0))
    for i in range(d - r, d - 1):
        a = [0] * d
        a[i], a[i + 1] = 1, -1
        simple.append(Weight(tuple(a), 0))
    if r >= 1:
        a = [0] * d
        a[d - 1] = 2
        simple.append(Weight(tuple(a), -1))

    pd = ParabolicData(
        S=S, r=r, leviBlocks=blocks, sympRank=r,
        blockRanges=tuple(ranges), gspRange=gsp_range,
        nRoots=tuple(nil), uRoots=tuple(uu),
        leviRoots=tuple(levi), leviSimpleRoots=tuple(simple),
        dimN=len(nil), dimU=len(uu),
    )
    assert pd.dimU == (d - r) * (d - r + 1) // 2
    if len(S) == 1:
        assert pd.dimN == (d - r) * (d - r + 1) // 2 + 2 * r * (d - r)
    return pd


def parabolic_data(ctx: GroupContext, S) -> ParabolicData:
    return _parabolic_data(ctx.d, normalize_parabolic_set(ctx.d, S))


def levi_weyl_order(pd: ParabolicData) -> int:
    out = (2 ** pd.sympRank) * _factorial(pd.sympRank)
    for b in pd.leviBlocks:
        out *= _factorial(b)
    return out


@lru_cache(maxsize=None)
def _kostant_reps(d: int, S: tuple[int, ...]) -> tuple[WeylElt, ...]:
    pd = _parabolic_data(d, S)
    simple_vecs = [w.a for w in pd.leviSimpleRoots]
    reps = []
    for w in weyl_group(d):
        winv = w.inverse()
        if all(not _is_negative(winv.apply_vector(v)) for v in simple_vecs):
            reps.append(w)
    reps.sort(key=lambda w: (w.length, w.perm, w.signs))
    return tuple(reps)


def kostant_reps(ctx: GroupContext, S) -> tuple[WeylElt, ...]:
    """Minimal-length representatives w with w^-1(Levi simple roots) positive.

    For dominant regular mu, these are exactly the w for which w(mu) is
    dominant regular for the Levi of P_S; there is one per coset, so their
    number is weylOrder / |W_Levi|.
    """
    return _kostant_reps(ctx.d, normalize_parabolic_set(ctx.d, S))
