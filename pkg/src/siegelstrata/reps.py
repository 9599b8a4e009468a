"""Torus weights of GSp_2d, dominance, truncation, and Weyl dimensions.

Weights live on the diagonal torus

    T = { diag(t_1, ..., t_d, c*t_d^-1, ..., c*t_1^-1) }

of the symplectic similitude group: the weight (a_1..a_d; m0) sends the
point above to t_1^a_1 * ... * t_d^a_d * c^m0.  The center {x * Id} acts
through x^(a_1+...+a_d+2*m0), which ``central_weight`` returns.

For each parabolic index s in {0..d-1} there is a one-parameter subgroup
S_s(x) = diag(x^2 I_{d-s}, x I_s | x I_s, x^2 ... ) acting by x^2 on the
first d-s torus coordinates, x on the remaining s, and x^2 on the
similitude coordinate.  ``torus_pairing`` pairs a weight with S_s; keeping
or discarding irreducible Levi constituents by these integers is the whole
truncation calculus used downstream.

>>> central_weight(Weight((1, 0), 0))
1
>>> torus_pairing(Weight((2, 0), -1), 1)
2
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError

# Truncation bounds live in Z union {-inf, +inf}; CPython compares int
# with float('inf') exactly, so mixed comparisons below are safe.
Bound = int | float


def _check_bound(b: Bound) -> Bound:
    if isinstance(b, bool) or not (isinstance(b, int) or b in (math.inf, -math.inf)):
        raise InputError(f"threshold must be an integer or +/-inf, got {b!r}")
    return b


@dataclass(frozen=True, order=True)
class Weight:
    """A character (a_1..a_d; m0) of the diagonal torus, m0 the similitude exponent."""

    a: tuple[int, ...]
    m0: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))

    @property
    def d(self) -> int:
        return len(self.a)

    def add(self, other: "Weight") -> "Weight":
        return Weight(tuple(x + y for x, y in zip(self.a, other.a)), self.m0 + other.m0)

    def sub(self, other: "Weight") -> "Weight":
        return Weight(tuple(x - y for x, y in zip(self.a, other.a)), self.m0 - other.m0)

    def neg(self) -> "Weight":
        return Weight(tuple(-x for x in self.a), -self.m0)


def central_weight(mu: Weight) -> int:
    """Exponent of the central action: x*Id acts by x^(sum a_i + 2 m0)."""
    return sum(mu.a) + 2 * mu.m0


def torus_pairing(mu: Weight, s: int) -> int:
    """Pairing of mu with the cocharacter S_s, s a parabolic index in {0..d-1}.

    S_s feeds x^2 into the first d-s torus coordinates, x into the last s,
    and x^2 into the similitude coordinate.
    """
    d = mu.d
    if not (isinstance(s, int) and 0 <= s <= d - 1):
        raise InputError(f"parabolic index s={s!r} out of range for d={d}")
    cut = d - s
    return 2 * sum(mu.a[:cut]) + sum(mu.a[cut:]) + 2 * mu.m0


def is_dominant(mu: Weight) -> bool:
    """Dominance for GSp_2d: a_1 >= a_2 >= ... >= a_d >= 0 (m0 unconstrained)."""
    a = mu.a
    return all(a[i] >= a[i + 1] for i in range(len(a) - 1)) and (not a or a[-1] >= 0)


def check_dominant(mu: Weight) -> Weight:
    if not is_dominant(mu):
        raise InputError(f"weight {mu.a};{mu.m0} is not dominant for GSp")
    return mu


def dot_action(w, lam: Weight, rho: Weight) -> Weight:
    """w(lam + rho) - rho for a signed permutation w.

    w sends e_i to e_{w.perm[i]} when w.signs[i] is False and to
    e_0 - e_{w.perm[i]} when True (the similitude-compatible reflection of a
    torus coordinate t -> c/t).  Everything is integral; the central weight
    of the result equals that of lam because e_0 is Weyl-invariant and rho
    is normalized with m0 = 0.
    """
    shifted = lam.add(rho)
    a = [0] * len(shifted.a)
    m0 = shifted.m0
    for i, x in enumerate(shifted.a):
        if w.signs[i]:
            a[w.perm[i]] = -x
            m0 += x
        else:
            a[w.perm[i]] = x
    return Weight(tuple(a), m0).sub(rho)


@dataclass(frozen=True, order=True)
class LeviWeight:
    """Highest weight for a Levi GL_{n_1} x ... x GL_{n_k} x GSp_2r.

    ``blocks`` are the GL-block coordinate vectors in order, ``gsp`` the
    GSp-block coordinates; concatenated they recover the full torus
    coordinate vector (a_1..a_d), with ``m0`` the similitude exponent.
    """

    blocks: tuple[tuple[int, ...], ...]
    gsp: tuple[int, ...]
    m0: int = 0

    @property
    def shape(self) -> tuple[tuple[int, ...], int]:
        return tuple(len(b) for b in self.blocks), len(self.gsp)

    @property
    def avector(self) -> tuple[int, ...]:
        flat: list[int] = []
        for b in self.blocks:
            flat.extend(b)
        flat.extend(self.gsp)
        return tuple(flat)

    def as_weight(self) -> Weight:
        return Weight(self.avector, self.m0)


def is_levi_dominant(mu: LeviWeight) -> bool:
    """Each GL block weakly decreasing; GSp block weakly decreasing with last entry >= 0."""
    for b in mu.blocks:
        if any(b[i] < b[i + 1] for i in range(len(b) - 1)):
            return False
    g = mu.gsp
    if any(g[i] < g[i + 1] for i in range(len(g) - 1)):
        return False
    if g and g[-1] < 0:
        return False
    return True


def _gl_dim(b: Sequence[int]) -> Fraction:
    # prod_{i<j} (b_i - b_j + j - i) / (j - i); translation invariant.
    out = Fraction(1)
    k = len(b)
    for i in range(k):
        for j in range(i + 1, k):
            out *= Fraction(b[i] - b[j] + j - i, j - i)
    return out

def _gsp_dim(g: Sequence[int]) -> Fraction:
    # Type C_r: with l = g + (r, r-1, ..., 1) and m = (r, ..., 1),
    # dim = prod_{i<j} (l_i^2 - l_j^2)/(m_i^2 - m_j^2) * prod_i l_i/m_i.
    r = len(g)
    l = [g[i] + (r - i) for i in range(r)]
    m = [r - i for i in range(r)]
    out = Fraction(1)
    for i in range(r):
        out *= Fraction(l[i], m[i])
        for j in range(i + 1, r):
            out *= Fraction(l[i] ** 2 - l[j] ** 2, m[i] ** 2 - m[j] ** 2)
    return out


def weyl_dim(mu: LeviWeight) -> int:
    """Dimension of the Levi irreducible with highest weight mu.

    Product of the GL_k hook-style factors per block and the type-C formula
    for the GSp block; the similitude exponent does not enter.
    """
    if not is_levi_dominant(mu):
        raise InputError(f"{mu} is not dominant for its Levi shape")
    val = _gsp_dim(mu.gsp)
    for b in mu.blocks:
        val *= _gl_dim(b)
    assert val.denominator == 1 and val > 0
    return int(val)


@dataclass(frozen=True, order=True)
class Summand:
    """One graded piece: a Levi irreducible with a degree and bookkeeping.

    ``pairings[s]`` is the S_s-pairing of the underlying torus weight and
    ``central`` its central weight; ``sheaf_weight`` (-central) is carried
    as purity bookkeeping only and never used in arithmetic.
    """

    degree: int
    levi: LeviWeight
    mult: int
    pairings: tuple[int, ...]
    central: int

    @property
    def sheaf_weight(self) -> int:
        return -self.central


def make_summand(degree: int, levi: LeviWeight, mult: int = 1) -> Summand:
    w = levi.as_weight()
    pairings = tuple(torus_pairing(w, s) for s in range(w.d))
    return Summand(degree, levi, mult, pairings, central_weight(w))


@dataclass(frozen=True)
class GradedVirtualRep:
    """Integer combination of (degree, Levi highest weight) pairs, canonically sorted."""

    summands: tuple[Summand, ...]

    @staticmethod
    def build(summands: Iterable[Summand]) -> "GradedVirtualRep":
        merged: dict[tuple, Summand] = {}
        for s in summands:
            key = (s.degree, s.levi)
            if key in merged:
                old = merged[key]
                merged[key] = Summand(s.degree, s.levi, old.mult + s.mult,
                                      s.pairings, s.central)
            else:
                merged[key] = s
        kept = [s for s in merged.values() if s.mult != 0]
        kept.sort(key=lambda s: (s.degree, s.levi.avector, s.levi.m0))
        return GradedVirtualRep(tuple(kept))

    def is_zero(self) -> bool:
        return not self.summands

    def degrees(self) -> tuple[int, ...]:
        return tuple(s.degree for s in self.summands)

    def euler_dim(self) -> int:
        return sum((-1) ** s.degree * s.mult * weyl_dim(s.levi) for s in self.summands)

    def scaled(self, k: int) -> "GradedVirtualRep":
        return GradedVirtualRep.build(
            Summand(s.degree, s.levi, k * s.mult, s.pairings, s.central)
            for s in self.summands)

    def plus(self, other: "GradedVirtualRep") -> "GradedVirtualRep":
        return GradedVirtualRep.build(self.summands + other.summands)


_MODES = ("<", ">=")


def truncate(module: GradedVirtualRep,
             conds: Iterable[tuple[int, Bound, str]]) -> GradedVirtualRep:
    """Keep the summands whose S_s-pairings satisfy every condition.

    Each condition is (s, bound, mode) with mode "<" or ">=".  S_s is
    central in the Levi of any parabolic containing index s, so the pairing
    of the highest weight decides the whole irreducible.
    """
    conds = list(conds)
    for s, bound, mode in conds:
        _check_bound(bound)
        if mode not in _MODES:
            raise InputError(f"truncation mode must be one of {_MODES}, got {mode!r}")
    kept = []
    for summand in module.summands:
        ok = True
        for s, bound, mode in conds:
            if not (0 <= s < len(summand.pairings)):
                raise InputError(f"parabolic index {s} out of range")
            p = summand.pairings[s]
            if mode == "<":
                ok = p < bound
            else:
                ok = p >= bound
            if not ok:
                break
        if ok:
            kept.append(summand)
    return GradedVirtualRep(tuple(kept))


def global_weight_split(v: Iterable[tuple[Weight, int]], t: Bound):
    """Split (weight, multiplicity) pairs by central weight < t versus >= t."""
    _check_bound(t)
    lower, upper = [], []
    for lam, mult in v:
        check_dominant(lam)
        (lower if central_weight(lam) < t else upper).append((lam, mult))
    return lower, upper
