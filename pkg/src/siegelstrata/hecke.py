"""Level-transfer (Hecke) structure on boundary strata.

For nested principal levels n | m the identity double coset K(n) 1 K(m)
induces a transfer from level-m strata to level-n strata.  Three integers
control it for a parabolic set S:

  - ``transfer_degree``: the index of the level-m principal subgroup in the
    level-n one, |GSp_2d(Z/m)| / |GSp_2d(Z/n)|;
  - ``hecke_index``: the part of that index absorbed by the linear Levi
    blocks and the nilpotent radical, (m/n)^dim N_S * prod [SL_{n_i}(Z/m) :
    SL_{n_i}(Z/n)];
  - ``boundary_fiber_count``: their quotient, the number of geometric
    points of a level-m stratum over a point of its image stratum.

At the level of coset classes (which merge the phi(m)/phi(n) components a
geometric stratum splits into under the similitude action), the fiber size
is ``reduction_fiber_count``; the two agree exactly when phi(m) = phi(n).
``kernel_shadow_count`` recomputes the class-level index literally from
generated subgroups, and ``hecke_matrix_structure`` tabulates the full
transfer matrix between the two finite class sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import (DEFAULT_CAP, GSp, SL, brute_force_group, congruence_index,
                    left_orbits, mat_mod, mat_mul, orbit_canonical, similitude,
                    subgroup_closure)
from .errors import InputError
from .grouptheory import build_context, normalize_parabolic_set, parabolic_data
from .matrixmodel import parabolic_generators


@dataclass(frozen=True)
class HeckeDatum:
    """A genus with a nested pair of principal levels n | m."""

    d: int
    n: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.d, int) and self.d >= 1):
            raise InputError(f"genus must be a positive integer, got {self.d!r}")
        if not (isinstance(self.n, int) and self.n >= 3):
            raise InputError(f"base level must be an integer >= 3, got {self.n!r}")
        if not (isinstance(self.m, int) and self.m >= self.n and self.m % self.n == 0):
            raise InputError(f"levels must satisfy n | m, got n={self.n}, m={self.m}")


def _pdata(datum: HeckeDatum, S):
    ctx = build_context(datum.d, datum.n)
    return parabolic_data(ctx, normalize_parabolic_set(datum.d, S))


def transfer_degree(datum: HeckeDatum) -> int:
    """[K(n) : K(m)] = |GSp_2d(Z/m)| / |GSp_2d(Z/n)|."""
    return congruence_index(GSp(2 * datum.d), datum.n, datum.m)


def hecke_index(datum: HeckeDatum, S) -> int:
    """(m/n)^dim N_S times the SL congruence indices of the GL Levi blocks.

    This is the degree along the directions that stay inside a single
    stratum; the GSp_2r factor is deliberately absent (its level change
    belongs to the smaller stratum variety, not to the fibers).
    """
    pd = _pdata(datum, S)
    out = (datum.m // datum.n) ** pd.dimN
    for k in pd.leviBlocks:
        out *= congruence_index(SL(k), datum.n, datum.m)
    return out


def boundary_fiber_count(datum: HeckeDatum, S) -> int:
    """Fiber size of the level map on geometric stratum points:
    transfer_degree / hecke_index, asserted to divide exactly."""
    q, rem = divmod(transfer_degree(datum), hecke_index(datum, S))
    assert rem == 0, (datum, tuple(S))
    return q


def reduction_fiber_count(datum: HeckeDatum, S) -> int:
    """Fiber size on coset classes: boundary_fiber_count divided by the
    GSp_2r congruence index (phi(m)/phi(n) when r = 0)."""
    pd = _pdata(datum, S)
    gsp_idx = congruence_index(GSp(2 * pd.sympRank), datum.n, datum.m)
    q, rem = divmod(transfer_degree(datum), hecke_index(datum, S) * gsp_idx)
    assert rem == 0, (datum, tuple(S))
    return q


def kernel_shadow_count(datum: HeckeDatum, S, cap: int = DEFAULT_CAP) -> int:
    """|H_S(m) intersect ker(mod-n reduction)|, from the literal closure.

    The level-m class-counting subgroup surjects onto the level-n one (the
    generators reduce onto generators), so this equals |H_S(m)| / |H_S(n)| =
    hecke_index * [GSp_2r(Z/m) : GSp_2r(Z/n)]; the test suite pins that.
    """
    ctx_m = build_context(datum.d, datum.m)
    gens = parabolic_generators(ctx_m, S)
    group = subgroup_closure(gens, datum.m, cap)
    n = datum.n
    return sum(1 for g in group
               if all(g[i][j] % n == (1 if i == j else 0)
                      for i in range(len(g)) for j in range(len(g))))


@dataclass(frozen=True)
class HeckeMatrixStructure:
    """Transfer-matrix support between level-m and level-n stratum classes.

    ``classes`` are the level-n class labels (canonical minimal coset
    representatives, sorted); ``entries`` are triples (i, j, count): count
    level-m classes C' with C'g in class i and C' over class j.
    """

    classes: tuple
    entries: tuple[tuple[int, int, int], ...]

    def column_totals(self) -> tuple[int, ...]:
        """Per-target-class totals; each equals the class-level fiber size."""
        totals = [0] * len(self.classes)
        for _, j, count in self.entries:
            totals[j] += count
        return tuple(totals)


def hecke_matrix_structure(datum: HeckeDatum, S, g=None,
                           cap: int = DEFAULT_CAP) -> HeckeMatrixStructure:
    """Tabulate C' -> (class of C'g at level n, class of C' at level n).

    g is an integer matrix whose reduction lies in GSp_2d(Z/m) (identity if
    omitted); right multiplication by g permutes level-m classes, and both
    coordinates of the pair are independent of the chosen representative.
    Row totals and column totals therefore both equal the class-level
    fiber size, whatever g is.
    """
    d, n, m = datum.d, datum.n, datum.m
    size = 2 * d
    if g is None:
        g = tuple(tuple(int(i == j) for j in range(size)) for i in range(size))
    g = mat_mod(g, m)
    if len(g) != size or any(len(row) != size for row in g):
        raise InputError(f"g must be a {size} x {size} matrix")
    c = similitude(g, m)
    if c is None or gcd(c, m) != 1:
        raise InputError("g must satisfy the symplectic-similitude identity "
                         "with a unit similitude factor")

    ctx_n = build_context(d, n)
    ctx_m = build_context(d, m)
    gens_n = parabolic_generators(ctx_n, S)
    gens_m = parabolic_generators(ctx_m, S)

    ambient_m = brute_force_group(GSp(size), m, cap)
    orbits_m = left_orbits(ambient_m, gens_m, m)

    ambient_n = brute_force_group(GSp(size), n, cap)
    classes = tuple(sorted(left_orbits(ambient_n, gens_n, n)))
    index_of = {rep: i for i, rep in enumerate(classes)}

    def class_index(x) -> int:
        return index_of[orbit_canonical(mat_mod(x, n), gens_n, n)]

    counts: dict[tuple[int, int], int] = {}
    for rep in orbits_m:
        key = (class_index(mat_mul(rep, g, m)), class_index(rep))
        counts[key] = counts.get(key, 0) + 1
    entries = tuple(sorted((i, j, c) for (i, j), c in counts.items()))
    return HeckeMatrixStructure(classes=classes, entries=entries)
