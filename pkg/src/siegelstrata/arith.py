"""Orders of classical groups over Z/n, congruence indices, Euler
characteristics, and brute-force enumeration oracles.

Orders are computed by CRT from the prime-power formulas

    |GL_k(Z/p^e)|  = p^{(e-1)k^2} * prod_{i=0}^{k-1} (p^k - p^i)
    |SL_k|         = |GL_k| / phi(p^e)
    |Sp_2r(Z/p^e)| = p^{(e-1)(2r^2+r)} * p^{r^2} * prod_{i=1}^{r} (p^{2i}-1)
    |GSp_2r|       = |Sp_2r| * phi(p^e)

Every closed form here is cross-examined in the test suite against
``brute_force_group``, which enumerates the groups from their defining
equations only (determinant a unit; t(g) J g = c J for the antidiagonal J).

The module also carries the generic subgroup-closure and orbit machinery
the coset-counting oracles are built from.  All matrices are tuples of row
tuples with entries reduced mod n; all arithmetic is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InputError, ScopeError

DEFAULT_CAP = 200_000
_SCAN_GUARD = 5_000_000  # raw candidate-space bound for filter-style scans


# ---------------------------------------------------------------------------
# group kinds

@dataclass(frozen=True, order=True)
class GroupKind:
    family: str  # "GL" | "SL" | "Sp" | "GSp" | "N"
    param: int   # k for GL/SL, 2r for Sp/GSp, D for N


def GL(k: int) -> GroupKind:
    return GroupKind("GL", _nonneg(k))


def SL(k: int) -> GroupKind:
    return GroupKind("SL", _nonneg(k))


def Sp(two_r: int) -> GroupKind:
    if two_r % 2:
        raise InputError(f"Sp parameter must be even, got {two_r}")
    return GroupKind("Sp", _nonneg(two_r))


def GSp(two_r: int) -> GroupKind:
    if two_r % 2:
        raise InputError(f"GSp parameter must be even, got {two_r}")
    return GroupKind("GSp", _nonneg(two_r))


def Unipotent(dim: int) -> GroupKind:
    return GroupKind("N", _nonneg(dim))


def _nonneg(k) -> int:
    if not (isinstance(k, int) and k >= 0):
        raise InputError(f"parameter must be a non-negative integer, got {k!r}")
    return k


# ---------------------------------------------------------------------------
# integer utilities

def factorint(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs here are small)."""
    if not (isinstance(n, int) and n >= 1):
        raise InputError(f"cannot factor {n!r}")
    out: dict[int, int] = {}
    p, m = 2, n
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def euler_phi(n: int) -> int:
    out = 1
    for p, e in factorint(n).items():
        out *= p ** (e - 1) * (p - 1)
    return out


def _gl_pp(k: int, p: int, e: int) -> int:
    out = p ** ((e - 1) * k * k)
    for i in range(k):
        out *= p ** k - p ** i
    return out


def _sp_pp(two_r: int, p: int, e: int) -> int:
    r = two_r // 2
    out = p ** ((e - 1) * (2 * r * r + r)) * p ** (r * r)
    for i in range(1, r + 1):
        out *= p ** (2 * i) - 1
    return out


def _order_any_level(kind: GroupKind, n: int) -> int:
    """Order over Z/n with n >= 1 (n = 1 gives the trivial group)."""
    if kind.family == "N":
        return n ** kind.param
    out = 1
    for p, e in factorint(n).items():
        phi_pp = p ** (e - 1) * (p - 1)
        if kind.family == "GL":
            out *= _gl_pp(kind.param, p, e)
        elif kind.family == "SL":
            q, rem = divmod(_gl_pp(kind.param, p, e), phi_pp)
            assert rem == 0
            out *= q if kind.param >= 1 else 1
        elif kind.family == "Sp":
            out *= _sp_pp(kind.param, p, e)
        elif kind.family == "GSp":
            out *= _sp_pp(kind.param, p, e) * phi_pp
        else:
            raise InputError(f"unknown group family {kind.family!r}")
    return out


def group_order(kind: GroupKind, n: int) -> int:
    """|kind(Z/n)| for n >= 2, multiplicative over coprime factors."""
    if not (isinstance(n, int) and n >= 2):
        raise InputError(f"modulus must be an integer >= 2, got {n!r}")
    return _order_any_level(kind, n)


def integral_image_order(k: int, n: int) -> int:
    """Order of the image of GL_k(Z) in GL_k(Z/n).

    Integral determinants are +-1, so the image is the det-in-{+-1 mod n}
    subgroup: order 2|SL_k(Z/n)| for n >= 3, |SL_k| for n <= 2, and 1 when
    k = 0.
    """
    _nonneg(k)
    if not (isinstance(n, int) and n >= 1):
        raise InputError(f"modulus must be a positive integer, got {n!r}")
    if k == 0 or n == 1:
        return 1
    sl = _order_any_level(SL(k), n)
    return 2 * sl if n >= 3 else sl


def congruence_index(kind: GroupKind, n: int, m: int) -> int:
    """|kind(Z/m)| / |kind(Z/n)| for 3 <= n | m; exact division asserted."""
    if not (isinstance(n, int) and n >= 3):
        raise InputError(f"base level must be >= 3, got {n!r}")
    if not (isinstance(m, int) and m >= n and m % n == 0):
        raise InputError(f"levels must satisfy n | m, got n={n}, m={m}")
    q, rem = divmod(group_order(kind, m), group_order(kind, n))
    assert rem == 0, (kind, n, m)
    return q


@lru_cache(maxsize=None)
def bernoulli(j: int) -> Fraction:
    """Bernoulli number B_j (B_1 = -1/2), exact."""
    if j == 0:
        return Fraction(1)
    # sum_{k=0}^{j} C(j+1, k) B_k = 0
    total = Fraction(0)
    binom = 1
    for k in range(j):
        total += binom * bernoulli(k)
        binom = binom * (j + 1 - k) // (k + 1)
    return -total / (j + 1)


def zeta_negative(i: int) -> Fraction:
    """zeta(1 - i) = -B_i / i for i >= 2 (vanishes for odd i >= 3)."""
    if not (isinstance(i, int) and i >= 2):
        raise InputError(f"need i >= 2, got {i!r}")
    return -bernoulli(i) / i


def euler_char_congruence(k: int, n: int) -> Fraction:
    """Euler characteristic of the principal level-n congruence subgroup of SL_k(Z).

    e = |SL_k(Z/n)| * prod_{i=2..k} zeta(1-i); the subgroup is torsion-free
    for n >= 3, which the formula needs.  Equals 1 for k = 1, an integer
    for k = 2, and 0 for k >= 3 (zeta(-2) = 0 kills it).
    """
    if not (isinstance(k, int) and k >= 1):
        raise InputError(f"block size must be >= 1, got {k!r}")
    if not (isinstance(n, int) and n >= 3):
        raise InputError(f"level must be >= 3 (torsion-freeness), got {n!r}")
    out = Fraction(group_order(SL(k), n)) if k >= 1 else Fraction(1)
    for i in range(2, k + 1):
        out *= zeta_negative(i)
    if k == 2:
        assert out.denominator == 1
    return out


# ---------------------------------------------------------------------------
# matrix utilities (tuples of row tuples, entries in [0, n))

def identity_matrix(size: int):
    return tuple(tuple(1 if i == j else 0 for j in range(size)) for i in range(size))

def mat_mul(a, b, n: int):
    size = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(ra[k] * cb[k] for k in range(size)) % n for cb in bt)
        for ra in a)

def mat_mod(a, n: int):
    return tuple(tuple(x % n for x in row) for row in a)

def transpose(a):
    return tuple(zip(*a))

def mat_det(a) -> int:
    """Integer determinant by Laplace expansion (sizes here are tiny)."""
    size = len(a)
    if size == 1:
        return a[0][0]
    if size == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = 0
    rest = a[1:]
    for j in range(size):
        minor = tuple(row[:j] + row[j + 1:] for row in rest)
        term = a[0][j] * mat_det(minor)
        total += term if j % 2 == 0 else -term
    return total


def mat_inv_mod(a, n: int):
    """Inverse mod n via the adjugate; requires det a unit."""
    size = len(a)
    det = mat_det(a) % n
    if gcd(det, n) != 1:
        raise InputError("matrix is not invertible modulo n")
    det_inv = pow(det, -1, n)
    if size == 1:
        return ((det_inv,),)
    cof = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            minor = tuple(row[:j] + row[j + 1:] for k, row in enumerate(a) if k != i)
            sign = -1 if (i + j) % 2 else 1
            cof[i][j] = sign * mat_det(minor)
    return tuple(
        tuple((det_inv * cof[j][i]) % n for j in range(size)) for i in range(size))


def j_form(d: int):
    """The antidiagonal symplectic form: +1 upper half, -1 lower half."""
    size = 2 * d
    m = [[0] * size for _ in range(size)]
    for i in range(d):
        m[i][size - 1 - i] = 1
        m[size - 1 - i][i] = -1
    return tuple(tuple(row) for row in m)


def similitude(g, n: int):
    """Similitude factor c with t(g) J g = c J, or None if g fails the identity."""
    size = len(g)
    d = size // 2
    j = j_form(d)
    m = mat_mul(mat_mul(transpose(g), j, n), g, n)
    c = m[0][size - 1]
    expected = tuple(tuple((c * x) % n for x in row) for row in j)
    return c if m == expected else None


# ---------------------------------------------------------------------------
# brute-force enumeration

def _unit(x: int, n: int) -> bool:
    return gcd(x % n, n) == 1


def _scan_linear(k: int, n: int, det_filter) -> list:
    if n ** (k * k) > _SCAN_GUARD:
        raise ScopeError(f"scan space {n}^{k*k} exceeds the guard {_SCAN_GUARD}")
    out = []
    rows = list(itertools.product(range(n), repeat=k))
    for flat in itertools.product(rows, repeat=k):
        if det_filter(mat_det(flat) % n):
            out.append(flat)
    return out


def _enumerate_symplectic(d: int, n: int, sim: int | None) -> list:
    """All g with t(g) J g = c J; c = sim if given, else any unit.

    Columns are filled in partner pairs (i, 2d-1-i): inside a pair the
    pairing must be c, across pairs it must vanish; everything else is free.
    """
    size = 2 * d
    if n ** size > _SCAN_GUARD // 10:
        raise ScopeError(f"column space {n}^{size} too large for backtracking")
    j = j_form(d)
    vectors = list(itertools.product(range(n), repeat=size))

    def pairing(u, v) -> int:
        # t(u) J v with the antidiagonal J: sum u_i v_{2d-1-i} (sign split at d)
        s = 0
        for i in range(d):
            s += u[i] * v[size - 1 - i] - u[size - 1 - i] * v[i]
        return s % n

    out = []
    cols: list = [None] * size

    def place_pair(k: int, c):
        if k == d:
            g = tuple(zip(*cols))  # columns -> matrix
            out.append(g)
            return
        fixed = [(i, cols[i]) for i in range(size) if cols[i] is not None]
        for u in vectors:
            if any(pairing(v, u) for _, v in fixed):
                continue
            cols[k] = u
            for v in vectors:
                if c is None:
                    cc = pairing(u, v)
                    if not _unit(cc, n):
                        continue
                else:
                    cc = c
                    if pairing(u, v) != cc % n:
                        continue
                ok = True
                for i, w in fixed:
                    if pairing(w, v):
                        ok = False
                        break
                if ok:
                    cols[size - 1 - k] = v
                    place_pair(k + 1, cc)
                    cols[size - 1 - k] = None
            cols[k] = None

    start_c = None if sim is None else sim % n
    if sim is not None and not _unit(sim, n):
        return []
    place_pair(0, start_c)
    return out


@lru_cache(maxsize=None)
def _brute_force_cached(kind: GroupKind, n: int, cap: int):
    expected = _order_any_level(kind, n)
    if expected > cap:
        raise ScopeError(
            f"|{kind.family}({kind.param}) over Z/{n}| = {expected} exceeds cap {cap}")
    fam = kind.family
    if fam == "N":
        elems = [ (v,) for v in itertools.product(range(n), repeat=kind.param) ]
    elif fam in ("GL", "SL"):
        if kind.param == 0:
            elems = [()]
        else:
            want = (lambda det: _unit(det, n)) if fam == "GL" else (
                lambda det: det % n == 1)
            elems = _scan_linear(kind.param, n, want)
    elif fam in ("Sp", "GSp"):
        if kind.param == 0:
            # GSp_0 is the similitude torus GL_1; Sp_0 is trivial.
            elems = ([ ((u,),) for u in range(1, n) if _unit(u, n) ]
                     if fam == "GSp" else [()])
        else:
            elems = _enumerate_symplectic(kind.param // 2, n,
                                          1 if fam == "Sp" else None)
    else:
        raise InputError(f"unknown group family {fam!r}")
    elems = sorted(set(elems))
    assert len(elems) == expected, (kind, n, len(elems), expected)
    return tuple(elems)


def brute_force_group(kind: GroupKind, n: int, cap: int = DEFAULT_CAP):
    """Exhaustive, duplicate-free, canonically sorted enumeration.

    The enumeration uses only the defining equations (unit determinant,
    respectively the symplectic-similitude identity); its cardinality is
    asserted against the closed-form order, so a discrepancy in either
    direction fails loudly.
    """
    if not (isinstance(n, int) and n >= 2):
        raise InputError(f"modulus must be an integer >= 2, got {n!r}")
    return _brute_force_cached(kind, n, cap)


# ---------------------------------------------------------------------------
# subgroup closures and orbits

def subgroup_closure(gens, n: int, cap: int = DEFAULT_CAP):
    """BFS closure of generator matrices under multiplication mod n."""
    gens = [mat_mod(g, n) for g in gens]
    if not gens:
        raise InputError("need at least one generator")
    size = len(gens[0])
    ident = identity_matrix(size)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mat_mul(g, x, n)
                if y not in seen:
                    if len(seen) >= cap:
                        raise ScopeError(f"subgroup closure exceeded cap {cap}")
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def left_orbits(universe, gens, n: int):
    """Partition of ``universe`` into orbits of left multiplication by <gens>.

    Returns {canonical representative (min of orbit): orbit size}.  Only
    generators are needed; a generation gap makes orbits split visibly
    rather than silently merge.
    """
    gens = [mat_mod(g, n) for g in gens]
    remaining = set(universe)
    reps: dict = {}
    while remaining:
        seed = remaining.pop()
        orbit = {seed}
        frontier = [seed]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mat_mul(g, x, n)
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        remaining -= orbit
        reps[min(orbit)] = len(orbit)
    return reps


def orbit_canonical(x, gens, n: int, cap: int = DEFAULT_CAP):
    """Minimal element of the left orbit of x (canonical class label)."""
    gens = [mat_mod(g, n) for g in gens]
    x = mat_mod(x, n)
    orbit = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for g in gens:
                z = mat_mul(g, y, n)
                if z not in orbit:
                    if len(orbit) >= cap:
                        raise ScopeError(f"orbit exceeded cap {cap}")
                    orbit.add(z)
                    nxt.append(z)
        frontier = nxt
    return min(orbit)
