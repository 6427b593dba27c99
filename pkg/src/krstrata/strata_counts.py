"""Exact counting formulas for the stratifications.

Component counts of the almost-ordinary locus of a parahoric level type,
connected-component counts of general p-rank strata via graded
etale-multiplicative types, superspecial mass formulas in exact rational
arithmetic, orders of finite symplectic groups, and tiny brute-force
point counts of the two curve loci appearing in the supersingular
analysis.  Everything is exact: Fraction for intermediate rationals,
integers out.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInvariantError


@dataclass(frozen=True)
class ParahoricType:
    """Level type: a tuple of positive block sizes k with sum at most g."""

    k: tuple
    g: int

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(int(a) for a in self.k))
        if len(self.k) == 0:
            raise ValueError("type needs at least one block")
        if any(a < 1 for a in self.k):
            raise ValueError("block sizes must be positive")
        if self.g < 1:
            raise ValueError("genus must be positive")
        if sum(self.k) > self.g:
            raise ValueError("block sizes exceed the genus")

    @property
    def r(self):
        return len(self.k)

    def h(self, i):
        """Partial sum k_1 + ... + k_i, with h(0) = 0."""
        return sum(self.k[:i])


@dataclass(frozen=True)
class GemType:
    """Graded etale-multiplicative type: ranks m with markings tau <= m."""

    m: tuple
    tau: tuple

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(a) for a in self.m))
        object.__setattr__(self, "tau", tuple(int(a) for a in self.tau))
        if len(self.m) != len(self.tau):
            raise ValueError("m and tau must have equal length")
        if any(a < 0 for a in self.m):
            raise ValueError("m entries must be nonnegative")
        if any(t < 0 or t > a for t, a in zip(self.tau, self.m)):
            raise ValueError("tau entries must lie in [0, m]")


@dataclass(frozen=True)
class MassParams:
    p: int
    N: int
    g: int = 2

    def __post_init__(self):
        if self.N < 3:
            raise ValueError("level must be at least 3")
        if not _is_prime(self.p):
            raise ValueError("p must be prime")
        if math.gcd(self.p, self.N) != 1:
            raise ValueError("p must not divide the level")


def _is_prime(n):
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# almost-ordinary component indexing


def type_index_sets(pt):
    """Index sets I^0, ..., I^r for the almost-ordinary components.

    I(m) = {0, ..., m}.  I^0 is empty when the blocks fill the genus,
    else {0} x prod I(k_i); I^j shortens the j-th factor to I(k_j - 1).
    """
    r = pt.r
    sets = []
    if pt.h(r) == pt.g:
        sets.append(frozenset())
    else:
        sets.append(
            frozenset(
                (0,) + rest
                for rest in itertools.product(*[range(a + 1) for a in pt.k])
            )
        )
    for j in range(1, r + 1):
        ranges = [
            range(pt.k[i - 1]) if i == j else range(pt.k[i - 1] + 1)
            for i in range(1, r + 1)
        ]
        sets.append(frozenset(itertools.product(*ranges)))
    return sets

def almost_ordinary_components(pt):
    """Number of irreducible components of the p-rank g-1 stratum.

    Enumerated from the index sets and cross-checked against the closed
    form prod(k_i + 1) [eps + sum k_i/(k_i + 1)], eps = 1 iff the blocks
    do not fill the genus.
    """
    if pt.g < 2:
        raise ValueError("the almost-ordinary count needs genus at least 2")
    total = sum(len(s) for s in type_index_sets(pt))
    eps = 1 if pt.h(pt.r) < pt.g else 0
    closed = Fraction(1)
    for a in pt.k:
        closed *= a + 1
    closed *= eps + sum(Fraction(a, a + 1) for a in pt.k)
    if closed.denominator != 1 or closed.numerator != total:
        raise InternalInvariantError(
            "component enumeration disagrees with the closed form"
        )
    return total


# ---------------------------------------------------------------------------
# connected components of a general p-rank stratum


def sigma_sets(pt, f):
    """(Sigma_0, Sigma) for p-rank f.

    Sigma_0 is the set of rank tuples m with 0 <= m(i) <= k_i and
    f - (g - h(r)) <= sum m <= f; Sigma fibers over it with fiber
    prod(m(i) + 1), realized by the tau markings.
    """
    if f < 0 or f > pt.g:
        raise ValueError("p-rank must lie in [0, g]")
    slack = pt.g - pt.h(pt.r)
    sigma0 = set()
    for m in itertools.product(*[range(a + 1) for a in pt.k]):
        if f - slack <= sum(m) <= f:
            sigma0.add(m)
    sigma = set()
    for m in sigma0:
        for tau in itertools.product(*[range(a + 1) for a in m]):
            sigma.add(GemType(m, tau))
    fibered = sum(_product(a + 1 for a in m) for m in sigma0)
    if fibered != len(sigma):
        raise InternalInvariantError("gem fibration count mismatch")
    return sigma0, sigma


def _product(values):
    out = 1
    for v in values:
        out *= v
    return out


def connected_component_count(pt, f):
    """Connected components of the p-rank f stratum: |Sigma(k, f)|."""
    if pt.g < 2:
        raise ValueError("the component count needs genus at least 2")
    _, sigma = sigma_sets(pt, f)
    return len(sigma)


def gem_to_chain_type(gem, pt, f):
    """Chain type of the superspecial-style member attached to a gem.

    With a(i) the partial sums of m and b(i) = h(i) - a(i), the sorted
    distinct values b'(0) < ... < b'(r') give the type by consecutive
    differences.
    """
    r = pt.r
    if len(gem.m) != r:
        raise ValueError("gem length does not match the type")
    if any(a > k for a, k in zip(gem.m, pt.k)):
        raise ValueError("gem ranks exceed the block sizes")
    slack = pt.g - pt.h(r)
    if not (f - slack <= sum(gem.m) <= f):
        raise ValueError("gem is inconsistent with the stated p-rank")
    b_values = []
    acc = 0
    for i in range(r + 1):
        if i > 0:
            acc += gem.m[i - 1]
        b_values.append(pt.h(i) - acc)
    distinct = sorted(set(b_values))
    chain = tuple(
        distinct[i] - distinct[i - 1] for i in range(1, len(distinct))
    )
    r_prime = len(distinct) - 1
    top = distinct[-1]
    if r_prime > r or r_prime > top:
        raise InternalInvariantError("chain type outgrew the level type")
    if not (pt.h(r) - f <= top <= pt.g - f):
        raise InternalInvariantError("chain type escapes the p-rank bounds")
    return chain


# ---------------------------------------------------------------------------
# mass formulas


def sp_order(g, N):
    """Order of the rank-g symplectic similitude-one group over Z/N."""
    if N < 1:
        raise ValueError("modulus must be positive")
    if g < 1:
        raise ValueError("rank must be positive")
    order = Fraction(N ** (g * (2 * g + 1)))
    for ell in _prime_factors(N):
        for i in range(1, g + 1):
            order *= 1 - Fraction(1, ell ** (2 * i))
    if order.denominator != 1:
        raise InternalInvariantError("group order came out non-integral")
    return order.numerator


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# zeta(-1) and zeta(-3), exact
_ZETA_M1 = Fraction(-1, 12)
_ZETA_M3 = Fraction(1, 120)
_MASS_CONSTANT = Fraction(-1) * _ZETA_M1 * _ZETA_M3 / 4  # = 1/5760


def lambda_counts(mp):
    """(|Lambda|, |Lambda_{2,1,N}|): superspecial point counts, exact.

    |Lambda| carries the principal polarizations, |Lambda_{2,1,N}| the
    ones with kernel of type (p, p).  Both are the symplectic group
    order times a local factor times zeta(-1) zeta(-3)/4 up to sign, and
    must come out integral.
    """
    if mp.g != 2:
        raise ValueError("mass formulas are for genus 2")
    base = sp_order(2, mp.N) * _MASS_CONSTANT
    lam = base * (mp.p ** 2 - 1)
    lam211 = base * (mp.p - 1) * (mp.p ** 2 + 1)
    for value in (lam, lam211):
        if value.denominator != 1:
            raise InternalInvariantError("mass came out non-integral")
    return lam.numerator, lam211.numerator


_PER_STRATUM_LAMBDA = ("s0s2tau", "s0tau", "s2tau")
_PER_STRATUM_ONE = ("s0s1tau", "s1s2tau", "s2s1tau", "s1s0tau")
_PER_STRATUM_EXTERNAL = ("s0s1s0tau", "s1s0s2tau", "s2s1s2tau", "s0s2s1tau")


def supersingular_summary(mp):
    """Component counts of the supersingular locus and its strata.

    The p-rank 1 strata are irreducible, so they report 1; the ordinary
    strata counts come from outside this formula set and are reported as
    the string "external".
    """
    lam, lam211 = lambda_counts(mp)
    singular = lam211 * (mp.p + 1)
    per_stratum = {}
    for name in _PER_STRATUM_LAMBDA:
        per_stratum[name] = lam
    per_stratum["s1tau"] = lam211
    per_stratum["tau"] = singular
    for name in _PER_STRATUM_ONE:
        per_stratum[name] = 1
    for name in _PER_STRATUM_EXTERNAL:
        per_stratum[name] = "external"
    return {
        "components": lam + lam211,
        "singular_points": singular,
        "per_stratum": per_stratum,
    }


# ---------------------------------------------------------------------------
# brute-force curve loci over tiny fields

# x^2 + a1 x + a0 irreducible over F_p, as (a0, a1)
_IRRED = {2: (1, 1), 3: (1, 0), 5: (2, 0), 7: (1, 0), 11: (1, 0), 13: (2, 0)}


class _PrimeField:
    def __init__(self, p):
        self.p = p
        self.zero = 0
        self.one = 1

    def elements(self):
        return range(self.p)

    def mul(self, a, b):
        return (a * b) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def pow(self, a, k):
        return pow(a, k, self.p)


class _QuadExt:
    """F_{p^2} as pairs (a, b) = a + b x modulo a tabulated quadratic."""

    def __init__(self, p):
        if p not in _IRRED:
            raise ValueError("no tabulated quadratic for p = {0}".format(p))
        self.p = p
        self.a0, self.a1 = _IRRED[p]
        self.zero = (0, 0)
        self.one = (1, 0)

    def elements(self):
        return ((a, b) for a in range(self.p) for b in range(self.p))

    def mul(self, x, y):
        p = self.p
        a, b = x
        c, d = y
        # x^2 = -a1 x - a0
        high = b * d
        return (
            (a * c - high * self.a0) % p,
            (a * d + b * c - high * self.a1) % p,
        )

    def add(self, x, y):
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)

    def neg(self, x):
        return ((-x[0]) % self.p, (-x[1]) % self.p)

    def pow(self, x, k):
        out = self.one
        base = x
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out


def _field(p, e):
    if not _is_prime(p):
        raise ValueError("p must be prime")
    if e == 1:
        return _PrimeField(p)
    if e == 2:
        return _QuadExt(p)
    raise ValueError("only field exponents 1 and 2 are tabulated")


def _projective_line(field):
    pts = [(field.one, b) for b in field.elements()]
    pts.append((field.zero, field.one))
    return pts


def fermat_point_count(p):
    """Points [a : b] over F_{p^2} with a^{p+1} + b^{p+1} = 0."""
    field = _field(p, 2)
    count = 0
    for a, b in _projective_line(field):
        value = field.add(field.pow(a, p + 1), field.pow(b, p + 1))
        if value == field.zero:
            count += 1
    return count


def frobenius_graph_count(p, e):
    """Pairs ([a:b], [c:d]) over F_{p^e} with a^p d - b^p c = 0."""
    field = _field(p, e)
    line = _projective_line(field)
    count = 0
    for a, b in line:
        ap = field.pow(a, p)
        bp = field.pow(b, p)
        for c, d in line:
            value = field.add(field.mul(ap, d), field.neg(field.mul(bp, c)))
            if value == field.zero:
                count += 1
    return count
