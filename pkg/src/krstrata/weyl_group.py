"""Exact arithmetic in the extended affine Weyl group of GSp_2n.

Elements are pairs x = t_nu w_sigma of a translation cocharacter nu and
a finite Weyl permutation sigma, acting on Z^2n by v |-> w.v + nu with
(w.v)_{sigma(i)} = v_i.  The finite Weyl group W consists of the
permutations of {1,...,2n} commuting with theta(i) = 2n+1-i; the
cocharacter lattice is {u : u_i + u_{2n+1-i} constant}, the constant
being the similitude.

The module provides composition, inversion, the affine action, the
Iwahori-Matsumoto length via root counting over the type-C positive
system, the splitting W~ = W_aff x Omega (Omega generated by tau, an
infinite cyclic group detected by the similitude), Bruhat order by the
descent recursion, reduced words, Hasse diagrams, and canonical text /
JSON / DOT serialization.

Everything is immutable; all operations are pure functions.  The only
caches are lru_cache memos on hashable values.
"""

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class ExtendedAffineElement:
    """x = t_nu w_sigma; sigma is stored 0-based, sigma[i] = image of i."""

    nu: tuple
    sigma: tuple

    def __post_init__(self):
        object.__setattr__(self, "nu", tuple(int(a) for a in self.nu))
        object.__setattr__(self, "sigma", tuple(int(a) for a in self.sigma))
        size = len(self.nu)
        if size == 0 or size % 2 or len(self.sigma) != size:
            raise ValueError("nu and sigma must have equal even length 2n")
        if sorted(self.sigma) != list(range(size)):
            raise ValueError("sigma is not a permutation")
        for i in range(size):
            # theta(i) = 2n-1-i (0-based); W is the theta-centralizer
            if self.sigma[size - 1 - i] != size - 1 - self.sigma[i]:
                raise ValueError("sigma does not commute with theta")
        pair = self.nu[0] + self.nu[size - 1]
        for i in range(size // 2):
            if self.nu[i] + self.nu[size - 1 - i] != pair:
                raise ValueError("nu is not in the cocharacter lattice")

    @property
    def n(self):
        return len(self.nu) // 2

    @property
    def similitude(self):
        return self.nu[0] + self.nu[-1]


@dataclass(frozen=True)
class ReducedWord:
    """Word x = s_{letters[0]} ... s_{letters[-1]} . tau^omega_power."""

    letters: tuple
    omega_power: int


class GroupContext:
    """Generators and root data for one rank; build via make_context."""

    def __init__(self, n):
        size = 2 * n
        self.n = n
        self.theta = tuple(size - 1 - i for i in range(size))
        self.mu = (1,) * n + (0,) * n
        self.standard_vectors = tuple(
            (0,) * (size - i) + (1,) * i for i in range(size + 1)
        )
        self.identity = ExtendedAffineElement((0,) * size, tuple(range(size)))
        self.simple_reflections = tuple(self._build_simple(i) for i in range(n + 1))
        tau_sigma = tuple((i + n) % size for i in range(size))
        self.omega_generator = ExtendedAffineElement((0,) * n + (1,) * n, tau_sigma)
        self._init_roots()

    def _build_simple(self, i):
        size = 2 * self.n
        nu = [0] * size
        sigma = list(range(size))
        if i == 0:
            # affine reflection in the wall 1 + u_1 >= u_2n
            nu[0] = -1
            nu[size - 1] = 1
            sigma[0], sigma[size - 1] = sigma[size - 1], sigma[0]
        elif i == self.n:
            sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
        else:
            sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
            j = size - i
            sigma[j - 1], sigma[j] = sigma[j], sigma[j - 1]
        return ExtendedAffineElement(tuple(nu), tuple(sigma))

    def _init_roots(self):
        # Positive roots of the finite type-C system, in the convention
        # where mu = (1^n, 0^n) is anti-dominant.  Each root is stored as
        # the theta-antisymmetrized vector d with <lam, alpha> = d.lam/2,
        # which is well defined on the whole cocharacter lattice and is
        # permuted coordinatewise by W.  Alongside each root we keep the
        # reflection permutation and the coroot, for cover checks.
        n = self.n
        size = 2 * n
        roots = []

        def add(d, swaps, coroot):
            sigma = list(range(size))
            for a, b in swaps:
                sigma[a], sigma[b] = sigma[b], sigma[a]
            roots.append((tuple(d), tuple(sigma), tuple(coroot)))

        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                # eps_j - eps_i
                d = [0] * size
                d[j - 1] += 1
                d[size - i] += 1
                d[i - 1] -= 1
                d[size - j] -= 1
                cr = [0] * size
                cr[j - 1], cr[i - 1] = 1, -1
                cr[size - j], cr[size - i] = -1, 1
                add(d, [(i - 1, j - 1), (size - j, size - i)], cr)
                # c - eps_i - eps_j
                d = [0] * size
                d[size - i] += 1
                d[size - j] += 1
                d[i - 1] -= 1
                d[j - 1] -= 1
                cr = [0] * size
                cr[size - i], cr[size - j] = 1, 1
                cr[i - 1], cr[j - 1] = -1, -1
                add(d, [(i - 1, size - j), (j - 1, size - i)], cr)
        for i in range(1, n + 1):
            # c - 2 eps_i (long root)
            d = [0] * size
            d[size - i] += 2
            d[i - 1] -= 2
            cr = [0] * size
            cr[size - i], cr[i - 1] = 1, -1
            add(d, [(i - 1, size - i)], cr)

        self.positive_roots = tuple(r[0] for r in roots)
        self._positive_set = frozenset(self.positive_roots)
        self.reflection_table = tuple((r[1], r[2]) for r in roots)


@lru_cache(maxsize=None)
def make_context(g):
    if g < 1:
        raise ValueError("genus must be at least 1")
    return GroupContext(g)


def _ctx_of(x):
    return make_context(x.n)


def identity_element(g):
    return make_context(g).identity


def compose(x, y):
    """Group product x.y, so that act(compose(x,y), v) = act(x, act(y, v))."""
    if len(x.nu) != len(y.nu):
        raise ValueError("elements live in different groups")
    size = len(x.nu)
    sigma = tuple(x.sigma[y.sigma[i]] for i in range(size))
    nu = list(x.nu)
    for i in range(size):
        nu[x.sigma[i]] += y.nu[i]
    return ExtendedAffineElement(tuple(nu), sigma)


def inverse(x):
    size = len(x.nu)
    sigma = [0] * size
    for i in range(size):
        sigma[x.sigma[i]] = i
    nu = tuple(-x.nu[x.sigma[j]] for j in range(size))
    return ExtendedAffineElement(nu, tuple(sigma))


def element_power(x, k):
    if k < 0:
        return element_power(inverse(x), -k)
    out = make_context(x.n).identity
    for _ in range(k):
        out = compose(out, x)
    return out


def act(x, v):
    """The affine action w_sigma . v + nu on integer vectors."""
    v = tuple(v)
    size = len(x.nu)
    if len(v) != size:
        raise ValueError("vector length mismatch")
    out = [0] * size
    for i in range(size):
        out[x.sigma[i]] = v[i]
    return tuple(out[j] + x.nu[j] for j in range(size))


def translation(nu):
    """The pure translation t_nu."""
    return ExtendedAffineElement(tuple(nu), tuple(range(len(nu))))


# ---------------------------------------------------------------------------
# length and the Omega splitting


@lru_cache(maxsize=None)
def length(x):
    """Iwahori-Matsumoto length of x = t_nu w over the affine generators.

    l(t_nu w) = sum over positive roots alpha of |<nu, alpha>| when
    w^-1(alpha) is positive, and of |<nu, alpha> - 1| when negative.
    """
    ctx = _ctx_of(x)
    total = 0
    for d in ctx.positive_roots:
        pairing = sum(dk * nk for dk, nk in zip(d, x.nu)) // 2
        pulled = tuple(d[x.sigma[j]] for j in range(len(d)))
        if pulled in ctx._positive_set:
            total += abs(pairing)
        else:
            total += abs(pairing - 1)
    return total


def decompose_omega(x):
    """Split x = w . tau^k with w in the affine Weyl group; k is unique."""
    ctx = _ctx_of(x)
    k = x.similitude
    w = compose(x, element_power(ctx.omega_generator, -k))
    if w.similitude != 0:
        raise ValueError("element does not decompose over W_aff and tau")
    return w, k


def reduced_word(x):
    """A reduced word for x, found by greedy left-descent stripping."""
    ctx = _ctx_of(x)
    w, k = decompose_omega(x)
    letters = []
    while length(w) > 0:
        for i, s in enumerate(ctx.simple_reflections):
            sw = compose(s, w)
            if length(sw) < length(w):
                letters.append(i)
                w = sw
                break
        else:
            raise ValueError("no descent found; malformed element")
    return ReducedWord(tuple(letters), k)


def evaluate_word(g, word):
    ctx = make_context(g)
    out = ctx.identity
    for i in word.letters:
        out = compose(out, ctx.simple_reflections[i])
    return compose(out, element_power(ctx.omega_generator, word.omega_power))


# ---------------------------------------------------------------------------
# Bruhat order


@lru_cache(maxsize=None)
def _leq_aff(x, y):
    # x, y in the affine Weyl group (similitude 0)
    if x == y:
        return True
    lx, ly = length(x), length(y)
    if lx >= ly:
        return False
    ctx = _ctx_of(x)
    for s in ctx.simple_reflections:
        sy = compose(s, y)
        if length(sy) < ly:
            sx = compose(s, x)
            if length(sx) < lx:
                return _leq_aff(sx, sy)
            return _leq_aff(x, sy)
    raise ValueError("no descent found; malformed element")


def bruhat_leq(x, y):
    """x <= y: equal tau-power and affine parts comparable by subwords."""
    wx, kx = decompose_omega(x)
    wy, ky = decompose_omega(y)
    if kx != ky:
        return False
    return _leq_aff(wx, wy)


def is_reflection(r):
    """True if r = t_{m alpha^vee} s_alpha for a root alpha and integer m."""
    ctx = _ctx_of(r)
    for sigma, coroot in ctx.reflection_table:
        if r.sigma != sigma:
            continue
        m = None
        ok = True
        for nu_k, cr_k in zip(r.nu, coroot):
            if cr_k == 0:
                if nu_k != 0:
                    ok = False
                    break
            else:
                if nu_k % cr_k:
                    ok = False
                    break
                quot = nu_k // cr_k
                if m is None:
                    m = quot
                elif quot != m:
                    ok = False
                    break
        if ok:
            return True
    return False


def hasse_diagram(elements):
    """Cover relations (x, y) with x <= y and l(y) = l(x) + 1."""
    elems = sorted(elements, key=element_sort_key)
    edges = []
    for x in elems:
        for y in elems:
            if length(y) == length(x) + 1 and bruhat_leq(x, y):
                edges.append((x, y))
    return edges


# ---------------------------------------------------------------------------
# serialization


def _cycle_notation(sigma):
    size = len(sigma)
    seen = [False] * size
    cycles = []
    for start in range(size):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        k = sigma[start]
        while k != start:
            cycle.append(k)
            seen[k] = True
            k = sigma[k]
        if len(cycle) > 1:
            cycles.append(cycle)
    if not cycles:
        return "(1)"
    sep = " " if size > 9 else ""
    return "".join(
        "(" + sep.join(str(k + 1) for k in cyc) + ")" for cyc in cycles
    )


def element_to_text(x):
    """Canonical form "[(u1,...,u2n),(cycles)]" with one-based cycles."""
    nu = ",".join(str(a) for a in x.nu)
    return "[({0}),{1}]".format(nu, _cycle_notation(x.sigma))


def element_sort_key(x):
    return (length(x), element_to_text(x))


def element_to_json_dict(x):
    return {"nu": list(x.nu), "sigma": [s + 1 for s in x.sigma]}


def element_from_json_dict(d):
    return ExtendedAffineElement(
        tuple(d["nu"]), tuple(s - 1 for s in d["sigma"])
    )


def hasse_to_dot(elements, names=None):
    """DOT digraph of the cover relations, edges from lower to higher."""
    names = names or {}
    elems = sorted(elements, key=element_sort_key)
    label = {x: names.get(x, element_to_text(x)) for x in elems}
    ident = {x: "n{0}".format(i) for i, x in enumerate(elems)}
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for x in elems:
        lines.append('  {0} [label="{1}"];'.format(ident[x], label[x]))
    for x, y in hasse_diagram(elems):
        lines.append("  {0} -> {1};".format(ident[x], ident[y]))
    lines.append("}")
    return "\n".join(lines) + "\n"
