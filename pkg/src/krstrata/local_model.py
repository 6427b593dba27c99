"""Finite-field lattice-chain arithmetic on the Siegel local model.

A point is a chain of n-dimensional subspaces F_0, F_{-1}, ..., F_{-n}
of F_q^2n (reduced row-echelon bases), compatible with the reduction
beta_bar of the chain maps and isotropic at both ends.  The module
computes the distinguished monomial point of each admissible element,
the subquotient invariants (sigma_i, tau_i) and the second-order pair
(sigma_02, tau_02), the classification tables from profile to element,
relative-position signatures over the truncated lattice model, a
signature-lookup classifier, exhaustive point enumeration, and the
pairing criterion separating the bottom two strata.

Lattice conventions.  L'_{-i} inside F_q[[t]]^2n is spanned by e_m for
m <= 2n-i and t e_m for m > 2n-i; the identification a'_{-i} of the
abstract chain member with L'_{-i} sends e_m to e_m for m <= 2n-i and
to t e_m above, and turns the chain maps into inclusions.  Signatures
live in the 4n-dimensional space L'_0 / t^2 L'_0 with coordinates
(e-part | t-part).
"""

from dataclasses import dataclass
from functools import lru_cache

from . import gf
from .admissible import admissible_set, g2_element_by_name, p_rank
from .errors import InternalInvariantError


class StandardChainContext:
    """Reductions mod t of the standard chain maps and pairings."""

    def __init__(self, n, q):
        size = 2 * n
        self.n = n
        self.q = q
        self.beta_bar = tuple(
            tuple(
                tuple(
                    1 if (r == c and r != size - j) else 0 for c in range(size)
                )
                for r in range(size)
            )
            for j in range(1, size + 1)
        )
        self.psi0_bar = _standard_gram(n, q)
        self.psin_bar = derive_psin_gram(n, q)


def _standard_gram(n, q):
    size = 2 * n
    gram = [[0] * size for _ in range(size)]
    for r in range(size):
        gram[r][size - 1 - r] = 1 if r < n else q - 1
    return tuple(tuple(row) for row in gram)


def derive_psin_gram(n, q):
    """Pairing on the index-n member from psi_0(bt x, bt y) = t psi_n(x, y).

    The transport bt of the index-n member into the base lattice is
    diag(1,...,1, t,...,t) with n of each, so the (i, j) value picks up
    t^{[i>n] + [j>n]} and loses one power of t; the exponent must come
    out zero wherever psi_0 is nonzero, and the matrix is computed, not
    assumed.
    """
    size = 2 * n
    base = _standard_gram(n, q)
    gram = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if base[i][j]:
                exponent = (1 if i >= n else 0) + (1 if j >= n else 0) - 1
                if exponent != 0:
                    raise InternalInvariantError(
                        "index-n pairing is not t-free at {0},{1}".format(i, j)
                    )
                gram[i][j] = base[i][j]
    return tuple(tuple(row) for row in gram)


@lru_cache(maxsize=None)
def make_chain_context(n, q):
    if n < 1:
        raise ValueError("genus must be at least 1")
    # row reduction uses Fermat inverses, so a prime field is required
    if q < 2 or any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
        raise ValueError("field size must be a prime")
    return StandardChainContext(n, q)


@dataclass(frozen=True)
class FlagChainPoint:
    """Subspace chain (F_0, F_{-1}, ..., F_{-n}), rref bases."""

    subspaces: tuple


@dataclass(frozen=True)
class InvariantProfile:
    p_rank_point: int | None
    sigma_tau: tuple
    sigma_tau_02: tuple | None


@dataclass(frozen=True)
class Signature:
    """dims[i][j] = dim of (M_{-i} intersect L'_{-j}) mod t^2, i,j in 0..2n."""

    dims: tuple


def make_point(subspaces, ctx):
    subs = tuple(gf.rref(rows, ctx.q) for rows in subspaces)
    point = FlagChainPoint(subs)
    validate_point(point, ctx)
    return point


def validate_point(p, ctx):
    n, q = ctx.n, ctx.q
    size = 2 * n
    if len(p.subspaces) != n + 1:
        raise ValueError("chain must have n+1 members")
    for rows in p.subspaces:
        if len(rows) != n or any(len(r) != size for r in rows):
            raise ValueError("each member must be an n-dimensional subspace")
    for i in range(1, n + 1):
        bmat = ctx.beta_bar[i - 1]
        for f in p.subspaces[i]:
            if not gf.contains(p.subspaces[i - 1], gf.matvec(bmat, f, q), q):
                raise ValueError(
                    "chain map image escapes the next member at index {0}".format(i)
                )
    if not gf.is_isotropic(p.subspaces[0], ctx.psi0_bar, q):
        raise ValueError("F_0 is not isotropic")
    if not gf.is_isotropic(p.subspaces[n], ctx.psin_bar, q):
        raise ValueError("F_{-n} is not isotropic")


# ---------------------------------------------------------------------------
# monomial representatives


def monomial_point(x, ctx):
    """The distinguished point of the stratum of x.

    The monomial lattice x . L'_{-i}, rewritten in the coordinates of the
    index-i member, is spanned by t^{c_k} e_k with
    c_k = nu_k + [sigma^{-1}(k) > 2n-i] - [k > 2n-i]; the subspace F_{-i}
    is spanned by the e_k with c_k = 0.  Exponents outside {0,1} mean the
    element is not permissible.
    """
    n, q = ctx.n, ctx.q
    size = 2 * n
    if len(x.nu) != size:
        raise ValueError("element rank does not match the chain context")
    sigma_inv = [0] * size
    for i in range(size):
        sigma_inv[x.sigma[i]] = i
    subs = []
    for i in range(n + 1):
        rows = []
        for k in range(size):
            c = (
                x.nu[k]
                + (1 if sigma_inv[k] >= size - i else 0)
                - (1 if k >= size - i else 0)
            )
            if c == 0:
                rows.append(tuple(1 if m == k else 0 for m in range(size)))
            elif c != 1:
                raise ValueError("element is not permissible; lattice not sandwiched")
        if len(rows) != n:
            raise ValueError("element is not permissible; wrong fiber dimension")
        subs.append(tuple(rows))
    return FlagChainPoint(tuple(subs))


# ---------------------------------------------------------------------------
# invariants


def _image_rows(mat):
    # the image of a matrix as row vectors (its columns)
    return list(zip(*mat))


def chain_invariants(p, ctx):
    """Pairs (sigma_i, tau_i) for i = 0..n-1.

    sigma_i is the corank of beta on the subspaces, tau_i the corank of
    the induced map on the quotients.
    """
    n, q = ctx.n, ctx.q
    size = 2 * n
    out = []
    for i in range(n):
        bmat = ctx.beta_bar[i]
        image = [gf.matvec(bmat, f, q) for f in p.subspaces[i + 1]]
        sigma_i = n - gf.rank(image, q)
        stacked = _image_rows(bmat) + list(p.subspaces[i])
        tau_i = size - gf.rank(stacked, q)
        out.append((sigma_i, tau_i))
    return out


def second_invariants(p, ctx):
    """(sigma_02, tau_02) from the composite of the first two chain maps."""
    if ctx.n != 2:
        raise ValueError("second-order invariants are defined for genus 2")
    q = ctx.q
    comp = gf.matmul(ctx.beta_bar[0], ctx.beta_bar[1], q)
    image = [gf.matvec(comp, f, q) for f in p.subspaces[2]]
    sigma_02 = 2 - gf.rank(image, q)
    stacked = _image_rows(comp) + list(p.subspaces[0])
    tau_02 = 4 - gf.rank(stacked, q)
    return (sigma_02, tau_02)


def group_scheme_kind(sigma, tau):
    """Subquotient kind from one invariant pair."""
    kinds = {(0, 1): "etale", (1, 0): "multiplicative", (1, 1): "alpha_p"}
    if (sigma, tau) not in kinds:
        raise ValueError("invariant pair {0} has no kind".format((sigma, tau)))
    return kinds[(sigma, tau)]


def invariant_profile(p, ctx):
    st = tuple(chain_invariants(p, ctx))
    st02 = None
    if ctx.n == 2 and st == ((1, 1), (1, 1)):
        st02 = second_invariants(p, ctx)
    return InvariantProfile(p_rank_point=None, sigma_tau=st, sigma_tau_02=st02)


# profile -> element lookup for genus 2; first by the invariant pairs,
# then, on the doubly alpha_p locus, by the second-order pair
_KR_BY_PAIRS = {
    ((0, 1), (0, 1)): "s0s1s0tau",
    ((0, 1), (1, 0)): "s0s2s1tau",
    ((1, 0), (0, 1)): "s1s0s2tau",
    ((1, 0), (1, 0)): "s2s1s2tau",
    ((0, 1), (1, 1)): "s0s1tau",
    ((1, 0), (1, 1)): "s1s2tau",
    ((1, 1), (1, 0)): "s2s1tau",
    ((1, 1), (0, 1)): "s1s0tau",
}

_KR_BY_SECOND_PAIR = {
    (1, 1): "s0s2tau",
    (1, 2): "s0tau",
    (2, 1): "s2tau",
    (2, 2): ("s1tau", "tau"),
}


def classification_tables():
    """The classifier tables as plain data.

    Returns (kinds, by_pairs, by_second): subquotient kinds by invariant
    pair, element names by the two invariant pairs, and element names by
    the second-order pair on the doubly alpha_p locus (one ambiguous
    cell holds two names).
    """
    kinds = tuple(
        (pair, group_scheme_kind(*pair)) for pair in ((0, 1), (1, 0), (1, 1))
    )
    by_pairs = tuple(sorted(_KR_BY_PAIRS.items()))
    by_second = tuple(
        (key, entry if isinstance(entry, tuple) else (entry,))
        for key, entry in sorted(_KR_BY_SECOND_PAIR.items())
    )
    return kinds, by_pairs, by_second


def kr_from_profile(profile):
    """Element (or ambiguous pair) determined by an invariant profile."""
    st = tuple(tuple(pair) for pair in profile.sigma_tau)
    if st == ((1, 1), (1, 1)):
        if profile.sigma_tau_02 is None:
            raise ValueError("profile needs the second-order pair on this locus")
        entry = _KR_BY_SECOND_PAIR.get(tuple(profile.sigma_tau_02))
        if entry is None:
            raise ValueError("profile is not in the classification tables")
        if isinstance(entry, tuple):
            return frozenset(g2_element_by_name(nm) for nm in entry)
        found = g2_element_by_name(entry)
    else:
        name = _KR_BY_PAIRS.get(st)
        if name is None:
            raise ValueError("profile is not in the classification tables")
        found = g2_element_by_name(name)
    if profile.p_rank_point is not None and profile.p_rank_point != p_rank(found):
        raise ValueError("profile p-rank disagrees with the table element")
    return found


# ---------------------------------------------------------------------------
# signatures and classification


def _fold_row(vec, cut, size):
    # W-coordinates (e-part | t-part) of a fiber vector of the index-i
    # member, cut = 2n - i
    row = [0] * (2 * size)
    for m, a in enumerate(vec):
        if m < cut:
            row[m] = a
        else:
            row[size + m] = a
    return tuple(row)


def _lattice_rows(p, i, ctx):
    # basis of M_{-i} mod t^2: folded subspace rows plus t e_m, m <= 2n-i
    size = 2 * ctx.n
    cut = size - i
    rows = [_fold_row(f, cut, size) for f in p.subspaces[i]]
    for m in range(cut):
        rows.append(tuple(1 if c == size + m else 0 for c in range(2 * size)))
    return gf.rref(rows, ctx.q)


def _psi_prime_gram(ctx):
    # Gram of the rescaled pairing on W: psi'(u, v) = u_e J v_t + u_t J v_e
    size = 2 * ctx.n
    j = ctx.psi0_bar
    zero = tuple((0,) * size for _ in range(size))
    top = tuple(zero[r] + j[r] for r in range(size))
    bot = tuple(j[r] + zero[r] for r in range(size))
    return top + bot


def signature(p, ctx):
    """Relative position of the chain against the standard chain, mod t^2.

    Lattices M_{-i} for i <= n come from the point; for n < j <= 2n the
    chain is completed by the pairing: M_{-j} is spanned by t M_0 and the
    part of M_0 pairing to zero with M_{-(2n-j)} under the rescaled form
    (the mod-t^2 shadow of M_{-j} = t . dual of M_{-(2n-j)}).  The entry
    dims[i][j] is the dimension of M_{-i} intersected with L'_{-j}.
    """
    n, q = ctx.n, ctx.q
    size = 2 * n
    lattices = [None] * (size + 1)
    for i in range(n + 1):
        lattices[i] = _lattice_rows(p, i, ctx)
    m0 = lattices[0]
    t_m0 = gf.rref(
        [_fold_row(f, 0, size) for f in p.subspaces[0]], q
    )
    psi = _psi_prime_gram(ctx)
    for j in range(n + 1, size + 1):
        other = lattices[size - j]
        gram = gf.matmul(gf.matmul(m0, psi, q), gf.transpose(other), q)
        kernel = gf.nullspace(gf.transpose(gram), q, ncols=len(m0))
        rows = list(t_m0)
        for coeffs in kernel:
            vec = [0] * (2 * size)
            for c, base_row in zip(coeffs, m0):
                if c:
                    for idx, val in enumerate(base_row):
                        vec[idx] = (vec[idx] + c * val) % q
            rows.append(tuple(vec))
        lattices[j] = gf.rref(rows, q)
    dims = []
    for i in range(size + 1):
        rows = lattices[i]
        row_dims = []
        for j in range(size + 1):
            # intersection with L'_{-j} kills the e-coordinates above 2n-j
            sub = [row[size - j:size] for row in rows]
            row_dims.append(len(rows) - gf.rank(sub, q))
        dims.append(tuple(row_dims))
    return Signature(tuple(dims))


@lru_cache(maxsize=None)
def _signature_index(elements, n, q):
    ctx = make_chain_context(n, q)
    index = {}
    for x in elements:
        sig = signature(monomial_point(x, ctx), ctx)
        if sig in index:
            raise InternalInvariantError("signature collision between strata")
        index[sig] = x
    return index


def classify(p, table, ctx):
    """The admissible element whose stratum contains the point."""
    index = _signature_index(table.elements, ctx.n, ctx.q)
    sig = signature(p, ctx)
    if sig not in index:
        raise InternalInvariantError("signature matches no stratum representative")
    return index[sig]


# ---------------------------------------------------------------------------
# enumeration and the census


def enumerate_points(g, q):
    """All chains over F_q: isotropic F_{-n} first, then walk upward."""
    ctx = make_chain_context(g, q)
    n = g
    size = 2 * n
    points = []

    def extend(i, acc):
        # acc holds F_{-n}, ..., F_{-(i+1)}
        bmat = ctx.beta_bar[i]
        image = gf.rref([gf.matvec(bmat, f, q) for f in acc[-1]], q)
        for cand in gf.subspaces_containing(image, size, n, q):
            if i == 0:
                if gf.is_isotropic(cand, ctx.psi0_bar, q):
                    chain = (cand,) + tuple(reversed(acc))
                    points.append(FlagChainPoint(chain))
            else:
                extend(i - 1, acc + [cand])

    for bottom in gf.isotropic_subspaces(ctx.psin_bar, n, q):
        extend(n - 1, [bottom])
    return points


def point_census(g, q, table=None):
    """Observed stratum sizes vs the expected q^length."""
    if table is None:
        table = admissible_set(g)
    ctx = make_chain_context(g, q)
    tally = {x: 0 for x in table.elements}
    for p in enumerate_points(g, q):
        tally[classify(p, table, ctx)] += 1
    rows = []
    for x in table.sorted_elements():
        rows.append((x, q ** table.lengths[x], tally[x]))
    return table, rows


# ---------------------------------------------------------------------------
# the pairing criterion on the bottom strata


def tau_criterion(p, ctx):
    """True iff the composite pairing psi(b(v), b(w)) dies on F_{-1}.

    b is the first chain map; v ranges over the whole fiber and w over
    F_{-1}.  On points of the bottom two strata this is true exactly on
    the zero-dimensional one.
    """
    q = ctx.q
    size = 2 * ctx.n
    bmat = ctx.beta_bar[0]
    basis = [tuple(1 if c == r else 0 for c in range(size)) for r in range(size)]
    for v in basis:
        bv = gf.matvec(bmat, v, q)
        for w in p.subspaces[1]:
            if gf.form_value(ctx.psi0_bar, bv, gf.matvec(bmat, w, q), q):
                return False
    return True


# ---------------------------------------------------------------------------
# chain automorphisms mod t^2 (used to certify signature invariance)


def transform_point(p, a_mat, b_mat, ctx):
    """Image of the point under the chain automorphism A + tB.

    A must stabilize the standard chain mod t (and the pairing up to a
    scalar for the completed part of the signature to be preserved);
    B is the t-linear correction.  The map acts on W as the block matrix
    [[A, 0], [B, A]] in (e-part | t-part) coordinates.
    """
    n, q = ctx.n, ctx.q
    size = 2 * n
    new_subs = []
    for i in range(n + 1):
        cut = size - i
        rows = []
        for f in p.subspaces[i]:
            folded = _fold_row(f, cut, size)
            e_part = folded[:size]
            t_part = folded[size:]
            new_e = gf.matvec(a_mat, e_part, q)
            new_t = tuple(
                (x + y) % q
                for x, y in zip(gf.matvec(b_mat, e_part, q), gf.matvec(a_mat, t_part, q))
            )
            rows.append(tuple(new_e[m] if m < cut else new_t[m] for m in range(size)))
        reduced = gf.rref(rows, q)
        if len(reduced) != n:
            raise ValueError("transformation does not preserve the chain")
        new_subs.append(reduced)
    return FlagChainPoint(tuple(new_subs))


# ---------------------------------------------------------------------------
# serialization


def point_to_json_dict(p, ctx):
    return {
        "q": ctx.q,
        "g": ctx.n,
        "subspaces": [[list(row) for row in rows] for rows in p.subspaces],
    }


def point_from_json_dict(d):
    ctx = make_chain_context(int(d["g"]), int(d["q"]))
    subs = tuple(
        tuple(tuple(int(a) for a in row) for row in rows) for rows in d["subspaces"]
    )
    point = FlagChainPoint(subs)
    validate_point(point, ctx)
    return point, ctx
