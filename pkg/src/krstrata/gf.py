"""Linear algebra over prime fields with a compiled fast path.

rref / rank / nullspace come from the Cython extension _gfkernel when it
imports, else from the pure-Python twin _gfpure.  Setting KR_PURE=1 in
the environment forces the fallback; the test suite uses that to compare
backends bit for bit.  BACKEND names the active implementation.

On top of the kernel this module provides the subspace utilities shared
by the local-model code and its test oracles: membership and
intersection of row spaces, enumeration of all k-dimensional subspaces
(canonical rref bases), of those containing a fixed subspace, and of
totally isotropic ones for a given Gram matrix.
"""

import itertools
import os

from . import _gfpure

if os.environ.get("KR_PURE") == "1":
    _impl = _gfpure
else:
    try:
        from . import _gfkernel as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _gfpure

rref = _impl.rref
rank = _impl.rank
nullspace = _impl.nullspace

BACKEND = "compiled" if _impl.__name__.endswith("_gfkernel") else "pure"


# ---------------------------------------------------------------------------
# small matrix helpers


def matvec(mat, vec, q):
    return tuple(sum(a * b for a, b in zip(row, vec)) % q for row in mat)


def matmul(a, b, q):
    cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % q for col in cols) for row in a
    )


def transpose(mat):
    return tuple(zip(*mat))


def form_value(gram, u, v, q):
    """The value u^T . gram . v mod q."""
    total = 0
    for i, ui in enumerate(u):
        if ui:
            total += ui * sum(g * vj for g, vj in zip(gram[i], v))
    return total % q


def residue(vec, basis, q):
    """Reduce vec against an rref basis; a zero result means membership."""
    v = [int(x) % q for x in vec]
    for row in basis:
        lead = next(j for j, x in enumerate(row) if x)
        if v[lead]:
            f = v[lead]
            v = [(x - f * y) % q for x, y in zip(v, row)]
    return tuple(v)


def contains(basis, vec, q):
    return not any(residue(vec, basis, q))


def intersect_dim(a, b, q):
    """dim of the intersection of two row spaces."""
    ra = rank(a, q) if a else 0
    rb = rank(b, q) if b else 0
    if ra == 0 or rb == 0:
        return 0
    return ra + rb - rank(tuple(a) + tuple(b), q)


def intersect(a, b, q):
    """Canonical basis of the intersection of two row spaces."""
    if not a or not b:
        return ()
    stacked = tuple(a) + tuple(b)
    # (u | w) with u.a = w.b spans the left kernel of [a; b] stacked
    kernel = nullspace(transpose(stacked), q, ncols=len(stacked))
    na = len(a)
    vecs = []
    for k in kernel:
        u = k[:na]
        vec = [0] * len(a[0])
        for coeff, row in zip(u, a):
            if coeff:
                for j, x in enumerate(row):
                    vec[j] = (vec[j] + coeff * x) % q
        vecs.append(tuple(vec))
    return rref(vecs, q)


# ---------------------------------------------------------------------------
# subspace enumeration


def gaussian_binomial(m, k, q):
    """Number of k-dimensional subspaces of F_q^m."""
    num = den = 1
    for i in range(k):
        num *= q ** (m - i) - 1
        den *= q ** (k - i) - 1
    return num // den


def all_subspaces(ambient, k, q):
    """Yield canonical rref bases of every k-dim subspace of F_q^ambient."""
    if k == 0:
        yield ()
        return
    if k > ambient:
        return
    for pivots in itertools.combinations(range(ambient), k):
        pivot_set = set(pivots)
        free = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, ambient)
            if j not in pivot_set
        ]
        for vals in itertools.product(range(q), repeat=len(free)):
            mat = [[0] * ambient for _ in range(k)]
            for i in range(k):
                mat[i][pivots[i]] = 1
            for (i, j), v in zip(free, vals):
                mat[i][j] = v
            yield tuple(tuple(r) for r in mat)


def subspaces_containing(basis, ambient, k, q):
    """Yield all k-dim subspaces of F_q^ambient containing span(basis).

    Subspaces W with span(basis) <= W correspond to (k-d)-dim subspaces
    of the quotient, coordinatized by the non-pivot columns of the rref
    basis; each is lifted back and re-reduced.
    """
    base = rref(basis, q) if basis else ()
    d = len(base)
    if d > k:
        return
    if d == k:
        yield base
        return
    pivots = [next(j for j, x in enumerate(row) if x) for row in base]
    comp = [j for j in range(ambient) if j not in pivots]
    for quot in all_subspaces(len(comp), k - d, q):
        lifted = list(base)
        for qrow in quot:
            vec = [0] * ambient
            for c, j in zip(qrow, comp):
                vec[j] = c
            lifted.append(tuple(vec))
        yield rref(lifted, q)


def is_isotropic(basis, gram, q):
    for u in basis:
        for v in basis:
            if form_value(gram, u, v, q):
                return False
    return True


def isotropic_subspaces(gram, k, q):
    """Yield the k-dim subspaces totally isotropic for the Gram matrix."""
    for sub in all_subspaces(len(gram), k, q):
        if is_isotropic(sub, gram, q):
            yield sub
