# cython: boundscheck=False, wraparound=False, cdivision=True
"""Row reduction over prime fields, compiled backend.

Same contract as _gfpure: rref, rank and nullspace of integer matrices
modulo a prime q, with canonical tuple-of-tuples outputs.  This is the
hot kernel behind point censuses and signature computations.
"""

import array

from cpython cimport array


cdef long long _inv(long long a, long long q):
    # Fermat inverse, q prime
    cdef long long result = 1
    cdef long long base = a % q
    cdef long long e = q - 2
    while e > 0:
        if e & 1:
            result = result * base % q
        base = base * base % q
        e >>= 1
    return result


cdef list _eliminate(long long[:] m, int nrows, int ncols, long long q):
    # in-place Gauss-Jordan on a flat row-major buffer, entries in 0..q-1
    cdef int r = 0, c, i, j, pr
    cdef long long inv, f, tmp
    pivots = []
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if m[i * ncols + c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(ncols):
                tmp = m[r * ncols + j]
                m[r * ncols + j] = m[pr * ncols + j]
                m[pr * ncols + j] = tmp
        inv = _inv(m[r * ncols + c], q)
        if inv != 1:
            for j in range(c, ncols):
                m[r * ncols + j] = m[r * ncols + j] * inv % q
        for i in range(nrows):
            if i != r and m[i * ncols + c] != 0:
                f = m[i * ncols + c]
                for j in range(c, ncols):
                    tmp = (m[i * ncols + j] - f * m[r * ncols + j]) % q
                    if tmp < 0:
                        tmp += q
                    m[i * ncols + j] = tmp
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(rows, long long q):
    """Reduced row echelon form of rows mod q, zero rows dropped."""
    cdef int nrows = len(rows)
    if nrows == 0:
        return ()
    cdef int ncols = len(rows[0])
    flat = array.array("q", [int(x) % q for row in rows for x in row])
    cdef long long[:] m = flat
    pivots = _eliminate(m, nrows, ncols, q)
    cdef int npiv = len(pivots)
    return tuple(
        tuple(flat[i * ncols:(i + 1) * ncols].tolist()) for i in range(npiv)
    )


def rank(rows, long long q):
    """Rank of the matrix mod q."""
    cdef int nrows = len(rows)
    if nrows == 0:
        return 0
    cdef int ncols = len(rows[0])
    flat = array.array("q", [int(x) % q for row in rows for x in row])
    cdef long long[:] m = flat
    return len(_eliminate(m, nrows, ncols, q))


def nullspace(rows, long long q, ncols=None):
    """Canonical basis (rref form) of {x : rows . x = 0 mod q}."""
    cdef int nrows = len(rows)
    cdef int nc
    if ncols is None:
        if nrows == 0:
            raise ValueError("ncols is required for an empty matrix")
        nc = len(rows[0])
    else:
        nc = ncols
    if nrows == 0:
        return tuple(
            tuple(1 if i == j else 0 for j in range(nc)) for i in range(nc)
        )
    flat = array.array("q", [int(x) % q for row in rows for x in row])
    cdef long long[:] m = flat
    pivots = _eliminate(m, nrows, nc, q)
    pivot_set = set(pivots)
    free = [c for c in range(nc) if c not in pivot_set]
    if not free:
        return ()
    basis = []
    for f in free:
        vec = [0] * nc
        vec[f] = 1
        for i, p in enumerate(pivots):
            vec[p] = (q - flat[i * nc + f]) % q
        basis.append(vec)
    return rref(basis, q)
