"""Row reduction over prime fields, pure-Python backend.

Reference implementation of the small linear-algebra kernel used
throughout the package: reduced row echelon form, rank and right null
space of integer matrices modulo a prime q.  The compiled extension in
_gfkernel.pyx implements the same three functions with the same
canonical outputs; gf.py picks whichever is available.

Rows are sequences of ints.  Outputs are tuples of tuples with entries
in 0..q-1 and zero rows dropped, so equal row spaces always serialize
to equal values.
"""


def _eliminate(mat, q):
    # in-place Gauss-Jordan on a list of lists, entries already in 0..q-1
    # returns the pivot column list
    nrows = len(mat)
    if nrows == 0:
        return []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if mat[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        row = mat[r]
        inv = pow(row[c], -1, q)
        if inv != 1:
            for j in range(c, ncols):
                row[j] = row[j] * inv % q
        for i in range(nrows):
            other = mat[i]
            if i != r and other[c]:
                f = other[c]
                for j in range(c, ncols):
                    other[j] = (other[j] - f * row[j]) % q
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(rows, q):
    """Reduced row echelon form of rows mod q, zero rows dropped."""
    mat = [[int(x) % q for x in row] for row in rows]
    pivots = _eliminate(mat, q)
    return tuple(tuple(mat[i]) for i in range(len(pivots)))


def rank(rows, q):
    """Rank of the matrix mod q."""
    mat = [[int(x) % q for x in row] for row in rows]
    return len(_eliminate(mat, q))


def nullspace(rows, q, ncols=None):
    """Canonical basis (rref form) of {x : rows . x = 0 mod q}."""
    mat = [[int(x) % q for x in row] for row in rows]
    if ncols is None:
        if not mat:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(mat[0])
    if not mat:
        return tuple(
            tuple(1 if i == j else 0 for j in range(ncols)) for i in range(ncols)
        )
    pivots = _eliminate(mat, q)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for i, p in enumerate(pivots):
            vec[p] = (-mat[i][f]) % q
        basis.append(vec)
    # the standard free-variable basis is not literally in rref; reduce
    # once more so the output depends only on the row space of the input
    return rref(basis, q) if basis else ()
