"""Enumeration of the mu-permissible and mu-admissible sets.

For mu = (1^n, 0^n) two independent enumerations are provided:

* permissible_set: scans all (nu, sigma) with sigma in the finite Weyl
  group and nu in the cocharacter window, keeping the elements whose
  displacement x(v_{-i}) - v_{-i} lies in {0,1}^2n on every vertex of
  the base alcove and whose similitude sum is n.

* admissible_set: takes the union, over the 2^n Weyl conjugates lam of
  mu, of the Bruhat down-sets of the translations t_lam, generated by
  subword products of a reduced word; each candidate is then re-checked
  with bruhat_leq.  No permissibility inequality is consulted, so the
  equality of the two sets is a genuine cross-validation.

Also here: the p-rank grading by fixed points of sigma, monomial matrix
representatives, the word labels of the thirteen genus-2 elements, and
JSON/CSV-friendly serialization of the tables.
"""

import itertools
from dataclasses import dataclass

from .errors import InternalInvariantError
from .weyl_group import (
    ExtendedAffineElement,
    act,
    bruhat_leq,
    compose,
    element_sort_key,
    element_to_json_dict,
    element_to_text,
    element_from_json_dict,
    length,
    make_context,
    reduced_word,
    translation,
)

TABLE_SCHEMA = "krstrata-admissible-v1"


@dataclass(frozen=True)
class AdmissibleTable:
    g: int
    elements: frozenset
    lengths: dict
    p_ranks: dict
    names: dict | None

    def sorted_elements(self):
        return sorted(self.elements, key=element_sort_key)

    def name_of(self, x):
        if self.names and x in self.names:
            return self.names[x]
        return element_to_text(x)


@dataclass(frozen=True)
class MonomialMatrix:
    """2n x 2n grid; entry None or the exponent e of t^e at that spot."""

    entries: tuple

    def to_text_grid(self):
        rows = []
        for row in self.entries:
            cells = []
            for e in row:
                if e is None:
                    cells.append(".")
                elif e == 0:
                    cells.append("1")
                elif e == 1:
                    cells.append("t")
                else:
                    cells.append("t^{0}".format(e))
            rows.append(" ".join(cells))
        return "\n".join(rows)


# word labels of the thirteen genus-2 admissible elements, keyed by
# (nu, sigma) with sigma zero-based
_G2_NAMED = {
    ((0, 0, 1, 1), (2, 3, 0, 1)): "tau",
    ((0, 0, 1, 1), (3, 2, 1, 0)): "s1tau",
    ((0, 0, 1, 1), (2, 0, 3, 1)): "s0tau",
    ((0, 1, 0, 1), (1, 3, 0, 2)): "s2tau",
    ((0, 0, 1, 1), (0, 2, 1, 3)): "s0s1tau",
    ((0, 1, 0, 1), (1, 0, 3, 2)): "s0s2tau",
    ((1, 0, 1, 0), (0, 2, 1, 3)): "s1s2tau",
    ((0, 1, 0, 1), (3, 1, 2, 0)): "s2s1tau",
    ((0, 0, 1, 1), (3, 1, 2, 0)): "s1s0tau",
    ((0, 0, 1, 1), (0, 1, 2, 3)): "s0s1s0tau",
    ((1, 0, 1, 0), (0, 1, 2, 3)): "s1s0s2tau",
    ((1, 1, 0, 0), (0, 1, 2, 3)): "s2s1s2tau",
    ((0, 1, 0, 1), (0, 1, 2, 3)): "s0s2s1tau",
}


def g2_element_by_name(name):
    for (nu, sigma), label in _G2_NAMED.items():
        if label == name:
            return ExtendedAffineElement(nu, sigma)
    raise ValueError("unknown genus-2 element label: {0}".format(name))


def p_rank(x):
    """Half the number of fixed points of sigma; integral on W."""
    fixed = sum(1 for i, s in enumerate(x.sigma) if s == i)
    if fixed % 2:
        raise ValueError("sigma has odd fixed-point count; not in W")
    return fixed // 2


def weyl_permutations(n):
    """All 2^n n! permutations of {0,...,2n-1} commuting with theta."""
    size = 2 * n
    out = []
    for pi in itertools.permutations(range(n)):
        for signs in itertools.product((0, 1), repeat=n):
            sigma = [0] * size
            for i in range(n):
                target = pi[i] if signs[i] == 0 else size - 1 - pi[i]
                sigma[i] = target
                sigma[size - 1 - i] = size - 1 - target
            out.append(tuple(sigma))
    return out


def _nu_window(n, lo=-1, hi=2):
    # entries of the first half range over the window; second half forced
    # by pair sum 1, which the similitude condition |x(0)| = n imposes
    for half in itertools.product(range(lo, hi + 1), repeat=n):
        yield half + tuple(1 - u for u in reversed(half))


def _displacement_ok(x, vectors):
    for v in vectors[:-1]:
        image = act(x, v)
        for a, b in zip(image, v):
            if not 0 <= a - b <= 1:
                return False
    return True


def _build_table(g, elements):
    names = None
    if g == 2:
        names = {}
        for x in elements:
            key = (x.nu, x.sigma)
            if key not in _G2_NAMED:
                raise InternalInvariantError(
                    "unexpected genus-2 element {0}".format(element_to_text(x))
                )
            names[x] = _G2_NAMED[key]
    return AdmissibleTable(
        g=g,
        elements=frozenset(elements),
        lengths={x: length(x) for x in elements},
        p_ranks={x: p_rank(x) for x in elements},
        names=names,
    )


def permissible_set(g, window=(-1, 2)):
    """All x with x(v_{-i}) - v_{-i} in {0,1}^2n for every chain vertex."""
    ctx = make_context(g)
    vectors = ctx.standard_vectors
    found = []
    for sigma in weyl_permutations(g):
        for nu in _nu_window(g, *window):
            x = ExtendedAffineElement(nu, sigma)
            if _displacement_ok(x, vectors):
                found.append(x)
    return _build_table(g, found)


def admissible_set(g):
    """All x below some Weyl conjugate of the translation by mu."""
    ctx = make_context(g)
    # Weyl orbit of mu: the {0,1} vectors with opposite entries summing to 1
    conjugates = sorted(
        bits + tuple(1 - b for b in reversed(bits))
        for bits in itertools.product((0, 1), repeat=g)
    )
    translations = [translation(lam) for lam in conjugates]

    candidates = set()
    for t in translations:
        word = reduced_word(t)
        if word.omega_power != 1:
            raise InternalInvariantError("conjugate translation has wrong tau power")
        gens = [ctx.simple_reflections[i] for i in word.letters]
        tau = ctx.omega_generator

        def walk(i, current):
            if i == len(gens):
                candidates.add(compose(current, tau))
                return
            walk(i + 1, current)
            walk(i + 1, compose(current, gens[i]))

        walk(0, ctx.identity)

    for x in candidates:
        if not any(bruhat_leq(x, t) for t in translations):
            raise InternalInvariantError(
                "subword product escaped the Bruhat down-set"
            )
    return _build_table(g, candidates)


def p_rank_strata(g):
    """Partition of the admissible set by p-rank."""
    table = admissible_set(g)
    strata = {}
    for x in table.elements:
        strata.setdefault(table.p_ranks[x], set()).add(x)
    return strata


def matrix_rep(x):
    """Monomial matrix of t_nu w_sigma: t^{nu_sigma(j)} at (sigma(j), j)."""
    size = len(x.nu)
    if any(a < 0 for a in x.nu):
        raise ValueError("negative exponent; element outside the monomial cone")
    entries = [[None] * size for _ in range(size)]
    for j in range(size):
        entries[x.sigma[j]][j] = x.nu[x.sigma[j]]
    return MonomialMatrix(tuple(tuple(row) for row in entries))


# ---------------------------------------------------------------------------
# serialization


def table_to_json_dict(table):
    rows = []
    for x in table.sorted_elements():
        row = element_to_json_dict(x)
        row["length"] = table.lengths[x]
        row["p_rank"] = table.p_ranks[x]
        if table.names:
            row["name"] = table.names[x]
        rows.append(row)
    return {"schema": TABLE_SCHEMA, "g": table.g, "elements": rows}


def table_from_json_dict(d):
    if d.get("schema") != TABLE_SCHEMA:
        raise ValueError("unrecognized admissible-table schema")
    elements = [element_from_json_dict(row) for row in d["elements"]]
    return _build_table(d["g"], elements)
