"""Admissible and permissible sets against the reference genus-2 data."""

import pytest

from krstrata.admissible import (
    admissible_set,
    g2_element_by_name,
    matrix_rep,
    p_rank,
    p_rank_strata,
    permissible_set,
    table_from_json_dict,
    table_to_json_dict,
)
from krstrata.weyl_group import act, length, make_context

# the thirteen genus-2 elements: name -> (nu, sigma one-line, 1-based)
REFERENCE_G2 = {
    "tau": ((0, 0, 1, 1), (3, 4, 1, 2)),
    "s1tau": ((0, 0, 1, 1), (4, 3, 2, 1)),
    "s0tau": ((0, 0, 1, 1), (3, 1, 4, 2)),
    "s2tau": ((0, 1, 0, 1), (2, 4, 1, 3)),
    "s0s1tau": ((0, 0, 1, 1), (1, 3, 2, 4)),
    "s0s2tau": ((0, 1, 0, 1), (2, 1, 4, 3)),
    "s1s2tau": ((1, 0, 1, 0), (1, 3, 2, 4)),
    "s2s1tau": ((0, 1, 0, 1), (4, 2, 3, 1)),
    "s1s0tau": ((0, 0, 1, 1), (4, 2, 3, 1)),
    "s0s1s0tau": ((0, 0, 1, 1), (1, 2, 3, 4)),
    "s1s0s2tau": ((1, 0, 1, 0), (1, 2, 3, 4)),
    "s2s1s2tau": ((1, 1, 0, 0), (1, 2, 3, 4)),
    "s0s2s1tau": ((0, 1, 0, 1), (1, 2, 3, 4)),
}

REFERENCE_STRATA = {
    2: {"s0s1s0tau", "s1s0s2tau", "s2s1s2tau", "s0s2s1tau"},
    1: {"s0s1tau", "s1s2tau", "s2s1tau", "s1s0tau"},
    0: {"tau", "s1tau", "s0tau", "s2tau", "s0s2tau"},
}

REFERENCE_MATRICES = {
    "tau": ". . 1 .\n. . . 1\nt . . .\n. t . .",
    "s1tau": ". . . 1\n. . 1 .\n. t . .\nt . . .",
    "s0tau": ". 1 . .\n. . . 1\nt . . .\n. . t .",
    "s2tau": ". . 1 .\nt . . .\n. . . 1\n. t . .",
    "s0s1tau": "1 . . .\n. . 1 .\n. t . .\n. . . t",
    "s0s2tau": ". 1 . .\nt . . .\n. . . 1\n. . t .",
    "s1s2tau": "t . . .\n. . 1 .\n. t . .\n. . . 1",
    "s2s1tau": ". . . 1\n. t . .\n. . 1 .\nt . . .",
    "s1s0tau": ". . . 1\n. 1 . .\n. . t .\nt . . .",
    "s0s1s0tau": "1 . . .\n. 1 . .\n. . t .\n. . . t",
    "s1s0s2tau": "t . . .\n. 1 . .\n. . t .\n. . . 1",
    "s2s1s2tau": "t . . .\n. t . .\n. . 1 .\n. . . 1",
    "s0s2s1tau": "1 . . .\n. t . .\n. . 1 .\n. . . t",
}


def test_g2_elements_exact():
    adm = admissible_set(2)
    assert len(adm.elements) == 13
    seen = {}
    for x in adm.elements:
        name = adm.name_of(x)
        seen[name] = (x.nu, tuple(a + 1 for a in x.sigma))
    assert seen == REFERENCE_G2


def test_permissible_matches_reference_too():
    perm = permissible_set(2)
    pairs = {(x.nu, tuple(a + 1 for a in x.sigma)) for x in perm.elements}
    assert pairs == set(REFERENCE_G2.values())


@pytest.mark.parametrize("g,expected", [(1, 3), (2, 13), (3, 79), (4, 633)])
def test_admissible_equals_permissible(g, expected):
    adm = admissible_set(g)
    perm = permissible_set(g)
    assert adm.elements == perm.elements
    assert len(adm.elements) == expected


@pytest.mark.parametrize("g", [2, 3])
def test_window_enlargement_changes_nothing(g):
    assert (
        permissible_set(g, window=(-2, 3)).elements
        == permissible_set(g).elements
    )


def test_p_rank_strata_g2():
    strata = p_rank_strata(2)
    adm = admissible_set(2)
    named = {
        f: {adm.name_of(x) for x in xs} for f, xs in strata.items()
    }
    assert named == REFERENCE_STRATA


def test_p_rank_strata_g3_frozen():
    sizes = {f: len(xs) for f, xs in p_rank_strata(3).items()}
    assert sizes == {0: 29, 1: 30, 2: 12, 3: 8}
    assert sum(sizes.values()) == 79


def test_p_rank_even_fixed_points():
    for g in (2, 3):
        for x in admissible_set(g).elements:
            fixed = sum(1 for i, img in enumerate(x.sigma) if i == img)
            assert fixed == 2 * p_rank(x)


def test_displacement_property():
    # every admissible x moves every alcove vertex by a {0,1} vector
    for g in (2, 3):
        ctx = make_context(g)
        for x in admissible_set(g).elements:
            for v in ctx.standard_vectors:
                delta = tuple(a - b for a, b in zip(act(x, v), v))
                assert all(d in (0, 1) for d in delta)


def test_matrices_exact():
    for name, grid in REFERENCE_MATRICES.items():
        x = g2_element_by_name(name)
        assert matrix_rep(x).to_text_grid() == grid, name


def test_matrix_rep_rejects_negative_exponents():
    ctx = make_context(2)
    with pytest.raises(ValueError):
        matrix_rep(ctx.simple_reflections[0])  # nu has a -1 entry


def test_lengths_and_sort_order():
    adm = admissible_set(2)
    lengths = [adm.lengths[x] for x in adm.sorted_elements()]
    assert lengths == sorted(lengths)
    assert lengths == [0, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3]
    by_len = {}
    for x in adm.elements:
        by_len.setdefault(adm.lengths[x], 0)
        by_len[adm.lengths[x]] += 1
        assert adm.lengths[x] == length(x)
    assert by_len == {0: 1, 1: 3, 2: 5, 3: 4}


def test_g3_length_profile_frozen():
    adm = admissible_set(3)
    by_len = {}
    for x in adm.elements:
        by_len[adm.lengths[x]] = by_len.get(adm.lengths[x], 0) + 1
    assert by_len == {0: 1, 1: 4, 2: 9, 3: 17, 4: 22, 5: 18, 6: 8}


def test_table_json_round_trip():
    for g in (2, 3):
        table = admissible_set(g)
        back = table_from_json_dict(table_to_json_dict(table))
        assert back.elements == table.elements
        assert back.lengths == table.lengths
        assert back.p_ranks == table.p_ranks
        assert back.names == table.names


def test_table_json_rejects_foreign_schema():
    with pytest.raises(ValueError):
        table_from_json_dict({"schema": "something-else", "elements": []})


def test_unknown_name_rejected():
    with pytest.raises(ValueError):
        g2_element_by_name("s9tau")
