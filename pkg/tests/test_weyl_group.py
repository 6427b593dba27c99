"""Extended affine Weyl group: arithmetic, length, Bruhat order."""

import random
from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krstrata.weyl_group import (
    ExtendedAffineElement,
    act,
    bruhat_leq,
    compose,
    decompose_omega,
    element_from_json_dict,
    element_power,
    element_to_json_dict,
    element_to_text,
    evaluate_word,
    hasse_diagram,
    hasse_to_dot,
    identity_element,
    inverse,
    is_reflection,
    length,
    make_context,
    reduced_word,
    translation,
)
from krstrata.admissible import admissible_set, g2_element_by_name


def random_element(rng, g, width=2):
    ctx = make_context(g)
    x = identity_element(g)
    gens = list(ctx.simple_reflections) + [ctx.omega_generator]
    for _ in range(rng.randrange(0, 8)):
        x = compose(x, rng.choice(gens))
    extra = rng.randrange(-width, width + 1)
    shift = translation(tuple([extra] * (2 * g)))
    return compose(shift, x)


def test_make_context_rejects_bad_genus():
    with pytest.raises(ValueError):
        make_context(0)


def test_element_validation():
    with pytest.raises(ValueError):
        ExtendedAffineElement((0, 0, 1), (0, 1, 2))  # odd rank
    with pytest.raises(ValueError):
        ExtendedAffineElement((0, 0, 0, 1), (0, 1, 2, 3))  # pair sums differ
    with pytest.raises(ValueError):
        # permutation does not commute with the flip i -> 2n-1-i
        ExtendedAffineElement((0, 0, 0, 0), (1, 0, 2, 3))


def test_generators_g2():
    ctx = make_context(2)
    s0, s1, s2 = ctx.simple_reflections
    assert s0.nu == (-1, 0, 0, 1) and s0.sigma == (3, 1, 2, 0)
    assert s1.nu == (0, 0, 0, 0) and s1.sigma == (1, 0, 3, 2)
    assert s2.nu == (0, 0, 0, 0) and s2.sigma == (0, 2, 1, 3)
    tau = ctx.omega_generator
    assert tau.nu == (0, 0, 1, 1) and tau.sigma == (2, 3, 0, 1)
    for s in (s0, s1, s2):
        assert length(s) == 1
        assert compose(s, s) == identity_element(2)
    assert length(tau) == 0


def test_similitude_and_translation():
    x = translation((1, 1, 0, 0))
    assert x.similitude == 1
    assert length(x) == 3
    with pytest.raises(ValueError):
        translation((1, 0, 0, 0))  # pair sums differ


def test_action_is_affine():
    ctx = make_context(2)
    tau = ctx.omega_generator
    v = (0, 0, 0, -1)
    assert act(tau, (0, 0, 0, 0)) == tau.nu
    assert act(translation((1, 1, 0, 0)), v) == (1, 1, 0, -1)


def test_tau_rotates_the_base_alcove():
    # tau permutes the alcove vertices up to integral translation
    for g in (2, 3):
        ctx = make_context(g)
        tau = ctx.omega_generator
        n = g
        verts = ctx.standard_vectors
        for i in range(2 * n + 1):
            out = act(tau, verts[i])
            if i + n <= 2 * n:
                assert out == verts[i + n]
            else:
                shifted = tuple(a + 1 for a in verts[i + n - 2 * n])
                assert out == shifted


def test_compose_matches_action():
    rng = random.Random(42)
    for g in (2, 3):
        for _ in range(60):
            x = random_element(rng, g)
            y = random_element(rng, g)
            v = tuple(rng.randrange(-3, 4) for _ in range(2 * g))
            assert act(compose(x, y), v) == act(x, act(y, v))


def test_group_axioms():
    rng = random.Random(5)
    e = identity_element(2)
    for _ in range(80):
        x = random_element(rng, 2)
        y = random_element(rng, 2)
        z = random_element(rng, 2)
        assert compose(compose(x, y), z) == compose(x, compose(y, z))
        assert compose(x, inverse(x)) == e
        assert compose(inverse(x), x) == e
        assert element_power(x, 0) == e


def test_length_symmetry_and_steps():
    rng = random.Random(11)
    ctx = make_context(2)
    for _ in range(60):
        x = random_element(rng, 2)
        assert length(x) == length(inverse(x))
        for s in ctx.simple_reflections:
            assert abs(length(compose(s, x)) - length(x)) == 1


def bfs_length_table(g, cap):
    # word metric on W_aff tau^k restricted to elements within cap letters
    ctx = make_context(g)
    table = {}
    for k in (0, 1):
        start = element_power(ctx.omega_generator, k)
        table[start] = 0
        queue = deque([(start, 0)])
        while queue:
            x, d = queue.popleft()
            if d == cap:
                continue
            for s in ctx.simple_reflections:
                y = compose(s, x)
                if y not in table:
                    table[y] = d + 1
                    queue.append((y, d + 1))
    return table


@pytest.mark.parametrize("g", [2, 3])
def test_length_formula_against_word_search(g):
    cap = 4 if g == 2 else 6
    table = bfs_length_table(g, cap)
    adm = admissible_set(g)
    for x in adm.elements:
        assert x in table, element_to_text(x)
        assert length(x) == table[x]


def test_braid_relations_g2():
    ctx = make_context(2)
    s = ctx.simple_reflections
    orders = {(0, 1): 4, (1, 2): 4, (0, 2): 2}
    for (i, j), m in orders.items():
        prod = compose(s[i], s[j])
        assert element_power(prod, m) == identity_element(2)
        for smaller in range(1, m):
            assert element_power(prod, smaller) != identity_element(2)


def test_braid_orders_general_affine():
    # end nodes 4, adjacent middles 3, everything else 2
    ctx = make_context(3)
    s = ctx.simple_reflections
    expected = {(0, 1): 4, (1, 2): 3, (2, 3): 4, (0, 2): 2, (0, 3): 2, (1, 3): 2}
    for (i, j), m in expected.items():
        prod = compose(s[i], s[j])
        assert element_power(prod, m) == identity_element(3)
        assert all(
            element_power(prod, d) != identity_element(3) for d in range(1, m)
        )


def test_decompose_omega_round_trip():
    rng = random.Random(3)
    ctx = make_context(2)
    for _ in range(40):
        x = random_element(rng, 2, width=1)
        w, k = decompose_omega(x)
        assert w.similitude == 0
        assert compose(w, element_power(ctx.omega_generator, k)) == x


def test_reduced_word_evaluates_back():
    adm = admissible_set(2)
    for x in adm.elements:
        word = reduced_word(x)
        assert len(word.letters) == length(x)
        assert evaluate_word(2, word) == x


def test_bruhat_reflexive_antisymmetric():
    adm = admissible_set(2)
    elements = adm.sorted_elements()
    for x in elements:
        assert bruhat_leq(x, x)
    for x in elements:
        for y in elements:
            if bruhat_leq(x, y) and bruhat_leq(y, x):
                assert x == y
            if bruhat_leq(x, y) and x != y:
                assert length(x) < length(y)


def test_bruhat_transitive_on_admissible():
    elements = admissible_set(2).sorted_elements()
    for x in elements:
        for y in elements:
            for z in elements:
                if bruhat_leq(x, y) and bruhat_leq(y, z):
                    assert bruhat_leq(x, z)


def test_bruhat_key_pins():
    adm = admissible_set(2)
    tau = g2_element_by_name("tau")
    for x in adm.elements:
        assert bruhat_leq(tau, x)
    assert not bruhat_leq(
        g2_element_by_name("s1tau"), g2_element_by_name("s0s2tau")
    )
    # distinct omega powers are incomparable
    assert not bruhat_leq(identity_element(2), tau)


def test_hasse_diagram_covers():
    adm = admissible_set(2)
    elements = adm.sorted_elements()
    edges = hasse_diagram(elements)
    tau = g2_element_by_name("tau")
    out_of_tau = [b for a, b in edges if a == tau]
    assert len(out_of_tau) == 3
    for a, b in edges:
        assert length(b) == length(a) + 1
        assert bruhat_leq(a, b)
        t = compose(b, inverse(a))
        assert is_reflection(t)
    assert hasse_diagram([tau]) == []


def test_hasse_dot_shape():
    adm = admissible_set(2)
    elements = adm.sorted_elements()
    names = {x: adm.name_of(x) for x in elements}
    dot = hasse_to_dot(elements, names)
    assert dot.startswith("digraph")
    assert dot.count("->") == len(hasse_diagram(elements))
    assert 'label="tau"' in dot


def test_text_and_json_round_trip():
    adm = admissible_set(2)
    for x in adm.elements:
        assert element_from_json_dict(element_to_json_dict(x)) == x
    tau = g2_element_by_name("tau")
    assert element_to_text(tau) == "[(0,0,1,1),(13)(24)]"
    ident = identity_element(2)
    assert element_to_text(ident) == "[(0,0,0,0),(1)]"


@given(st.integers(min_value=-2, max_value=2), st.integers(min_value=-2, max_value=2))
@settings(max_examples=40, deadline=None)
def test_translation_lengths_add_on_dominant_ray(a, b):
    # t_{k mu} has length k * l(t_mu) for k >= 0
    k = abs(a) + abs(b)
    lam = tuple([k] * 2 + [0] * 2)
    assert length(translation(lam)) == 3 * k
