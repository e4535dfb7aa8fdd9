import itertools

import pytest
from hypothesis import given, settings

import oracles
from conftest import plumbings, random_instance
from plumbtree import (EdgesNotOnDirectedPath, IntMatrix, all_labelings,
                       above_set, below_set, directed_path,
                       enumerate_matched_trees, intersection_matrix,
                       pairing_by_conjugation, pairing_closed_form,
                       path_edge_counts, phi_inverse_matrix, phi_matrix,
                       seifert_matrix)


def column(m, v):
    """Image of the basis vector at ``v`` as a {label: coeff} dict."""
    return {x: m[x, v] for x in m.basis if m[x, v]}


def test_phi_t1(T1):
    phi = phi_matrix(T1)
    assert column(phi, "w") == {"b": 1}
    assert column(phi, "b") == {"w": -1}


def test_phi_chain2(chain2):
    phi = phi_matrix(chain2)
    assert column(phi, "b1") == {"w2": 1, "w1": -1}
    assert column(phi, "b2") == {"w2": -1}


def test_phi_inverse_examples(T1, chain2):
    inv = phi_inverse_matrix(T1)
    assert column(inv, "b") == {"w": 1}
    assert column(inv, "w") == {"b": -1}
    inv2 = phi_inverse_matrix(chain2)
    assert column(inv2, "b2") == {"w1": 1, "w2": 1}
    assert column(inv2, "w1") == {"b1": -1, "b2": -1}


@pytest.mark.parametrize("n_pairs", range(1, 6))
def test_phi_times_inverse_is_identity(n_pairs):
    for t in enumerate_matched_trees(n_pairs):
        p, q = phi_matrix(t), phi_inverse_matrix(t)
        ident = IntMatrix.identity(t.canonical_order)
        assert p @ q == ident
        assert q @ p == ident


def test_conjugation_t1(fp_t1):
    order = ("b", "w")
    assert pairing_by_conjugation(fp_t1).reindex(order).to_lists() == [[3, 0], [-1, -2]]
    minus = fp_t1.with_signs([-1])
    assert pairing_by_conjugation(minus).reindex(order).to_lists() == [[3, 1], [0, -2]]
    # hand value: pairing(c_w, c_b) = theta(-h_b, h_w) = -theta(h_b, h_w)
    assert pairing_by_conjugation(fp_t1)["w", "b"] == -seifert_matrix(fp_t1)["b", "w"]


def test_conjugation_uses_row_vector_convention(fp_chain2):
    # entry (u, v) = (P e_u)^T theta (P e_v), computed without IntMatrix algebra
    th = seifert_matrix(fp_chain2).to_lists()
    p = phi_inverse_matrix(fp_chain2.tree).to_lists()
    pt = [list(r) for r in zip(*p)]
    ref = oracles.matmul(oracles.matmul(pt, th), p)
    assert pairing_by_conjugation(fp_chain2).to_lists() == ref


def test_closed_form_t1(fp_t1):
    assert pairing_closed_form(fp_t1)["b", "w"] == 0
    assert pairing_closed_form(fp_t1.with_signs([-1]))["b", "w"] == 1
    assert pairing_closed_form(fp_t1)["b", "b"] == 3
    assert pairing_closed_form(fp_t1)["w", "w"] == -2


def test_closed_form_chain2(fp_chain2):
    closed = pairing_closed_form(fp_chain2)
    assert closed["w1", "b2"] == -2
    assert closed["b1", "b2"] == 3
    assert closed == pairing_by_conjugation(fp_chain2)


def test_path_edge_counts(fp_t1, fp_chain2):
    assert path_edge_counts(fp_t1, [("b", "w")]) == (1, 0, 0, 0)
    gamma = directed_path(fp_chain2.tree, "b2", "w1")
    assert path_edge_counts(fp_chain2, gamma) == (2, 0, 1, 0)
    assert path_edge_counts(fp_chain2, []) == (0, 0, 0, 0)
    mixed = fp_chain2.with_signs([-1, -1, 1])
    assert path_edge_counts(mixed, gamma) == (1, 1, 0, 1)


def test_path_edge_counts_rejects_bad_paths(fp_chain2):
    with pytest.raises(EdgesNotOnDirectedPath):
        path_edge_counts(fp_chain2, [("w1", "b1")])
    with pytest.raises(EdgesNotOnDirectedPath):
        path_edge_counts(fp_chain2, [("b2", "w2"), ("b1", "w1")])
    with pytest.raises(EdgesNotOnDirectedPath):
        path_edge_counts(fp_chain2, [("b2", "w1")])


@pytest.mark.parametrize("n_pairs", [1, 2, 3])
def test_closed_form_exhaustive_small(n_pairs):
    for t in enumerate_matched_trees(n_pairs):
        framing = {v: (-1) ** i * (i + 2) for i, v in enumerate(t.canonical_order)}
        for fp in all_labelings(t, framing):
            assert pairing_closed_form(fp) == pairing_by_conjugation(fp)


def test_closed_form_random(rng):
    for _ in range(500):
        fp = random_instance(rng, max_vertices=12)
        assert pairing_closed_form(fp) == pairing_by_conjugation(fp)


@settings(max_examples=100, deadline=None)
@given(plumbings(max_pairs=6))
def test_diagonal_specialisation(fp):
    t, f = fp.tree, fp.framing
    m = pairing_closed_form(fp)
    for b in t.blacks:
        assert m[b, b] == sum(f[w] for w in below_set(t, b))
    for w in t.whites:
        assert m[w, w] == sum(f[b] for b in above_set(t, w))


@settings(max_examples=100, deadline=None)
@given(plumbings(max_pairs=6))
def test_mixed_entries_vanish_without_path(fp):
    t = fp.tree
    m = pairing_by_conjugation(fp)
    for b, w in itertools.product(t.blacks, t.whites):
        if not directed_path(t, b, w):
            assert m[b, w] == 0 and m[w, b] == 0


@settings(max_examples=100, deadline=None)
@given(plumbings(max_pairs=6))
def test_antisymmetrisation_is_conjugated_intersection_form(fp):
    q = phi_inverse_matrix(fp.tree)
    m = pairing_by_conjugation(fp)
    assert m.T - m == q.T @ intersection_matrix(fp) @ q
