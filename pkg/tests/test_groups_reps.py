"""Group catalog and irreducible-representation data, checked exactly."""

import pytest

from grax.algebra import GroupAlgebraElement
from grax.cyclotomic import CycloNum
from grax.groups import group_from_catalog
from grax.reps import central_idempotent, contragredient, contragredient_permutation, irreps

ONE = CycloNum.from_rational(1)

CATALOG = ["C1", "C2", "C6", "C8", "C2xC3", "D4", "D5", "S3", "S4", "A4", "Q8"]


def test_c6_basic():
    G = group_from_catalog("C6")
    assert G.order == 6 and G.is_abelian() and G.exponent == 6


def test_s3_basic():
    G = group_from_catalog("S3")
    assert G.order == 6 and not G.is_abelian() and G.exponent == 6


def test_q8_basic():
    G = group_from_catalog("Q8")
    assert G.order == 8 and G.exponent == 4
    assert sum(1 for g in range(8) if G.element_order(g) == 4) == 6


def test_unknown_group_rejected():
    with pytest.raises(ValueError):
        group_from_catalog("E8")
    with pytest.raises(ValueError):
        group_from_catalog("D2")


def test_c2_characters():
    rs = irreps(group_from_catalog("C2"))
    chars = sorted(tuple(v.as_rational() for v in r.character) for r in rs)
    assert chars == [(1, -1), (1, 1)]


def test_degree_patterns():
    assert [r.degree for r in irreps(group_from_catalog("S3"))] == [1, 1, 2]
    assert [r.degree for r in irreps(group_from_catalog("Q8"))] == [1, 1, 1, 1, 2]
    assert [r.degree for r in irreps(group_from_catalog("S4"))] == [1, 1, 2, 3, 3]
    assert [r.degree for r in irreps(group_from_catalog("A4"))] == [1, 1, 1, 3]


@pytest.mark.parametrize("name", CATALOG)
def test_homomorphism_on_all_pairs(name):
    # construction re-verifies, but assert independently on the stored data
    G = group_from_catalog(name)
    for rep in irreps(G):
        c = rep.degree
        for a in range(G.order):
            for b in range(G.order):
                m = rep.matrices[G.mul(a, b)]
                prod = [[sum((rep.matrices[a][i][t] * rep.matrices[b][t][j]
                              for t in range(c)), CycloNum.from_rational(0))
                         for j in range(c)] for i in range(c)]
                assert all(prod[i][j] == m[i][j] for i in range(c) for j in range(c))


@pytest.mark.parametrize("name", CATALOG)
def test_character_orthogonality_and_dimension(name):
    G = group_from_catalog(name)
    rs = irreps(G)
    assert sum(r.degree ** 2 for r in rs) == G.order
    for i, r in enumerate(rs):
        for j, s in enumerate(rs):
            acc = CycloNum.from_rational(0)
            for g in range(G.order):
                acc = acc + r.character[g] * s.character[G.inv(g)]
            assert acc == (G.order if i == j else 0)


def test_column_orthogonality():
    G = group_from_catalog("S3")
    rs = irreps(G)
    for g in range(G.order):
        for h in range(G.order):
            acc = CycloNum.from_rational(0)
            for r in rs:
                acc = acc + r.character[g] * r.character[G.inv(h)]
            same_class = G.class_of[g] == G.class_of[h]
            expected = G.order // len(G.conjugacy_classes[G.class_of[g]]) if same_class else 0
            assert acc == expected


def test_trivial_idempotent_c2():
    from fractions import Fraction
    G = group_from_catalog("C2")
    e = central_idempotent(G, 0)
    assert [c.as_rational() for c in e.coeffs] == [Fraction(1, 2), Fraction(1, 2)]


def test_idempotents_orthogonal_s3():
    G = group_from_catalog("S3")
    es = [central_idempotent(G, i) for i in range(3)]
    for i, e in enumerate(es):
        assert (e * e - e).is_zero()
        for j, f in enumerate(es):
            if i != j:
                assert (e * f).is_zero()


def test_idempotents_sum_to_one_q8():
    G = group_from_catalog("Q8")
    total = GroupAlgebraElement.zero(G)
    for i in range(5):
        total = total + central_idempotent(G, i)
    assert (total - GroupAlgebraElement.one(G)).is_zero()


@pytest.mark.parametrize("name", ["C6", "S3", "Q8"])
def test_idempotents_conjugation_invariant(name):
    G = group_from_catalog(name)
    for i in range(len(irreps(G))):
        e = central_idempotent(G, i)
        for g in range(G.order):
            conj = GroupAlgebraElement.basis(G, g) * e * GroupAlgebraElement.basis(G, G.inv(g))
            assert (conj - e).is_zero()


def test_contragredient_s3_degree2_self():
    G = group_from_catalog("S3")
    rep = irreps(G)[2]
    assert contragredient(rep).character == rep.character


def test_contragredient_c3_swaps_nontrivial():
    G = group_from_catalog("C3")
    perm = contragredient_permutation(G)
    assert perm[0] == 0 and sorted(perm[1:]) == [1, 2] and perm[1] != 1


@pytest.mark.parametrize("name", CATALOG)
def test_contragredient_preserves_degree(name):
    G = group_from_catalog(name)
    for rep in irreps(G):
        assert contragredient(rep).degree == rep.degree
