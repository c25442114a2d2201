"""Whitehead-order approximation, denominator ideal, Fitting invariants,
annihilation: spec examples plus randomized exact comparisons."""

import random

import pytest

from grax.algebra import CentralElement, GroupAlgebraElement, GroupAlgebraMatrix, nrd
from grax.cyclotomic import CycloNum
from grax.fitting import (Budget, annihilation_check, delta_check, fit_classical_oracle,
                          fit_matrix, fit_transpose, hash_lattice, lattice_from_central,
                          xi_approx)
from grax.groups import group_from_catalog
from grax.lattices import smith_normal_form


def rand_gam(rng, G, r, c, h=3):
    return GroupAlgebraMatrix.from_entries(
        G, [[GroupAlgebraElement.from_coeffs(
                G, [rng.randrange(-h, h + 1) for _ in range(G.order)])
             for _ in range(c)] for _ in range(r)])


SMALL = Budget(max_matrix_size=1)


def test_xi_abelian_exact():
    for n in (1, 2, 5, 6):
        G = group_from_catalog(f"C{n}")
        xi = xi_approx(G)
        assert xi.exact and xi.stable
        # the image of Z[G] in class coordinates is the full integer lattice
        assert xi.denominator == 1
        assert xi.lattice.basis == tuple(
            tuple(int(i == j) for j in range(n)) for i in range(n))


def test_xi_trivial_group_is_z():
    xi = xi_approx(group_from_catalog("C1"))
    assert xi.lattice.basis == ((1,),) and xi.denominator == 1


def test_xi_q8_contains_derived_generator():
    G = group_from_catalog("Q8")
    xi = xi_approx(G)
    target = CentralElement(G, tuple(CycloNum.from_rational(v)
                                     for v in (2, 0, 2, 0, 2)))
    # the generator is nrd(1 + i), so it must be a genuine member
    x = GroupAlgebraElement.from_coeffs(G, [1, 0, 1, 0, 0, 0, 0, 0])
    assert nrd(GroupAlgebraMatrix.from_entries(G, [[x]])) == target
    assert xi.contains(target)
    assert xi.stable


def test_xi_monotone_in_budget():
    G = group_from_catalog("S3")
    small = xi_approx(G, Budget(max_matrix_size=1, support=1))
    big = xi_approx(G, Budget(max_matrix_size=1, support=2))
    assert big.contains_lattice(small)


def test_delta_abelian_exact():
    G = group_from_catalog("C6")
    assert delta_check(CentralElement.one(G), G).kind == "exact-yes"
    half = CentralElement.from_rational(G, "1/2")
    v = delta_check(half, G)
    assert v.kind == "certified-no"


def test_delta_order_times_one_passes():
    for name in ("S3", "Q8", "D4"):
        G = group_from_catalog(name)
        v = delta_check(CentralElement.from_rational(G, G.order), G,
                        Budget(max_matrix_size=2, max_candidates=200))
        assert v.passed


def test_delta_rejects_idempotent_image_q8():
    G = group_from_catalog("Q8")
    e_triv = CentralElement(G, tuple(CycloNum.from_rational(v)
                                     for v in (1, 0, 0, 0, 0)))
    v = delta_check(e_triv, G, SMALL)
    assert v.kind == "certified-no"
    assert v.witness.rows == 1  # rejected at the one-by-one stage


def test_fit_square_a0_is_principal():
    rng = random.Random(0)
    for name in ("C4", "S3"):
        G = group_from_catalog(name)
        xi = xi_approx(G, SMALL)
        M = rand_gam(rng, G, 2, 2, 2)
        f0 = fit_matrix(M, 0, xi=xi)
        principal = [x * nrd(M) for x in xi.elements()]
        assert f0 == lattice_from_central(G, principal)


def test_fit_trivial_group_examples():
    G = group_from_catalog("C1")
    M = GroupAlgebraMatrix.from_int_grid(G, [[2, 0], [0, 3]])
    assert fit_matrix(M, 0).lattice.basis == ((6,),)
    assert fit_matrix(M, 1).lattice.basis == ((1,),)
    assert fit_classical_oracle(M, 0).lattice.basis == ((6,),)
    assert fit_classical_oracle(M, 1).lattice.basis == ((1,),)


def test_fit_unit_ideal_for_large_a():
    G = group_from_catalog("C3")
    rng = random.Random(1)
    M = rand_gam(rng, G, 3, 2, 2)
    unit_rows = tuple(tuple(int(i == j) for j in range(3)) for i in range(3))
    for a in (2, 3, 5):
        oracle = fit_classical_oracle(M, a)
        assert oracle.denominator == 1 and oracle.lattice.basis == unit_rows
    assert fit_matrix(M, 2).lattice.basis == unit_rows


def test_fit_negative_a_rejected():
    G = group_from_catalog("C2")
    with pytest.raises(ValueError):
        fit_matrix(GroupAlgebraMatrix.identity(G, 1), -1)
    with pytest.raises(ValueError):
        fit_classical_oracle(GroupAlgebraMatrix.identity(G, 1), -1)


def test_fit_oracle_equivalence_random():
    rng = random.Random(2)
    for _ in range(12):
        n = rng.randrange(1, 7)
        G = group_from_catalog(f"C{n}")
        d = rng.randrange(1, 4)
        dp = rng.randrange(d, 4)
        M = rand_gam(rng, G, dp, d, 4)
        for a in (0, 1, 2):
            assert fit_matrix(M, a) == fit_classical_oracle(M, a)


def test_fit_chain_s3():
    rng = random.Random(3)
    G = group_from_catalog("S3")
    xi = xi_approx(G, SMALL)
    for _ in range(5):
        M = rand_gam(rng, G, 2, 2, 2)
        f = [fit_matrix(M, a, xi=xi) for a in (0, 1, 2)]
        assert f[1].contains_lattice(f[0])
        assert f[2].contains_lattice(f[1])


def test_fit_oracle_rejects_nonabelian():
    G = group_from_catalog("S3")
    with pytest.raises(ValueError):
        fit_classical_oracle(GroupAlgebraMatrix.identity(G, 1), 0)


def test_fit_transpose_a0_d4():
    rng = random.Random(4)
    G = group_from_catalog("D4")
    xi = xi_approx(G, SMALL)
    for _ in range(4):
        M = rand_gam(rng, G, 2, 2, 2)
        assert fit_transpose(M, 0, xi=xi) == hash_lattice(fit_matrix(M, 0, xi=xi))


def test_fit_transpose_abelian_a1():
    rng = random.Random(5)
    G = group_from_catalog("C6")
    for _ in range(6):
        M = rand_gam(rng, G, 2, 2, 3)
        assert fit_transpose(M, 1) == hash_lattice(fit_matrix(M, 1))


def test_fit_transpose_symmetric_fixed():
    rng = random.Random(6)
    G = group_from_catalog("S3")
    xi = xi_approx(G, SMALL)
    a = GroupAlgebraElement.from_coeffs(G, [rng.randrange(-2, 3) for _ in range(6)])
    sym = a + a.involute()
    M = GroupAlgebraMatrix.from_entries(G, [[sym]])
    assert fit_transpose(M, 0, xi=xi) == fit_matrix(M, 0, xi=xi)


def test_annihilation_trivial_group():
    G = group_from_catalog("C1")
    M = GroupAlgebraMatrix.from_int_grid(G, [[2, 1], [1, 2]])
    assert annihilation_check(M, CentralElement.one(G))


def test_annihilation_c2_example():
    # M = [2 + g]: the integer matrix of multiplication is [[2,1],[1,2]],
    # whose Smith invariants are (1, 3); nrd = 3 at the trivial character
    invariants, _, _ = smith_normal_form([[2, 1], [1, 2]])
    assert invariants == (1, 3)
    G = group_from_catalog("C2")
    M = GroupAlgebraMatrix.from_entries(
        G, [[GroupAlgebraElement.from_coeffs(G, [2, 1])]])
    assert annihilation_check(M, CentralElement.one(G))


def test_annihilation_random_s3():
    rng = random.Random(7)
    G = group_from_catalog("S3")
    done = 0
    while done < 8:
        M = rand_gam(rng, G, 2, 2, 2)
        if nrd(M).has_zero_component():
            continue
        done += 1
        assert annihilation_check(M, CentralElement.from_rational(G, 6))


def test_annihilation_preconditions():
    G = group_from_catalog("C2")
    singular = GroupAlgebraMatrix.from_entries(
        G, [[GroupAlgebraElement.from_coeffs(G, [1, 1])]])
    with pytest.raises(ValueError):
        annihilation_check(singular, CentralElement.one(G))
    M = GroupAlgebraMatrix.from_entries(
        G, [[GroupAlgebraElement.from_coeffs(G, [2, 1])]])
    with pytest.raises(ValueError):
        annihilation_check(M, CentralElement.from_rational(G, "1/5"))
