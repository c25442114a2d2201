"""Hermite and Smith normal forms: spec examples and canonicity properties."""

from hypothesis import given, settings, strategies as st

from grax.lattices import hnf, smith_normal_form


def test_hnf_diagonal_input():
    assert hnf([[2, 0], [0, 2]]).basis == ((2, 0), (0, 2))


def test_hnf_full_lattice():
    # brute-force closure of {(2,0),(0,3),(1,1)} under subtraction reaches
    # (1,0) and (0,1), so the span is all of Z^2
    L = hnf([[2, 0], [0, 3], [1, 1]])
    assert L.basis == ((1, 0), (0, 1))


def test_hnf_empty_is_zero_lattice():
    L = hnf([])
    assert L.rank == 0 and L.basis == ()


def test_membership_and_local_membership():
    L = hnf([[2, 0], [0, 3]])
    assert L.contains([2, 3])
    assert not L.contains([1, 0])
    # 1 = (1/2) * 2: denominator 2 is prime to 3, so 3-locally inside
    assert L.contains([1, 0], p=3)
    assert not L.contains([1, 0], p=2)


def test_snf_diag_2_3():
    inv, U, V = smith_normal_form([[2, 0], [0, 3]])
    assert inv == (1, 6)


def test_snf_identity_and_zero():
    assert smith_normal_form([[1, 0], [0, 1]])[0] == (1, 1)
    assert smith_normal_form([[0, 0], [0, 0]])[0] == (0, 0)


_mats = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-8, 8), min_size=n, max_size=n),
                           min_size=m, max_size=m)))


def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))]
            for i in range(len(A))]


@settings(max_examples=120, deadline=None)
@given(_mats)
def test_snf_transforms_and_chain(M):
    inv, U, V = smith_normal_form(M)
    D = _matmul(_matmul(U, M), V)
    for i in range(len(M)):
        for j in range(len(M[0])):
            want = inv[i] if (i == j and i < len(inv)) else 0
            assert D[i][j] == want
    for i in range(len(inv) - 1):
        if inv[i + 1]:
            assert inv[i] and inv[i + 1] % inv[i] == 0


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n),
                       min_size=n, max_size=n)))
def test_snf_preserves_absolute_determinant(M):
    def det(A):
        n = len(A)
        if n == 1:
            return A[0][0]
        return sum((-1) ** j * A[0][j] * det([r[:j] + r[j + 1:] for r in A[1:]])
                   for j in range(n))

    inv, _, _ = smith_normal_form(M)
    prod = 1
    for d in inv:
        prod *= d
    assert abs(det(M)) == abs(prod)


@settings(max_examples=120, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3),
                min_size=1, max_size=5),
       st.randoms(use_true_random=False))
def test_hnf_canonical_under_order_and_duplication(gens, rnd):
    L1 = hnf(gens)
    shuffled = list(gens) + [gens[0]]
    rnd.shuffle(shuffled)
    assert hnf(shuffled) == L1
    assert hnf([list(r) for r in L1.basis], 3) == L1
