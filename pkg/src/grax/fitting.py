"""Budgeted exact approximations of the Whitehead order, the denominator
ideal, and higher non-commutative Fitting invariants of matrices.

The Whitehead order of Z[G] is generated by reduced norms of all integral
matrices; that set is infinite, so xi_approx enumerates a budgeted family
and closes the resulting lattice under multiplication (products of reduced
norms are reduced norms of block-diagonal matrices, so every generator
remains genuine).  All lattices live in the conjugacy-class-sum basis of
the rational center, as a Hermite-normal-form integer lattice together
with one common denominator; that pair is canonical, so lattice equality
is literal equality.

For abelian groups the order is exactly the image of Z[G] and the minors
pool is complete by multilinearity, so fit_matrix agrees with the
classical Fitting ideal computed independently by fit_classical_oracle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from grax.algebra import (CentralElement, GroupAlgebraElement, GroupAlgebraMatrix,
                          adjoint_star, nrd)
from grax.groups import FiniteGroup
from grax.lattices import IntLattice, hnf, smith_normal_form
from grax.reps import irreps


@dataclass(frozen=True)
class Budget:
    """Enumeration bounds for the budgeted ideal approximations."""

    max_matrix_size: int = 2
    coeff_height: int = 1
    support: int = 2
    rounds: int = 4
    max_candidates: int = 20000

    @staticmethod
    def from_dict(d: dict) -> "Budget":
        known = {"max_matrix_size", "coeff_height", "support", "rounds",
                 "max_candidates"}
        bad = set(d) - known
        if bad:
            raise ValueError(f"unknown budget keys: {sorted(bad)}")
        return Budget(**{k: int(v) for k, v in d.items()})


@dataclass(frozen=True)
class CentralLattice:
    """A finitely generated lattice of central elements, in canonical form.

    lattice holds integer vectors in the class-sum basis; the lattice of
    central elements is (1/denominator) times it.  provenance records how
    the generators arose; stable means one further enumeration round added
    nothing; exact marks the cases where the result is provably the whole
    ideal rather than an under-approximation.
    """

    group: FiniteGroup
    denominator: int
    lattice: IntLattice
    provenance: tuple[str, ...] = ()
    stable: bool = False
    exact: bool = False

    @property
    def ambient_dim(self) -> int:
        return len(self.group.conjugacy_classes)

    def contains(self, x: CentralElement, p: int | None = None) -> bool:
        vec = [c * self.denominator for c in x.coords()]
        return self.lattice.contains(vec, p)

    def contains_lattice(self, other: "CentralLattice") -> bool:
        for row in other.lattice.basis:
            vec = [Fraction(v, other.denominator) * self.denominator for v in row]
            if any(x.denominator != 1 for x in vec):
                return False
            if not self.lattice.contains([int(x) for x in vec]):
                return False
        return True

    def elements(self) -> list[CentralElement]:
        """Central elements corresponding to the HNF basis rows."""
        return [CentralElement.from_coords(
                    self.group, [Fraction(v, self.denominator) for v in row])
                for row in self.lattice.basis]

    def __eq__(self, other):
        return (isinstance(other, CentralLattice)
                and self.group is other.group
                and self.denominator == other.denominator
                and self.lattice == other.lattice)


def lattice_from_vectors(G: FiniteGroup, vectors, provenance=(),
                         stable=False, exact=False) -> CentralLattice:
    """Canonical CentralLattice from rational class-sum coordinate vectors."""
    coords = [[Fraction(c) for c in row] for row in vectors]
    denom = 1
    for row in coords:
        for c in row:
            denom = denom * c.denominator // math.gcd(denom, c.denominator)
    rows = [[int(c * denom) for c in row] for row in coords]
    lat = hnf(rows, len(G.conjugacy_classes))
    # minimal denominator: divide out any common factor shared with all entries
    g = denom
    for row in lat.basis:
        for v in row:
            g = math.gcd(g, v)
    if g > 1:
        lat = IntLattice(lat.ambient_rank,
                         tuple(tuple(v // g for v in row) for row in lat.basis))
        denom //= g
    return CentralLattice(G, denom, lat, tuple(provenance), stable, exact)


def lattice_from_central(G: FiniteGroup, gens, provenance=(),
                         stable=False, exact=False) -> CentralLattice:
    """Canonical CentralLattice spanned over Z by the given central elements."""
    return lattice_from_vectors(G, [g.coords() for g in gens],
                                provenance, stable, exact)


def _abelian_image_lattice(G: FiniteGroup) -> CentralLattice:
    # class coordinates of the image of g are its coefficient vector, so the
    # image of Z[G] is the full integer lattice
    rows = [[int(i == j) for j in range(G.order)] for i in range(G.order)]
    return lattice_from_vectors(G, rows, ("image of Z[G]",), stable=True, exact=True)


def _small_elements(G: FiniteGroup, budget: Budget):
    """Integral group-algebra elements with bounded support and height."""
    out = []
    heights = [h for h in range(-budget.coeff_height, budget.coeff_height + 1) if h]
    for size in range(1, budget.support + 1):
        for supp in itertools.combinations(range(G.order), size):
            for coeffs in itertools.product(heights, repeat=size):
                vec = [0] * G.order
                for g, c in zip(supp, coeffs):
                    vec[g] = c
                out.append(GroupAlgebraElement.from_coeffs(G, vec))
                if len(out) >= budget.max_candidates:
                    return out
    return out


def _small_matrices(G: FiniteGroup, size: int, budget: Budget):
    """Matrices with monomial entries 0 or g, capped by the candidate budget."""
    pool = [GroupAlgebraElement.zero(G)] + \
           [GroupAlgebraElement.basis(G, g) for g in range(G.order)]
    count = 0
    for picks in itertools.product(range(len(pool)), repeat=size * size):
        if count >= budget.max_candidates:
            return
        grid = [[pool[picks[i * size + j]] for j in range(size)] for i in range(size)]
        count += 1
        yield GroupAlgebraMatrix.from_entries(G, grid)


def xi_approx(G: FiniteGroup, budget: Budget = Budget()) -> CentralLattice:
    """Sound under-approximation of the Whitehead order of Z[G].

    Every generator is the reduced norm of an explicit integral matrix;
    the lattice is closed under multiplication by re-generation from its
    HNF basis until stable or out of rounds.  Abelian groups return the
    image of Z[G] exactly.
    """
    if G.is_abelian():
        return _abelian_image_lattice(G)
    gens = []
    prov = []
    for x in _small_elements(G, budget):
        gens.append(nrd(GroupAlgebraMatrix.from_entries(G, [[x]])))
    prov.append(f"1x1 elements: support<={budget.support} height<={budget.coeff_height}")
    for size in range(2, budget.max_matrix_size + 1):
        for M in _small_matrices(G, size, budget):
            gens.append(nrd(M))
        prov.append(f"{size}x{size} monomial matrices")
    for x in gens:
        if not x.is_integral():
            raise AssertionError("Whitehead generator fails integrality")
    current = lattice_from_central(G, gens, prov)
    stable = False
    for _ in range(budget.rounds):
        basis = current.elements()
        products = [a * b for a, b in itertools.product(basis, basis)]
        merged = lattice_from_central(G, basis + products, prov)
        if merged == current:
            stable = True
            break
        current = merged
    return CentralLattice(G, current.denominator, current.lattice,
                          tuple(prov), stable, False)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a budgeted decision procedure."""

    kind: str  # "certified-no" | "passed-budget" | "exact-yes"
    witness: object = None

    @property
    def passed(self) -> bool:
        return self.kind != "certified-no"


def delta_check(x: CentralElement, G: FiniteGroup,
                budget: Budget = Budget()) -> Verdict:
    """Test membership of x in the denominator ideal, up to budget.

    certified-no returns a concrete integral matrix M with x * M* not
    integral.  For abelian G the question is decided exactly (the ideal is
    the whole ring, so membership is integrality of the descent).
    """
    if G.is_abelian():
        z = x.to_group_algebra()
        if z.is_integral():
            return Verdict("exact-yes")
        return Verdict("certified-no", GroupAlgebraMatrix.identity(G, 1))
    for g in range(G.order):
        M = GroupAlgebraMatrix.from_entries(G, [[GroupAlgebraElement.basis(G, g)]])
        if not _x_star_integral(x, M):
            return Verdict("certified-no", M)
    for y in _small_elements(G, budget):
        M = GroupAlgebraMatrix.from_entries(G, [[y]])
        if not _x_star_integral(x, M):
            return Verdict("certified-no", M)
    for size in range(2, budget.max_matrix_size + 1):
        for M in _small_matrices(G, size, budget):
            if not _x_star_integral(x, M):
                return Verdict("certified-no", M)
    return Verdict("passed-budget")


def _x_star_integral(x: CentralElement, M: GroupAlgebraMatrix) -> bool:
    star = adjoint_star(M)
    xg = x.to_group_algebra()
    return all((xg * e).is_integral() for row in star.entries for e in row)


# -- Fitting invariants ------------------------------------------------------

def _replacement_pool(G: FiniteGroup, nrows: int, budget: Budget):
    """Columns available for replacement: standard basis vectors b_i, plus
    bounded integer combinations of two of them when the budget allows.

    Group translates g*b_i are omitted: their minors differ from the b_i
    minors by reduced-norm factors of group elements, which the closing
    multiplication against the Whitehead generators already supplies.
    """
    one = GroupAlgebraElement.one(G)
    zero = GroupAlgebraElement.zero(G)
    pool = []
    for i in range(nrows):
        col = [zero] * nrows
        col[i] = one
        pool.append(tuple(col))
    if budget.coeff_height >= 2:
        for i in range(nrows):
            for j in range(i + 1, nrows):
                for a in range(1, budget.coeff_height + 1):
                    col = [zero] * nrows
                    col[i] = one
                    col[j] = one * a
                    pool.append(tuple(col))
    return pool


def fit_matrix(M: GroupAlgebraMatrix, a: int,
               budget: Budget = Budget(),
               xi: CentralLattice | None = None) -> CentralLattice:
    """The a-th non-commutative Fitting invariant of a matrix, as a lattice.

    Enumerates reduced norms of all cols x cols minors of M with at most a
    columns replaced from the pool, multiplies by the Whitehead generators,
    and spans.  Exact for abelian groups and for a = 0 with square M; a
    sound under-approximation otherwise.
    """
    if a < 0:
        raise ValueError("Fitting index must be nonnegative")
    if M.rows < M.cols:
        raise ValueError("matrix must have at least as many rows as columns")
    G = M.group
    abelian = G.is_abelian()
    if xi is None and not abelian:
        xi = xi_approx(G, budget)
    d_, d = M.rows, M.cols
    pool = _replacement_pool(G, d_, budget)
    grids = []
    for t in range(0, min(a, d) + 1):
        for col_subset in itertools.combinations(range(d), t):
            for replacement in itertools.product(pool, repeat=t):
                for row_subset in itertools.combinations(range(d_), d):
                    grid = []
                    for i in row_subset:
                        row = []
                        for j in range(d):
                            if j in col_subset:
                                row.append(replacement[col_subset.index(j)][i])
                            else:
                                row.append(M.entries[i][j])
                        grid.append(row)
                    grids.append(grid)
    exact = abelian or (a == 0 and d_ == d)
    if abelian:
        # coefficient space: the class coordinates of a central group-ring
        # element are its coefficients, and multiplying by the order
        # generators (group elements) permutes them
        vectors = []
        for grid in grids:
            det = _leibniz_det_grid(G, grid)
            for g in range(G.order):
                vectors.append([det.coeffs[G.mul(G.inv(g), h)].as_rational()
                                for h in range(G.order)])
        prov = (f"Fit^{a} of {d_}x{d}: {len(grids)} minors x |G| translates",)
        return lattice_from_vectors(G, vectors, prov, stable=True, exact=exact)
    norm_gens = [nrd(GroupAlgebraMatrix.from_entries(G, grid)) for grid in grids]
    xi_els = xi.elements()
    gens = [x * y for x in norm_gens for y in xi_els]
    prov = (f"Fit^{a} of {d_}x{d}: {len(norm_gens)} minors x {len(xi_els)} order gens",)
    return lattice_from_central(G, gens, prov, stable=xi.stable or xi.exact, exact=exact)


def fit_classical_oracle(M: GroupAlgebraMatrix, a: int) -> CentralLattice:
    """Classical a-th Fitting ideal over an abelian group ring, computed as
    the ideal of (cols - a)-minors by direct Leibniz expansion.

    Independent of the fit_matrix code path: determinants are computed in
    the commutative group ring itself and only then mapped to central
    tuples character by character.
    """
    G = M.group
    if not G.is_abelian():
        raise ValueError("the classical oracle applies to abelian groups only")
    if a < 0:
        raise ValueError("Fitting index must be nonnegative")
    k = M.cols - a
    reps = irreps(G)
    if k <= 0:
        gens = [CentralElement.one(G)]
    else:
        gens = []
        for row_subset in itertools.combinations(range(M.rows), k):
            for col_subset in itertools.combinations(range(M.cols), k):
                det = _leibniz_det(G, M, row_subset, col_subset)
                gens.append(CentralElement(
                    G, tuple(_apply_char(rep, det) for rep in reps)))
    # translating by a group element permutes class coordinates, so each
    # minor needs one coordinate conversion
    vectors = []
    for x in gens:
        co = x.coords()
        for g in range(G.order):
            vectors.append([co[G.mul(G.inv(g), h)] for h in range(G.order)])
    return lattice_from_vectors(G, vectors,
                                (f"classical {k}-minors",), stable=True, exact=True)


def _leibniz_det(G: FiniteGroup, M: GroupAlgebraMatrix, rows, cols) -> GroupAlgebraElement:
    return _leibniz_det_grid(G, [[M.entries[r][c] for c in cols] for r in rows])


def _leibniz_det_grid(G: FiniteGroup, grid) -> GroupAlgebraElement:
    k = len(grid)
    acc = GroupAlgebraElement.zero(G)
    for perm in itertools.permutations(range(k)):
        term = GroupAlgebraElement.one(G)
        for i in range(k):
            term = term * grid[i][perm[i]]
        if _perm_sign(perm) < 0:
            term = -term
        acc = acc + term
    return acc


def _perm_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _apply_char(rep, x: GroupAlgebraElement):
    acc = None
    for g, c in enumerate(x.coeffs):
        if c.is_zero():
            continue
        term = c * rep.character[g]
        acc = term if acc is None else acc + term
    from grax.linalg import ZERO
    return acc if acc is not None else ZERO


def fit_transpose(M: GroupAlgebraMatrix, a: int,
                  budget: Budget = Budget(),
                  xi: CentralLattice | None = None) -> CentralLattice:
    """Fitting invariant of the transpose presentation: fit of iota_#(M^tr).

    Requires square M so that the transposed matrix still has rows >= cols.
    """
    if M.rows != M.cols:
        raise ValueError("transpose Fitting invariants need a square matrix here")
    return fit_matrix(M.transpose().involute_entries(), a, budget, xi)


def hash_lattice(L: CentralLattice) -> CentralLattice:
    """Image of a central lattice under the # involution."""
    return lattice_from_central(L.group,
                                [x.hash_involution() for x in L.elements()],
                                L.provenance + ("#",), L.stable, L.exact)


# -- annihilation ------------------------------------------------------------

def _theta_int_matrix(M: GroupAlgebraMatrix):
    """Integer matrix of x -> x*M on Z[G]^d, rows indexed by (slot, group label)."""
    G = M.group
    d = M.rows
    n = G.order
    size = d * n

    def flat(slot, g):
        return slot * n + g

    rows = []
    for t in range(d):
        for g in range(n):
            vec = [0] * size
            for j in range(d):
                e = M.entries[t][j]
                for h, c in enumerate(e.coeffs):
                    if not c.is_zero():
                        q = c.as_rational()
                        if q.denominator != 1:
                            raise ValueError("integral matrix required")
                        vec[flat(j, G.mul(g, h))] += int(q)
            rows.append(vec)
    return rows


def annihilation_check(M: GroupAlgebraMatrix, x: CentralElement) -> bool:
    """Whether x * nrd(M) annihilates the cokernel of x -> x*M on Z[G]^d.

    Preconditions: every component of nrd(M) is nonzero (finite cokernel)
    and x * nrd(M) descends to an integral group-algebra element.
    """
    if M.rows != M.cols:
        raise ValueError("annihilation check needs a square matrix")
    if not M.is_integral():
        raise ValueError("annihilation check needs an integral matrix")
    G = M.group
    n = nrd(M)
    if n.has_zero_component():
        raise ValueError("reduced norm has a zero component: infinite cokernel")
    y = (x * n).to_group_algebra()
    if not y.is_integral():
        raise ValueError("x * nrd(M) is not integral")
    d = M.rows
    image_rows = _theta_int_matrix(M)
    # column space of A = image of theta; SNF membership test for y * e_(j,h)
    A = [[image_rows[c][r] for c in range(len(image_rows))] for r in range(len(image_rows))]
    invariants, U, V = smith_normal_form(A)
    size = d * G.order
    for j in range(d):
        for h in range(G.order):
            target = [0] * size
            for g, c in enumerate(y.coeffs):
                if not c.is_zero():
                    target[j * G.order + G.mul(g, h)] += int(c.as_rational())
            w = [sum(U[r][s] * target[s] for s in range(size)) for r in range(size)]
            for r in range(size):
                dr = invariants[r] if r < len(invariants) else 0
                if dr == 0:
                    if w[r] != 0:
                        return False
                elif w[r] % dr:
                    return False
    return True
