"""Group-algebra elements and matrices, the Wedderburn isomorphism, reduced
norms, generalized adjoints, and the # involution.

The splitting field is Q(zeta_e) with e the group exponent.  A central
element is stored as its tuple of values at the catalog irreducibles; the
Galois-consistency invariant (values at sigma-conjugate characters are
sigma-conjugate values) certifies that the tuple lies in the center of the
rational group algebra, and every constructor checks it exactly.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from grax import linalg
from grax.cyclotomic import CycloNum
from grax.groups import FiniteGroup
from grax.reps import IrreducibleRep, irreps, contragredient_permutation, galois_permutation

ZERO = CycloNum.from_rational(0)
ONE = CycloNum.from_rational(1)


def _as_cyclo(v) -> CycloNum:
    if isinstance(v, CycloNum):
        return v
    return CycloNum.from_rational(v)


@dataclass(frozen=True)
class GroupAlgebraElement:
    """An element of the group algebra: one coefficient per group label."""

    group: FiniteGroup
    coeffs: tuple[CycloNum, ...]

    @staticmethod
    def zero(G: FiniteGroup) -> "GroupAlgebraElement":
        return GroupAlgebraElement(G, (ZERO,) * G.order)

    @staticmethod
    def basis(G: FiniteGroup, g: int, scale=1) -> "GroupAlgebraElement":
        coeffs = [ZERO] * G.order
        coeffs[g] = _as_cyclo(scale)
        return GroupAlgebraElement(G, tuple(coeffs))

    @staticmethod
    def one(G: FiniteGroup) -> "GroupAlgebraElement":
        return GroupAlgebraElement.basis(G, 0)

    @staticmethod
    def from_coeffs(G: FiniteGroup, coeffs) -> "GroupAlgebraElement":
        coeffs = tuple(_as_cyclo(c) for c in coeffs)
        if len(coeffs) != G.order:
            raise ValueError("coefficient count must equal the group order")
        return GroupAlgebraElement(G, coeffs)

    def __add__(self, other):
        self._check(other)
        return GroupAlgebraElement(
            self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return GroupAlgebraElement(
            self.group, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return GroupAlgebraElement(self.group, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            c = _as_cyclo(other)
            return GroupAlgebraElement(self.group, tuple(a * c for a in self.coeffs))
        self._check(other)
        G = self.group
        out = [ZERO] * G.order
        for g, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for h, b in enumerate(other.coeffs):
                if not b.is_zero():
                    k = G.mul(g, h)
                    out[k] = out[k] + a * b
        return GroupAlgebraElement(G, tuple(out))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            return self * other
        return NotImplemented

    def involute(self) -> "GroupAlgebraElement":
        """The anti-involution sum c_g g  ->  sum c_g g^(-1)."""
        G = self.group
        out = [ZERO] * G.order
        for g, a in enumerate(self.coeffs):
            out[G.inv(g)] = a
        return GroupAlgebraElement(G, tuple(out))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def is_integral(self) -> bool:
        return all(c.is_rational() and c.as_rational().denominator == 1
                   for c in self.coeffs)

    def _check(self, other):
        if not isinstance(other, GroupAlgebraElement) or other.group is not self.group:
            raise ValueError("group mismatch in group-algebra arithmetic")

    def __repr__(self):
        terms = [f"{c!r}*[{g}]" for g, c in enumerate(self.coeffs) if not c.is_zero()]
        return f"GAE({self.group.name}: {' + '.join(terms) or '0'})"


@dataclass(frozen=True)
class GroupAlgebraMatrix:
    group: FiniteGroup
    rows: int
    cols: int
    entries: tuple[tuple[GroupAlgebraElement, ...], ...]

    @staticmethod
    def from_entries(G: FiniteGroup, grid) -> "GroupAlgebraMatrix":
        entries = tuple(tuple(e for e in row) for row in grid)
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged matrix")
            for e in row:
                if e.group is not G:
                    raise ValueError("entry group mismatch")
        return GroupAlgebraMatrix(G, rows, cols, entries)

    @staticmethod
    def identity(G: FiniteGroup, n: int) -> "GroupAlgebraMatrix":
        one, zero = GroupAlgebraElement.one(G), GroupAlgebraElement.zero(G)
        return GroupAlgebraMatrix.from_entries(
            G, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def from_int_grid(G: FiniteGroup, grid) -> "GroupAlgebraMatrix":
        """Grid of rational scalars becomes a matrix of scalar algebra elements."""
        return GroupAlgebraMatrix.from_entries(
            G, [[GroupAlgebraElement.basis(G, 0, v) for v in row] for row in grid])

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraMatrix):
            if other.group is not self.group or self.cols != other.rows:
                raise ValueError("shape or group mismatch")
            G = self.group
            out = []
            for i in range(self.rows):
                row = []
                for j in range(other.cols):
                    acc = GroupAlgebraElement.zero(G)
                    for t in range(self.cols):
                        if not self.entries[i][t].is_zero():
                            acc = acc + self.entries[i][t] * other.entries[t][j]
                    row.append(acc)
                out.append(row)
            return GroupAlgebraMatrix.from_entries(G, out)
        if isinstance(other, (int, Fraction, CycloNum, GroupAlgebraElement)):
            return GroupAlgebraMatrix.from_entries(
                self.group, [[e * other for e in row] for row in self.entries])
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, GroupAlgebraMatrix):
            return NotImplemented
        return GroupAlgebraMatrix.from_entries(
            self.group, [[a + b for a, b in zip(r1, r2)]
                         for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return GroupAlgebraMatrix.from_entries(
            self.group, [[a - b for a, b in zip(r1, r2)]
                         for r1, r2 in zip(self.entries, other.entries)])

    def transpose(self) -> "GroupAlgebraMatrix":
        return GroupAlgebraMatrix.from_entries(
            self.group, [[self.entries[i][j] for i in range(self.rows)]
                         for j in range(self.cols)])

    def involute_entries(self) -> "GroupAlgebraMatrix":
        """Apply the group-inverting anti-involution to every entry."""
        return GroupAlgebraMatrix.from_entries(
            self.group, [[e.involute() for e in row] for row in self.entries])

    def is_integral(self) -> bool:
        return all(e.is_integral() for row in self.entries for e in row)

    def is_rational(self) -> bool:
        return all(e.is_rational() for row in self.entries for e in row)

    def row(self, i: int) -> tuple[GroupAlgebraElement, ...]:
        return self.entries[i]

    def __repr__(self):
        return f"GAM({self.group.name}, {self.rows}x{self.cols})"


# -- Wedderburn isomorphism -------------------------------------------------

@functools.lru_cache(maxsize=None)
def _rep_list(G: FiniteGroup) -> tuple[IrreducibleRep, ...]:
    return irreps(G)


def rep_of_element(x: GroupAlgebraElement, rep: IrreducibleRep):
    """The matrix sum(coeff_g * rho(g)) over the splitting field."""
    c = rep.degree
    if c == 1:
        acc = ZERO
        for g, a in enumerate(x.coeffs):
            if not a.is_zero():
                acc = acc + a * rep.matrices[g][0][0]
        return [[acc]]
    out = [[ZERO] * c for _ in range(c)]
    for g, a in enumerate(x.coeffs):
        if a.is_zero():
            continue
        m = rep.matrices[g]
        for i in range(c):
            for j in range(c):
                if not m[i][j].is_zero():
                    out[i][j] = out[i][j] + a * m[i][j]
    return out


def wedderburn(x: GroupAlgebraElement):
    """Per-character image of x under E[G] -> prod M_deg(E)."""
    return tuple(rep_of_element(x, rep) for rep in _rep_list(x.group))


def wedderburn_block(M: GroupAlgebraMatrix, chi: int):
    """The (rows*deg) x (cols*deg) splitting-field matrix of M at one character."""
    rep = _rep_list(M.group)[chi]
    c = rep.degree
    out = [[ZERO] * (M.cols * c) for _ in range(M.rows * c)]
    for u in range(M.rows):
        for v in range(M.cols):
            e = M.entries[u][v]
            if e.is_zero():
                continue
            blk = rep_of_element(e, rep)
            for i in range(c):
                for j in range(c):
                    out[u * c + i][v * c + j] = blk[i][j]
    return out


def wedderburn_inverse(G: FiniteGroup, blocks) -> GroupAlgebraElement:
    """Two-sided inverse of wedderburn: Fourier inversion of a block tuple."""
    reps = _rep_list(G)
    if len(blocks) != len(reps):
        raise ValueError("block count must match the number of irreducibles")
    for rep, b in zip(reps, blocks):
        if len(b) != rep.degree or any(len(r) != rep.degree for r in b):
            raise ValueError("block shape mismatch with irreducible degrees")
    coeffs = []
    inv_order = Fraction(1, G.order)
    for g in range(G.order):
        acc = ZERO
        for rep, b in zip(reps, blocks):
            m = rep.matrices[G.inv(g)]
            c = rep.degree
            tr = ZERO
            for i in range(c):
                for j in range(c):
                    if not b[i][j].is_zero() and not m[j][i].is_zero():
                        tr = tr + b[i][j] * m[j][i]
            acc = acc + tr * rep.degree
        coeffs.append(acc * inv_order)
    return GroupAlgebraElement(G, tuple(coeffs))


def matrix_from_blocks(G: FiniteGroup, rows: int, cols: int, blocks) -> GroupAlgebraMatrix:
    """Reassemble a group-algebra matrix from its per-character block images."""
    reps = _rep_list(G)
    grid = []
    for u in range(rows):
        row = []
        for v in range(cols):
            entry_blocks = []
            for rep, b in zip(reps, blocks):
                c = rep.degree
                entry_blocks.append([[b[u * c + i][v * c + j] for j in range(c)]
                                     for i in range(c)])
            row.append(wedderburn_inverse(G, entry_blocks))
        grid.append(row)
    return GroupAlgebraMatrix.from_entries(G, grid)


# -- central elements --------------------------------------------------------

@dataclass(frozen=True)
class CentralElement:
    """A Galois-consistent tuple in prod_chi Q(zeta_e), i.e. an element of zeta(Q[G])."""

    group: FiniteGroup
    values: tuple[CycloNum, ...]

    def __post_init__(self):
        if len(self.values) != len(_rep_list(self.group)):
            raise ValueError("one value per irreducible character required")
        _assert_galois_consistent(self.group, self.values)

    @staticmethod
    def one(G: FiniteGroup) -> "CentralElement":
        return CentralElement(G, (ONE,) * len(_rep_list(G)))

    @staticmethod
    def from_rational(G: FiniteGroup, q) -> "CentralElement":
        v = _as_cyclo(q)
        return CentralElement(G, (v,) * len(_rep_list(G)))

    def __mul__(self, other):
        if isinstance(other, CentralElement):
            return CentralElement(self.group,
                                  tuple(a * b for a, b in zip(self.values, other.values)))
        if isinstance(other, (int, Fraction, CycloNum)):
            c = _as_cyclo(other)
            return CentralElement(self.group, tuple(a * c for a in self.values))
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        return CentralElement(self.group,
                              tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        return CentralElement(self.group,
                              tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self):
        return CentralElement(self.group, tuple(-a for a in self.values))

    def hash_involution(self) -> "CentralElement":
        perm = contragredient_permutation(self.group)
        return CentralElement(self.group, tuple(self.values[p] for p in perm))

    def coords(self) -> tuple[Fraction, ...]:
        """Coordinates in the conjugacy-class-sum basis of the rational center."""
        G = self.group
        reps = _rep_list(G)
        out = []
        for cls in G.conjugacy_classes:
            g = cls[0]
            acc = ZERO
            for rep, v in zip(reps, self.values):
                acc = acc + v * rep.character[G.inv(g)] * rep.degree
            acc = acc * Fraction(1, G.order)
            if not acc.is_rational():
                raise AssertionError("central element has non-rational class coordinates")
            out.append(acc.as_rational())
        return tuple(out)

    @staticmethod
    def from_coords(G: FiniteGroup, coords) -> "CentralElement":
        reps = _rep_list(G)
        values = []
        for rep in reps:
            acc = ZERO
            for cls, a in zip(G.conjugacy_classes, coords):
                if a:
                    acc = acc + rep.character[cls[0]] * (Fraction(a) * len(cls))
            values.append(acc * Fraction(1, rep.degree))
        return CentralElement(G, tuple(values))

    def to_group_algebra(self) -> GroupAlgebraElement:
        G = self.group
        coords = self.coords()
        coeffs = [ZERO] * G.order
        for cls, a in zip(G.conjugacy_classes, coords):
            for g in cls:
                coeffs[g] = _as_cyclo(a)
        return GroupAlgebraElement(G, tuple(coeffs))

    def is_integral(self) -> bool:
        """Componentwise integrality over Z (power-basis coordinates in Z)."""
        return all(v.is_integral() for v in self.values)

    def has_zero_component(self) -> bool:
        return any(v.is_zero() for v in self.values)

    def __eq__(self, other):
        return (isinstance(other, CentralElement) and self.group is other.group
                and all(a == b for a, b in zip(self.values, other.values)))

    def __repr__(self):
        return f"CentralElement({self.group.name}, {list(self.values)!r})"


def _assert_galois_consistent(G: FiniteGroup, values):
    e = G.exponent
    lifted = [v.lift(e) if e % v.n == 0 else v for v in values]
    for v in values:
        if e % v.n:
            raise AssertionError("central value conductor does not divide the exponent")
    for a in range(2, e):
        if math.gcd(a, e) != 1:
            continue
        perm = galois_permutation(G, a)
        for i in range(len(values)):
            if lifted[i].galois(a) != lifted[perm[i]]:
                raise AssertionError(
                    f"Galois consistency fails for sigma_{a} at character {i}")


# -- reduced norm, adjoint, involution, reduced rank -------------------------

def nrd(M: GroupAlgebraMatrix) -> CentralElement:
    """Reduced norm of a square matrix over Q[G], valued in the center.

    Computed per character as the determinant of the assembled splitting
    field block.  Integral input yields componentwise integral values and
    the result always passes the Galois-consistency check.
    """
    if M.rows != M.cols:
        raise ValueError("reduced norm needs a square matrix")
    if not M.is_rational():
        raise ValueError("reduced norm is defined here for rational coefficients")
    values = tuple(linalg.mat_det(wedderburn_block(M, i))
                   for i in range(len(_rep_list(M.group))))
    out = CentralElement(M.group, values)
    if M.is_integral() and not out.is_integral():
        raise AssertionError("reduced norm of an integral matrix must be integral")
    return out


def nrd_op(M: GroupAlgebraMatrix) -> CentralElement:
    """Reduced norm of M viewed over the opposite algebra (blockwise transpose)."""
    if M.rows != M.cols:
        raise ValueError("reduced norm needs a square matrix")
    G = M.group
    reps = _rep_list(G)
    values = []
    for chi, rep in enumerate(reps):
        c = rep.degree
        blk = wedderburn_block(M, chi)
        n = M.rows * c
        t = [[ZERO] * n for _ in range(n)]
        for u in range(M.rows):
            for v in range(M.cols):
                for i in range(c):
                    for j in range(c):
                        t[u * c + i][v * c + j] = blk[u * c + j][v * c + i]
        values.append(linalg.mat_det(t))
    return CentralElement(G, tuple(values))


def nrd_element(x: GroupAlgebraElement) -> CentralElement:
    return nrd(GroupAlgebraMatrix.from_entries(x.group, [[x]]))


def adjoint_star(M: GroupAlgebraMatrix) -> GroupAlgebraMatrix:
    """The generalized adjoint M*: M M* = M* M = nrd(M) I, with zero blocks
    exactly at the characters where the reduced norm vanishes."""
    if M.rows != M.cols:
        raise ValueError("generalized adjoint needs a square matrix")
    G = M.group
    reps = _rep_list(G)
    blocks = []
    for chi, rep in enumerate(reps):
        blk = wedderburn_block(M, chi)
        det = linalg.mat_det(blk)
        n = len(blk)
        if det.is_zero():
            blocks.append([[ZERO] * n for _ in range(n)])
        else:
            inv = linalg.mat_inverse(blk)
            blocks.append([[det * e for e in row] for row in inv])
    star = matrix_from_blocks(G, M.rows, M.cols, blocks)
    if not star.is_rational():
        raise AssertionError("generalized adjoint failed to descend to Q[G]")
    return star


def hash_involution(x):
    """The # involution: contragredient permutation on central tuples,
    g -> g^(-1) on group-algebra elements."""
    if isinstance(x, CentralElement):
        return x.hash_involution()
    if isinstance(x, GroupAlgebraElement):
        return x.involute()
    raise TypeError("hash_involution expects a central or group-algebra element")


def reduced_rank(G: FiniteGroup, free_rank: int | None = None,
                 cut: int | None = None) -> tuple[int, ...]:
    """Per-character reduced rank of A^k (free_rank=k) or of e_chi A (cut=chi)."""
    reps = _rep_list(G)
    if (free_rank is None) == (cut is None):
        raise ValueError("specify exactly one of free_rank or cut")
    if free_rank is not None:
        if free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        return tuple(r.degree * free_rank for r in reps)
    if not (0 <= cut < len(reps)):
        raise ValueError("cut index out of range")
    return tuple(r.degree ** 2 if i == cut else 0 for i, r in enumerate(reps))


def gam_inverse(M: GroupAlgebraMatrix) -> GroupAlgebraMatrix | None:
    """Inverse over Q[G] via per-character block inversion; None if singular."""
    if M.rows != M.cols:
        raise ValueError("inverse needs a square matrix")
    blocks = []
    for chi in range(len(_rep_list(M.group))):
        blk = wedderburn_block(M, chi)
        inv = linalg.mat_inverse(blk) if blk else []
        if inv is None:
            return None
        blocks.append(inv)
    return matrix_from_blocks(M.group, M.rows, M.cols, blocks)
