"""Exact-arithmetic workbench for finite group rings.

Everything here is computed over Q and its cyclotomic extensions with no
floating point: cyclotomic numbers in the power basis, integer lattices in
Hermite normal form, complete irreducible representation catalogs for a
family of small groups, reduced norms and generalized adjoints, budgeted
approximations of Whitehead orders and non-commutative Fitting invariants,
reduced exterior powers with their duality pairing, a generator-level
graded determinant calculus, and an exact verifier for the classical
cyclotomic-unit norm relations.
"""

from grax.cyclotomic import CycloNum, cyclo_make, cyclo_inverse, galois_apply, descend
from grax.lattices import IntLattice, hnf, smith_normal_form
from grax.groups import FiniteGroup, group_from_catalog
from grax.reps import IrreducibleRep, irreps, central_idempotent, contragredient

__all__ = [
    "CycloNum", "cyclo_make", "cyclo_inverse", "galois_apply", "descend",
    "IntLattice", "hnf", "smith_normal_form",
    "FiniteGroup", "group_from_catalog",
    "IrreducibleRep", "irreps", "central_idempotent", "contragredient",
]
