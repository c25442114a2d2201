"""JSON-facing serialization: exact values as "p/q" strings, cyclotomic
numbers as {n, coeffs}, group elements as integer labels."""

from __future__ import annotations

from fractions import Fraction

from grax.algebra import CentralElement, GroupAlgebraElement, GroupAlgebraMatrix
from grax.cyclotomic import CycloNum
from grax.exterior import ExteriorElement
from grax.fitting import CentralLattice, Verdict
from grax.groups import FiniteGroup, group_from_catalog
from grax.reps import irreps


def rat_to_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def str_to_rat(s) -> Fraction:
    return Fraction(str(s))


def cyclo_to_json(x: CycloNum):
    if x.is_rational():
        return rat_to_str(x.as_rational())
    return {"n": x.n, "coeffs": [rat_to_str(c) for c in x.coeffs]}


def json_to_cyclo(obj) -> CycloNum:
    if isinstance(obj, (str, int)):
        return CycloNum.from_rational(str_to_rat(obj))
    return CycloNum(int(obj["n"]), tuple(str_to_rat(c) for c in obj["coeffs"]))


def group_to_json(G: FiniteGroup):
    return {"name": G.name, "params": list(G.params),
            "order": G.order, "exponent": G.exponent}


def json_to_group(obj) -> FiniteGroup:
    if isinstance(obj, str):
        return group_from_catalog(obj)
    try:
        return group_from_catalog(obj["name"])
    except ValueError:
        return group_from_catalog(obj["name"], tuple(obj.get("params", ())))


def gae_to_json(x: GroupAlgebraElement):
    return {str(g): cyclo_to_json(c) for g, c in enumerate(x.coeffs) if not c.is_zero()}


def json_to_gae(G: FiniteGroup, obj) -> GroupAlgebraElement:
    coeffs = [CycloNum.from_rational(0)] * G.order
    for k, v in obj.items():
        coeffs[int(k)] = json_to_cyclo(v)
    return GroupAlgebraElement.from_coeffs(G, coeffs)


def gam_to_json(M: GroupAlgebraMatrix):
    return {"group": M.group.name, "rows": M.rows, "cols": M.cols,
            "entries": [[gae_to_json(e) for e in row] for row in M.entries]}


def json_to_gam(obj, G: FiniteGroup | None = None) -> GroupAlgebraMatrix:
    if G is None:
        G = json_to_group(obj["group"])
    grid = [[json_to_gae(G, e) for e in row] for row in obj["entries"]]
    return GroupAlgebraMatrix.from_entries(G, grid)


def central_to_json(x: CentralElement):
    return {"group": x.group.name,
            "values": [cyclo_to_json(v) for v in x.values]}


def json_to_central(obj, G: FiniteGroup | None = None) -> CentralElement:
    if G is None:
        G = json_to_group(obj["group"])
    return CentralElement(G, tuple(json_to_cyclo(v) for v in obj["values"]))


def lattice_to_json(L: CentralLattice):
    return {"group": L.group.name,
            "ambient_basis": {"kind": "conjugacy class sums",
                              "class_reps": [c[0] for c in L.group.conjugacy_classes]},
            "denominator": L.denominator,
            "hnf": [list(r) for r in L.lattice.basis],
            "stable": L.stable, "exact": L.exact,
            "provenance": list(L.provenance)}


def exterior_to_json(x: ExteriorElement):
    reps = irreps(x.group)
    comps = []
    for chi, (rep, comp) in enumerate(zip(reps, x.comps)):
        comps.append({
            "chi": chi, "degree": rep.degree,
            "basis": {"kind": "ascending subsets, lexicographic",
                      "ambient_dim": x.rank * rep.degree,
                      "subset_size": x.degree * rep.degree},
            "coords": [cyclo_to_json(v) for v in comp]})
    return {"group": x.group.name, "rank": x.rank, "degree": x.degree,
            "components": comps}


def verdict_to_json(v: Verdict):
    out = {"verdict": v.kind}
    if v.witness is not None:
        w = v.witness
        if isinstance(w, GroupAlgebraMatrix):
            out["witness"] = gam_to_json(w)
        elif isinstance(w, tuple):
            out["witness"] = [str(part) if not isinstance(part, (int, list, tuple))
                              else list(part) if isinstance(part, tuple) else part
                              for part in w]
        else:
            out["witness"] = str(w)
    return out
