"""Linearization of a Hom-group into its group Hopf algebra.

The span of the carrier over an abstract field carries a product from the
Cayley table, the diagonal coproduct, the constant-one counit, inversion
as antipode, and the pair of twists (alpha, identity).  Every structure
map sends basis elements to basis elements or basis tensors, so each Hopf
identity holds as an identity of linear maps exactly when it holds on
basis inputs; coefficients never leave the integers 0 and 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .core import AxiomReport, CayleyTable, HomGroup, Permutation
from .subgroups import center, enumerate_hom_subgroups


class FormalElement:
    """Sparse integer combination of basis indices; zeros are not stored."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Union[Mapping[int, int], Iterable[tuple[int, int]]] = ()):
        self.coeffs = {k: v for k, v in dict(coeffs).items() if v != 0}

    @classmethod
    def basis(cls, i: int) -> "FormalElement":
        return cls({i: 1})

    @classmethod
    def zero(cls) -> "FormalElement":
        return cls()

    def scale(self, c: int) -> "FormalElement":
        return FormalElement({k: c * v for k, v in self.coeffs.items()})

    def __add__(self, other: "FormalElement") -> "FormalElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return FormalElement(out)

    def __sub__(self, other: "FormalElement") -> "FormalElement":
        return self + other.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*e{k}" for k, v in sorted(self.coeffs.items()))


class FormalTensor:
    """Sparse integer combination of basis index tuples of a fixed rank."""

    __slots__ = ("rank", "coeffs")

    def __init__(
        self,
        rank: int,
        coeffs: Union[Mapping[tuple[int, ...], int], Iterable[tuple[tuple[int, ...], int]]] = (),
    ):
        self.rank = rank
        cleaned = {}
        for k, v in dict(coeffs).items():
            if len(k) != rank:
                raise ValueError(f"key {k} has rank {len(k)}, expected {rank}")
            if v != 0:
                cleaned[tuple(k)] = v
        self.coeffs = cleaned

    @classmethod
    def basis(cls, key: tuple[int, ...]) -> "FormalTensor":
        return cls(len(key), {tuple(key): 1})

    def __add__(self, other: "FormalTensor") -> "FormalTensor":
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return FormalTensor(self.rank, out)

    def scale(self, c: int) -> "FormalTensor":
        return FormalTensor(self.rank, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalTensor):
            return NotImplemented
        return self.rank == other.rank and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*e{k}" for k, v in sorted(self.coeffs.items()))


@dataclass(frozen=True)
class GroupHopfAlgebra:
    """Basis-presented Hopf structure on the span of a Hom-group.

    Structure maps act on basis indices: the product via the Cayley
    table, the coproduct diagonally, the counit as the constant 1, the
    antipode via the inversion table, with the algebra twist alpha and
    the coalgebra twist fixed to the identity.
    """

    base: HomGroup
    product: CayleyTable
    unit: int
    antipode: tuple[int, ...]
    alpha: Permutation
    beta: Permutation

    def __post_init__(self):
        n = self.product.n
        object.__setattr__(self, "antipode", tuple(self.antipode))
        if len(self.antipode) != n:
            raise ValueError("antipode table length mismatch")
        for i, v in enumerate(self.antipode):
            if not 0 <= v < n:
                raise ValueError(f"antipode[{i}] = {v} outside 0..{n - 1}")
        if len(self.alpha) != n or len(self.beta) != n:
            raise ValueError("twist length mismatch")
        if not self.beta.is_identity:
            raise ValueError("coalgebra twist must be the identity")
        if not 0 <= self.unit < n:
            raise ValueError(f"unit {self.unit} outside 0..{n - 1}")

    @property
    def n(self) -> int:
        return self.product.n

    def unit_element(self) -> FormalElement:
        return FormalElement.basis(self.unit)

    def product_of(self, x: FormalElement, y: FormalElement) -> FormalElement:
        t = self.product.entries
        out: dict[int, int] = {}
        for i, ci in x.coeffs.items():
            for j, cj in y.coeffs.items():
                k = t[i][j]
                out[k] = out.get(k, 0) + ci * cj
        return FormalElement(out)

    def tensor_product_of(self, x: FormalTensor, y: FormalTensor) -> FormalTensor:
        """Componentwise product (a (x) b)(c (x) d) = ac (x) bd on rank-2 tensors."""
        if x.rank != 2 or y.rank != 2:
            raise ValueError("rank-2 tensors expected")
        t = self.product.entries
        out: dict[tuple[int, ...], int] = {}
        for (a, b), cx in x.coeffs.items():
            for (c, d), cy in y.coeffs.items():
                key = (t[a][c], t[b][d])
                out[key] = out.get(key, 0) + cx * cy
        return FormalTensor(2, out)

    def coproduct_of(self, x: FormalElement) -> FormalTensor:
        return FormalTensor(2, {(i, i): c for i, c in x.coeffs.items()})

    def counit_of(self, x: FormalElement) -> int:
        return sum(x.coeffs.values())

    def antipode_of(self, x: FormalElement) -> FormalElement:
        out: dict[int, int] = {}
        for i, c in x.coeffs.items():
            k = self.antipode[i]
            out[k] = out.get(k, 0) + c
        return FormalElement(out)

    def twist_of(self, x: FormalElement) -> FormalElement:
        return FormalElement({self.alpha(i): c for i, c in x.coeffs.items()})

    def cotwist_of(self, x: FormalElement) -> FormalElement:
        return FormalElement({self.beta(i): c for i, c in x.coeffs.items()})


def build_group_hopf(G: HomGroup) -> GroupHopfAlgebra:
    """Populate the structure maps of the span of G from its table."""
    return GroupHopfAlgebra(
        base=G,
        product=G.table,
        unit=G.unit,
        antipode=G.inverses,
        alpha=G.alpha,
        beta=Permutation.identity(G.n),
    )


def verify_hom_hopf(A: GroupHopfAlgebra) -> AxiomReport:
    """Check the twisted Hopf axioms on every basis element.

    Basis checks suffice: all structure maps send basis elements to basis
    elements or basis tensors, so linear extension preserves each identity.
    Covers algebra twisted associativity and unitality, coassociativity
    and the counit laws against the identity cotwist, the coproduct and
    counit being multiplicative and unital, counit-twist compatibility,
    the two-sided antipode law, and the antipode fixing unit and counit.
    """
    n = A.n
    e = FormalElement.basis
    unit_el = A.unit_element()
    violations: list[tuple[str, tuple[int, ...]]] = []

    hit = None
    for g in range(n):
        for h in range(n):
            for k in range(n):
                lhs = A.product_of(A.twist_of(e(g)), A.product_of(e(h), e(k)))
                rhs = A.product_of(A.product_of(e(g), e(h)), A.twist_of(e(k)))
                if lhs != rhs:
                    hit = (g, h, k)
                    break
            if hit:
                break
        if hit:
            break
    if hit:
        violations.append(("algebra-assoc", hit))

    hit = None
    if A.twist_of(unit_el) != unit_el:
        hit = (A.unit,)
    else:
        for g in range(n):
            ag = A.twist_of(e(g))
            if A.product_of(e(g), unit_el) != ag or A.product_of(unit_el, e(g)) != ag:
                hit = (g,)
                break
    if hit:
        violations.append(("algebra-unit", hit))

    for g in range(n):  # coassociativity against the identity cotwist
        t = A.coproduct_of(e(g))
        lhs: dict[tuple[int, ...], int] = {}
        rhs: dict[tuple[int, ...], int] = {}
        for (c1, c2), c in t.coeffs.items():
            for (d1, d2), d in A.coproduct_of(e(c2)).coeffs.items():
                key = (A.beta(c1), d1, d2)
                lhs[key] = lhs.get(key, 0) + c * d
            for (d1, d2), d in A.coproduct_of(e(c1)).coeffs.items():
                key = (d1, d2, A.beta(c2))
                rhs[key] = rhs.get(key, 0) + c * d
        if FormalTensor(3, lhs) != FormalTensor(3, rhs):
            violations.append(("coassociativity", (g,)))
            break

    for g in range(n):  # counit laws: c1 eps(c2) = eps(c1) c2 = beta(c)
        t = A.coproduct_of(e(g))
        left = FormalElement.zero()
        right = FormalElement.zero()
        for (c1, c2), c in t.coeffs.items():
            left = left + e(c1).scale(c * A.counit_of(e(c2)))
            right = right + e(c2).scale(c * A.counit_of(e(c1)))
        target = A.cotwist_of(e(g))
        if left != target or right != target:
            violations.append(("counit", (g,)))
            break

    hit = None
    for h in range(n):
        for k in range(n):
            lhs_t = A.coproduct_of(A.product_of(e(h), e(k)))
            rhs_t = A.tensor_product_of(A.coproduct_of(e(h)), A.coproduct_of(e(k)))
            if lhs_t != rhs_t:
                hit = (h, k)
                break
        if hit:
            break
    if hit:
        violations.append(("coproduct-product", hit))

    if A.coproduct_of(unit_el) != FormalTensor.basis((A.unit, A.unit)):
        violations.append(("coproduct-unit", (A.unit,)))

    hit = None
    for h in range(n):
        for k in range(n):
            if A.counit_of(A.product_of(e(h), e(k))) != A.counit_of(e(h)) * A.counit_of(e(k)):
                hit = (h, k)
                break
        if hit:
            break
    if hit:
        violations.append(("counit-product", hit))

    if A.counit_of(unit_el) != 1:
        violations.append(("counit-unit", (A.unit,)))

    for g in range(n):
        if A.counit_of(A.twist_of(e(g))) != A.counit_of(e(g)):
            violations.append(("counit-twist", (g,)))
            break

    hit = None
    for g in range(n):  # S(x1) x2 = x1 S(x2) = eps(x) 1
        target = unit_el.scale(A.counit_of(e(g)))
        left = FormalElement.zero()
        right = FormalElement.zero()
        for (c1, c2), c in A.coproduct_of(e(g)).coeffs.items():
            left = left + A.product_of(A.antipode_of(e(c1)), e(c2)).scale(c)
            right = right + A.product_of(e(c1), A.antipode_of(e(c2))).scale(c)
        if left != target or right != target:
            hit = (g,)
            break
    if hit:
        violations.append(("antipode", hit))

    if A.antipode_of(unit_el) != unit_el:
        violations.append(("antipode-unit", (A.unit,)))

    for g in range(n):
        if A.counit_of(A.antipode_of(e(g))) != A.counit_of(e(g)):
            violations.append(("antipode-counit", (g,)))
            break

    return AxiomReport.from_violations(violations)


def is_commutative(A: GroupHopfAlgebra) -> bool:
    """Commutative exactly when the underlying Hom-group is abelian."""
    return A.product.is_symmetric()


def is_cocommutative(A: GroupHopfAlgebra) -> bool:
    n = A.n
    for g in range(n):
        t = A.coproduct_of(FormalElement.basis(g))
        flipped = FormalTensor(2, {(b, a): c for (a, b), c in t.coeffs.items()})
        if flipped != t:
            return False
    return True


def sub_hopf_dims(G: HomGroup) -> list[int]:
    """Dimensions of basis-aligned Hopf subobjects of the span of G.

    These are exactly the sizes of Hom-subgroups of G; every dimension
    must divide the carrier size, and a failure raises since it would
    contradict the coset partition.
    """
    dims = sorted({len(H) for H in enumerate_hom_subgroups(G)})
    for d in dims:
        if G.n % d != 0:
            raise AssertionError(f"dimension {d} does not divide {G.n}")
    return dims


def center_hopf_dim(G: HomGroup) -> int:
    """Dimension of the span of the center; divides the carrier size."""
    d = len(center(G))
    if G.n % d != 0:
        raise AssertionError(f"center dimension {d} does not divide {G.n}")
    return d
