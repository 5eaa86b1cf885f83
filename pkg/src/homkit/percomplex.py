"""2-periodic chain complexes of f.g. free abelian groups.

Objects are pairs of free abelian groups (even, odd) with differentials
D: even -> odd and E: odd -> even satisfying D E = 0 and E D = 0; morphisms
are degree-0 chain maps.  Homotopy classes of chain maps, mapping cones,
suspension and graded tensor products make the homotopy category of such
complexes fully computable.

Degree convention: degree 0 = even, degree 1 = odd; the differential lowers
degree, so D plays the role of every even-degree differential and E of every
odd-degree one.

Sign conventions are frozen here once and for all: suspension negates both
differentials, and the cone differential carries the minus sign on its
source-suspension block.  The triangle rotation axioms hold for these
choices up to the signs exercised by the tests; the octahedron axiom is not
verified anywhere (recorded as untested).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError
from .abgroups import FgAbGroup, GradedAbGroup, GroupElement, GroupHom
from .intlinalg import (
    IntMatrix,
    Subquotient,
    block,
    block_diag,
    hstack,
    kernel_basis,
    solve_matrix,
    subquotient,
    unvec,
    vec,
    vstack,
)


@dataclass(frozen=True)
class PeriodicComplex:
    """2-periodic complex: d has matrix D in even degrees, E in odd degrees."""

    even_rank: int
    odd_rank: int
    d: IntMatrix  # even -> odd
    e: IntMatrix  # odd -> even

    def __post_init__(self) -> None:
        if self.d.rows != self.odd_rank or self.d.cols != self.even_rank:
            raise InputError("differential D has wrong shape")
        if self.e.rows != self.even_rank or self.e.cols != self.odd_rank:
            raise InputError("differential E has wrong shape")
        if not (self.d @ self.e).is_zero() or not (self.e @ self.d).is_zero():
            raise InputError("not a complex: differentials do not square to zero")

    @classmethod
    def zero_diff(cls, even_rank: int, odd_rank: int) -> "PeriodicComplex":
        return cls(even_rank, odd_rank,
                   IntMatrix.zero(odd_rank, even_rank), IntMatrix.zero(even_rank, odd_rank))

    @classmethod
    def zero(cls) -> "PeriodicComplex":
        return cls.zero_diff(0, 0)

    def rank(self, degree: int) -> int:
        return self.even_rank if degree % 2 == 0 else self.odd_rank


def direct_sum(a: PeriodicComplex, b: PeriodicComplex) -> PeriodicComplex:
    return PeriodicComplex(a.even_rank + b.even_rank, a.odd_rank + b.odd_rank,
                           block_diag(a.d, b.d), block_diag(a.e, b.e))


@dataclass(frozen=True)
class ChainMap:
    """Degree-0 chain map between periodic complexes."""

    source: PeriodicComplex
    target: PeriodicComplex
    f0: IntMatrix  # even -> even
    f1: IntMatrix  # odd -> odd

    def __post_init__(self) -> None:
        a, b = self.source, self.target
        if self.f0.rows != b.even_rank or self.f0.cols != a.even_rank:
            raise InputError("chain map: even component has wrong shape")
        if self.f1.rows != b.odd_rank or self.f1.cols != a.odd_rank:
            raise InputError("chain map: odd component has wrong shape")
        if (b.d @ self.f0 != self.f1 @ a.d) or (b.e @ self.f1 != self.f0 @ a.e):
            raise InputError("not a chain map: squares do not commute")

    @classmethod
    def identity(cls, x: PeriodicComplex) -> "ChainMap":
        return cls(x, x, IntMatrix.identity(x.even_rank), IntMatrix.identity(x.odd_rank))

    @classmethod
    def zero(cls, a: PeriodicComplex, b: PeriodicComplex) -> "ChainMap":
        return cls(a, b, IntMatrix.zero(b.even_rank, a.even_rank),
                   IntMatrix.zero(b.odd_rank, a.odd_rank))

    def compose(self, first: "ChainMap") -> "ChainMap":
        """self o first."""
        if first.target != self.source:
            raise InputError("chain maps are not composable")
        return ChainMap(first.source, self.target, self.f0 @ first.f0, self.f1 @ first.f1)

    def __add__(self, other: "ChainMap") -> "ChainMap":
        if (self.source, self.target) != (other.source, other.target):
            raise InputError("chain maps have different endpoints")
        return ChainMap(self.source, self.target, self.f0 + other.f0, self.f1 + other.f1)

    def __neg__(self) -> "ChainMap":
        return ChainMap(self.source, self.target, -self.f0, -self.f1)

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        return self + (-other)


@lru_cache(maxsize=None)
def _homology_subquotients(x: PeriodicComplex) -> tuple[Subquotient, Subquotient]:
    return subquotient(x.d, x.e), subquotient(x.e, x.d)


@lru_cache(maxsize=None)
def _homology_groups(x: PeriodicComplex) -> tuple[FgAbGroup, FgAbGroup]:
    sq0, sq1 = _homology_subquotients(x)
    return FgAbGroup(sq0.presentation), FgAbGroup(sq1.presentation)


def homology(x: PeriodicComplex) -> GradedAbGroup:
    """H_even = ker(D)/im(E), H_odd = ker(E)/im(D)."""
    h0, h1 = _homology_groups(x)
    return GradedAbGroup(h0, h1)


def homology_group(x: PeriodicComplex, degree: int) -> FgAbGroup:
    return _homology_groups(x)[degree % 2]


def homology_cycles(x: PeriodicComplex, degree: int) -> Subquotient:
    """The subquotient behind H_degree, exposing cycle representatives."""
    return _homology_subquotients(x)[degree % 2]


def moore_complex(g: GradedAbGroup) -> PeriodicComplex:
    """A periodic complex with prescribed homology.

    Folds a length-1 free resolution of each graded piece: with
    G0 = coker(M0), G1 = coker(M1) and both M injective, the complex has
    even part Z^{n0} + Z^{m1}, odd part Z^{m0} + Z^{n1}, D = M1 on the
    second summand and E = M0 on the first.
    """
    m0 = _injective_presentation(g.even)
    m1 = _injective_presentation(g.odd)
    n0, r0 = m0.rows, m0.cols
    n1, r1 = m1.rows, m1.cols
    d = block([[IntMatrix.zero(r0, n0), IntMatrix.zero(r0, r1)],
               [IntMatrix.zero(n1, n0), m1]])
    e = block([[m0, IntMatrix.zero(n0, n1)],
               [IntMatrix.zero(r1, r0), IntMatrix.zero(r1, n1)]])
    return PeriodicComplex(n0 + r1, r0 + n1, d, e)


def _injective_presentation(g: FgAbGroup) -> IntMatrix:
    """Canonical presentation with independent relation columns."""
    rank, torsion = g.canonical
    return IntMatrix.diagonal(torsion, rows=len(torsion) + rank, cols=len(torsion))


def suspension(x: PeriodicComplex) -> PeriodicComplex:
    """Signed translation: even/odd swap, both differentials negated."""
    return PeriodicComplex(x.odd_rank, x.even_rank, -x.e, -x.d)


def suspend_map(f: ChainMap) -> ChainMap:
    return ChainMap(suspension(f.source), suspension(f.target), f.f1, f.f0)


def mapping_cone(f: ChainMap) -> tuple[PeriodicComplex, ChainMap, ChainMap]:
    """Cone of f: A -> B with the canonical maps B -> cone -> suspension(A).

    cone_even = A_odd + B_even and cone_odd = A_even + B_odd, with
    D(a1, b0) = (-E_A a1, f1 a1 + D_B b0) and symmetrically for E.
    """
    a, b = f.source, f.target
    d = block([[-a.e, IntMatrix.zero(a.even_rank, b.even_rank)],
               [f.f1, b.d]])
    e = block([[-a.d, IntMatrix.zero(a.odd_rank, b.odd_rank)],
               [f.f0, b.e]])
    cone = PeriodicComplex(a.odd_rank + b.even_rank, a.even_rank + b.odd_rank, d, e)
    iota = ChainMap(b, cone,
                    vstack(IntMatrix.zero(a.odd_rank, b.even_rank), IntMatrix.identity(b.even_rank)),
                    vstack(IntMatrix.zero(a.even_rank, b.odd_rank), IntMatrix.identity(b.odd_rank)))
    sa = suspension(a)
    pi = ChainMap(cone, sa,
                  hstack(IntMatrix.identity(a.odd_rank), IntMatrix.zero(a.odd_rank, b.even_rank)),
                  hstack(IntMatrix.identity(a.even_rank), IntMatrix.zero(a.even_rank, b.odd_rank)))
    return cone, iota, pi


class HomotopyClasses:
    """The group [A, B] of homotopy classes of chain maps.

    Computed as the subquotient of the chain-map constraint kernel inside
    Hom(A0, B0) + Hom(A1, B1) by the null-homotopy boundaries
    (h, k) |-> (E_B h + k D_A, D_B k + h E_A).
    """

    def __init__(self, source: PeriodicComplex, target: PeriodicComplex):
        a, b = source, target
        ia0, ia1 = IntMatrix.identity(a.even_rank), IntMatrix.identity(a.odd_rank)
        ib0, ib1 = IntMatrix.identity(b.even_rank), IntMatrix.identity(b.odd_rank)
        # Constraint rows: D_B f0 - f1 D_A = 0 and E_B f1 - f0 E_A = 0.
        l = block([
            [ia0.kron(b.d), -(a.d.transpose().kron(ib1))],
            [-(a.e.transpose().kron(ib0)), ia1.kron(b.e)],
        ])
        n = block([
            [ia0.kron(b.e), a.d.transpose().kron(ib0)],
            [a.e.transpose().kron(ib1), ia1.kron(b.d)],
        ])
        self.source = source
        self.target = target
        self._sq = subquotient(l, n)
        self.group = FgAbGroup(self._sq.presentation)
        self._split = b.even_rank * a.even_rank

    def class_of(self, f: ChainMap) -> GroupElement:
        if f.source != self.source or f.target != self.target:
            raise InputError("chain map has the wrong endpoints")
        return self.group.element(self._sq.to_coords(vec(f.f0) + vec(f.f1)))

    def representative(self, el: GroupElement) -> ChainMap:
        if el.owner is not self.group:
            raise InputError("element does not belong to this homotopy-class group")
        amb = self._sq.from_coords(el.coords)
        a, b = self.source, self.target
        f0 = unvec(amb[:self._split], b.even_rank, a.even_rank)
        f1 = unvec(amb[self._split:], b.odd_rank, a.odd_rank)
        return ChainMap(a, b, f0, f1)

    def is_null_homotopic(self, f: ChainMap) -> bool:
        return self.class_of(f).is_zero()

    def chain_map_lattice(self) -> IntMatrix:
        """Basis of all chain maps A -> B, as vectorized (f0, f1) columns."""
        return self._sq.basis

    def generators(self) -> list[ChainMap]:
        return [self.representative(self.group.element(
            tuple(1 if i == j else 0 for i in range(self.group.ngens))))
            for j in range(self.group.ngens)]


def homotopy_classes(a: PeriodicComplex, b: PeriodicComplex) -> HomotopyClasses:
    return HomotopyClasses(a, b)


@dataclass(frozen=True)
class GradedGroupHom:
    """Pair of homomorphisms between the graded pieces of two graded groups."""

    even: GroupHom
    odd: GroupHom

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()

    def is_injective(self) -> bool:
        return self.even.is_injective() and self.odd.is_injective()

    def is_surjective(self) -> bool:
        return self.even.is_surjective() and self.odd.is_surjective()


def induced_on_homology(f: ChainMap) -> GradedGroupHom:
    """The well-defined graded map H(A) -> H(B); independent of homotopy."""
    maps = []
    for degree, mat in ((0, f.f0), (1, f.f1)):
        sa = homology_cycles(f.source, degree)
        sb = homology_cycles(f.target, degree)
        cols = [sb.to_coords(mat.apply(sa.basis.column(j))) for j in range(sa.ngens)]
        matrix = IntMatrix.from_columns(cols, rows=sb.ngens)
        maps.append(GroupHom(homology_group(f.source, degree),
                             homology_group(f.target, degree), matrix))
    return GradedGroupHom(maps[0], maps[1])


def tensor_complex(a: PeriodicComplex, b: PeriodicComplex) -> PeriodicComplex:
    """Graded tensor product with the Koszul sign d(x y) = dx y + (-1)^|x| x dy.

    even = A0 B0 + A1 B1, odd = A0 B1 + A1 B0, with the A-index major in
    each Kronecker block.
    """
    ia0, ia1 = IntMatrix.identity(a.even_rank), IntMatrix.identity(a.odd_rank)
    ib0, ib1 = IntMatrix.identity(b.even_rank), IntMatrix.identity(b.odd_rank)
    d = block([
        [ia0.kron(b.d), a.e.kron(ib1)],
        [a.d.kron(ib0), -(ia1.kron(b.e))],
    ])
    e = block([
        [ia0.kron(b.e), a.e.kron(ib0)],
        [a.d.kron(ib1), -(ia1.kron(b.d))],
    ])
    return PeriodicComplex(a.even_rank * b.even_rank + a.odd_rank * b.odd_rank,
                           a.even_rank * b.odd_rank + a.odd_rank * b.even_rank, d, e)
