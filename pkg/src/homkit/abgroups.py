"""Finitely generated abelian groups with Hom, Ext1, tensor and Tor1.

Groups are carried by presentation matrices (rows = generators, columns =
relations) and canonicalized to (rank, invariant factors) via Smith form.
Hom and Ext groups keep a basis certificate, so individual classes can be
evaluated and compared exactly; this is what makes the kappa invariant of
`homkit.relhom` testable rather than an opaque list of invariant factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Optional, Sequence

from .errors import InputError
from .intlinalg import (
    IntMatrix,
    Subquotient,
    Vector,
    block_diag,
    cokernel_invariants,
    hstack,
    in_lattice,
    kernel_basis,
    lattice_basis,
    lattice_quotient,
    lattices_equal,
    preimage_gens,
    solve_matrix,
    subquotient,
    unvec,
    vec,
    vstack,
)


class FgAbGroup:
    """Finitely generated abelian group given by a presentation matrix."""

    def __init__(self, presentation: IntMatrix):
        self.presentation = presentation

    @classmethod
    def from_invariants(cls, rank: int, torsion: Sequence[int] = ()) -> "FgAbGroup":
        """Canonical presentation: torsion generators first, then free ones."""
        torsion = tuple(int(d) for d in torsion)
        if any(d < 2 for d in torsion):
            raise InputError("invariant factors must be >= 2")
        for a, b in zip(torsion, torsion[1:]):
            if b % a != 0:
                raise InputError("invariant factors must be in divisibility order")
        return cls(IntMatrix.diagonal(torsion, rows=len(torsion) + rank, cols=len(torsion)))

    @classmethod
    def trivial(cls) -> "FgAbGroup":
        return cls(IntMatrix.zero(0, 0))

    @classmethod
    def free(cls, n: int) -> "FgAbGroup":
        return cls(IntMatrix.zero(n, 0))

    @classmethod
    def cyclic(cls, d: int) -> "FgAbGroup":
        """Z/d, with the conventions Z/0 = Z and Z/1 = 0."""
        if d < 0:
            raise InputError("cyclic order must be >= 0")
        return cls.from_invariants(0, (d,)) if d >= 2 else cls.free(0 if d == 1 else 1)

    @property
    def ngens(self) -> int:
        return self.presentation.rows

    @cached_property
    def canonical(self) -> tuple[int, tuple[int, ...]]:
        return cokernel_invariants(self.presentation)

    @property
    def rank(self) -> int:
        return self.canonical[0]

    @property
    def torsion(self) -> tuple[int, ...]:
        return self.canonical[1]

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def order(self) -> Optional[int]:
        """Group order, or None for infinite groups."""
        return None if self.rank > 0 else prod(self.torsion)

    def torsion_order(self) -> int:
        return prod(self.torsion)

    def element(self, coords: Sequence[int]) -> "GroupElement":
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.ngens:
            raise InputError("coordinate vector has wrong length")
        return GroupElement(self, coords)

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.ngens)

    def coords_are_zero(self, coords: Sequence[int]) -> bool:
        return in_lattice(self.presentation, coords)

    def __repr__(self) -> str:
        rank, torsion = self.canonical
        parts = [f"Z^{rank}"] if rank else []
        parts += [f"Z/{d}" for d in torsion]
        return " + ".join(parts) if parts else "0"


def is_isomorphic(a: FgAbGroup, b: FgAbGroup) -> bool:
    """True iff the canonical forms (rank, invariant factors) coincide."""
    return a.canonical == b.canonical


@dataclass(frozen=True)
class GroupElement:
    """Element of an FgAbGroup, stored as coordinates over its generators.

    Elements of two group objects are interoperable when the presentations
    coincide, i.e. when the coordinate systems agree.
    """

    owner: FgAbGroup
    coords: Vector

    def _compatible(self, other: "GroupElement") -> bool:
        return (other.owner is self.owner
                or other.owner.presentation == self.owner.presentation)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if not self._compatible(other):
            raise InputError("elements belong to different groups")
        return GroupElement(self.owner, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.owner, tuple(-a for a in self.coords))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __rmul__(self, c: int) -> "GroupElement":
        return GroupElement(self.owner, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return self.owner.coords_are_zero(self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement) or not self._compatible(other):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):  # elements compare modulo relations; no stable hash
        raise TypeError("GroupElement is unhashable")


@dataclass(frozen=True)
class GradedAbGroup:
    """Z/2-graded finitely generated abelian group."""

    even: FgAbGroup
    odd: FgAbGroup

    def suspend(self) -> "GradedAbGroup":
        return GradedAbGroup(self.odd, self.even)

    def is_isomorphic_to(self, other: "GradedAbGroup") -> bool:
        return is_isomorphic(self.even, other.even) and is_isomorphic(self.odd, other.odd)

    def __repr__(self) -> str:
        return f"({self.even!r}, {self.odd!r})"


class GroupHom:
    """Homomorphism between presented groups, as a matrix on generators."""

    def __init__(self, source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix, check: bool = True):
        if matrix.rows != target.ngens or matrix.cols != source.ngens:
            raise InputError("homomorphism matrix has wrong shape")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check and solve_matrix(target.presentation, matrix @ source.presentation) is None:
            raise InputError("matrix does not map relations into relations")

    @classmethod
    def identity(cls, group: FgAbGroup) -> "GroupHom":
        return cls(group, group, IntMatrix.identity(group.ngens), check=False)

    @classmethod
    def zero(cls, source: FgAbGroup, target: FgAbGroup) -> "GroupHom":
        return cls(source, target, IntMatrix.zero(target.ngens, source.ngens), check=False)

    def apply(self, el: GroupElement) -> GroupElement:
        if el.owner is not self.source and el.owner.presentation != self.source.presentation:
            raise InputError("element does not belong to the source group")
        return self.target.element(self.matrix.apply(el.coords))

    def compose(self, first: "GroupHom") -> "GroupHom":
        """self o first; endpoint groups must share a presentation."""
        if first.target is not self.source and first.target.presentation != self.source.presentation:
            raise InputError("homomorphisms are not composable")
        return GroupHom(first.source, self.target, self.matrix @ first.matrix, check=False)

    def __add__(self, other: "GroupHom") -> "GroupHom":
        return GroupHom(self.source, self.target, self.matrix + other.matrix, check=False)

    def __sub__(self, other: "GroupHom") -> "GroupHom":
        return GroupHom(self.source, self.target, self.matrix - other.matrix, check=False)

    def is_zero(self) -> bool:
        return lattice_contains_matrix(self.target.presentation, self.matrix)

    def image_gens(self) -> IntMatrix:
        """Generators of the preimage in Z^{target gens} of the image subgroup."""
        return hstack(self.matrix, self.target.presentation)

    def kernel_gens(self) -> IntMatrix:
        """Basis of the preimage in Z^{source gens} of the kernel subgroup."""
        return preimage_gens(self.matrix, self.target.presentation)

    def kernel(self) -> Subquotient:
        """Kernel subgroup, with coordinates mapping into the source group."""
        return lattice_quotient(self.kernel_gens(), self.source.presentation)

    def kernel_group(self) -> FgAbGroup:
        return FgAbGroup(self.kernel().presentation)

    def cokernel_group(self) -> FgAbGroup:
        return FgAbGroup(self.image_gens())

    def is_surjective(self) -> bool:
        return self.cokernel_group().is_trivial()

    def is_injective(self) -> bool:
        return self.kernel_group().is_trivial()

    def is_isomorphism(self) -> bool:
        return self.is_surjective() and self.is_injective()

    def inverse_matrix(self) -> IntMatrix:
        """A matrix inducing the inverse homomorphism; requires bijectivity."""
        lifted = solve_matrix(
            hstack(self.matrix, self.target.presentation),
            IntMatrix.identity(self.target.ngens))
        if lifted is None or not self.is_injective():
            raise InputError("homomorphism is not invertible")
        return IntMatrix(self.source.ngens, self.target.ngens,
                         tuple(lifted.data[i] for i in range(self.source.ngens)))


def lattice_contains_matrix(gens: IntMatrix, cols: IntMatrix) -> bool:
    return solve_matrix(gens, cols) is not None


def is_exact_pair(f: GroupHom, g: GroupHom) -> bool:
    """Exactness of source --f--> middle --g--> target at the middle group.

    Requires g o f = 0; compares image of f and kernel of g as sublattices of
    the middle group's generator space.
    """
    if f.target is not g.source and f.target.presentation != g.source.presentation:
        raise InputError("is_exact_pair: maps are not consecutive")
    if not g.compose(f).is_zero():
        raise InputError("is_exact_pair: composite is not zero")
    return lattices_equal(lattice_basis(f.image_gens()), g.kernel_gens())


class DirectSum(FgAbGroup):
    """Direct sum of presented groups, remembering the summands.

    Generators of the summands are concatenated in order, so elements can be
    injected from and projected to each part by index arithmetic.
    """

    def __init__(self, parts: Sequence[FgAbGroup]):
        self.parts = tuple(parts)
        super().__init__(block_diag(*(p.presentation for p in self.parts))
                         if self.parts else IntMatrix.zero(0, 0))
        self._offsets = []
        off = 0
        for p in self.parts:
            self._offsets.append(off)
            off += p.ngens

    def inject(self, index: int, el: GroupElement) -> GroupElement:
        part = self.parts[index]
        if el.owner is not part and el.owner.presentation != part.presentation:
            raise InputError("element does not belong to the requested summand")
        coords = [0] * self.ngens
        off = self._offsets[index]
        for i, c in enumerate(el.coords):
            coords[off + i] = c
        return self.element(coords)

    def project(self, el: GroupElement, index: int) -> GroupElement:
        off = self._offsets[index]
        part = self.parts[index]
        return part.element(el.coords[off:off + part.ngens])


class _PairSubquotientGroup(FgAbGroup):
    """Group presented by a Subquotient over a vectorized matrix-pair space."""

    def __init__(self, sq: Subquotient):
        self._sq = sq
        super().__init__(sq.presentation)


class HomGroup(_PairSubquotientGroup):
    """Hom(A, B) with per-class matrix certificates and evaluation pairing.

    Classes are stored over pairs (X, Y) with X @ M_A = M_B @ Y, where M_A,
    M_B are the presentations; X alone determines the homomorphism.
    """

    def __init__(self, source: FgAbGroup, target: FgAbGroup):
        ma, mb = source.presentation, target.presentation
        ga, ra = ma.rows, ma.cols
        gb, rb = mb.rows, mb.cols
        ia, ira = IntMatrix.identity(ga), IntMatrix.identity(ra)
        igb, irb = IntMatrix.identity(gb), IntMatrix.identity(rb)
        l = hstack(ma.transpose().kron(igb), -(ira.kron(mb)))
        n1 = vstack(ia.kron(mb), ma.transpose().kron(irb))
        n2 = vstack(IntMatrix.zero(gb * ga, ra * kernel_basis(mb).cols),
                    ira.kron(kernel_basis(mb)))
        super().__init__(subquotient(l, hstack(n1, n2)))
        self.source = source
        self.target = target

    def from_matrix(self, x: IntMatrix) -> GroupElement:
        """Class of the homomorphism sending generator j of A to column j of x."""
        ma, mb = self.source.presentation, self.target.presentation
        if x.rows != self.target.ngens or x.cols != self.source.ngens:
            raise InputError("homomorphism matrix has wrong shape")
        y = solve_matrix(mb, x @ ma)
        if y is None:
            raise InputError("matrix does not define a homomorphism")
        return self.element(self._sq.to_coords(vec(x) + vec(y)))

    def to_matrix(self, el: GroupElement) -> IntMatrix:
        amb = self._sq.from_coords(el.coords)
        gb, ga = self.target.ngens, self.source.ngens
        return unvec(amb[:gb * ga], gb, ga)

    def to_hom(self, el: GroupElement) -> GroupHom:
        return GroupHom(self.source, self.target, self.to_matrix(el), check=False)

    def evaluate(self, el: GroupElement, a: GroupElement) -> GroupElement:
        """Evaluation pairing Hom(A, B) x A -> B."""
        return self.to_hom(el).apply(a)


class Ext1Group(_PairSubquotientGroup):
    """Ext^1(A, B), computed from a length-1 free resolution of A.

    The resolution 0 -> Z^m --rel--> Z^g -> A is fixed by taking a lattice
    basis of the columns of A's presentation, so cocycle coordinates are
    reproducible.  A cocycle is a matrix Z^m -> Z^{gens of B}.
    """

    def __init__(self, source: FgAbGroup, target: FgAbGroup):
        self.resolution = lattice_basis(source.presentation)
        mb = target.presentation
        gb = target.ngens
        m = self.resolution.cols
        ambient = gb * m
        n = hstack(self.resolution.transpose().kron(IntMatrix.identity(gb)),
                   IntMatrix.identity(m).kron(mb))
        super().__init__(subquotient(IntMatrix.zero(0, ambient), n))
        self.source = source
        self.target = target

    def from_cocycle(self, x: IntMatrix) -> GroupElement:
        if x.rows != self.target.ngens or x.cols != self.resolution.cols:
            raise InputError("cocycle matrix has wrong shape")
        return self.element(self._sq.to_coords(vec(x)))

    def to_cocycle(self, el: GroupElement) -> IntMatrix:
        return unvec(self._sq.from_coords(el.coords),
                     self.target.ngens, self.resolution.cols)


class TensorGroup(FgAbGroup):
    """A tensor B via the Kronecker product of presentations."""

    def __init__(self, left: FgAbGroup, right: FgAbGroup):
        ma, mb = left.presentation, right.presentation
        ia, ib = IntMatrix.identity(ma.rows), IntMatrix.identity(mb.rows)
        super().__init__(hstack(ma.kron(ib), ia.kron(mb)))
        self.left = left
        self.right = right

    def pure(self, a: GroupElement, b: GroupElement) -> GroupElement:
        coords = tuple(x * y for x in a.coords for y in b.coords)
        return self.element(coords)

    def induced_endo(self, alpha: GroupHom, beta: GroupHom) -> GroupHom:
        """The endomorphism alpha tensor beta for endomorphisms of the factors."""
        return GroupHom(self, self, alpha.matrix.kron(beta.matrix), check=False)


class Tor1Group(_PairSubquotientGroup):
    """Tor_1(A, B) from a length-1 free resolution of A tensored with B."""

    def __init__(self, source: FgAbGroup, target: FgAbGroup):
        self.resolution = lattice_basis(source.presentation)
        mprime, mb = self.resolution, target.presentation
        ga, m = mprime.rows, mprime.cols
        gb, rb = mb.rows, mb.cols
        iga, im = IntMatrix.identity(ga), IntMatrix.identity(m)
        igb, irb = IntMatrix.identity(gb), IntMatrix.identity(rb)
        l = hstack(mprime.kron(igb), -(iga.kron(mb)))
        n1 = vstack(im.kron(mb), mprime.kron(irb))
        n2 = vstack(IntMatrix.zero(gb * m, ga * kernel_basis(mb).cols),
                    iga.kron(kernel_basis(mb)))
        super().__init__(subquotient(l, hstack(n1, n2)))
        self.source = source
        self.target = target


def hom(a: FgAbGroup, b: FgAbGroup) -> HomGroup:
    """The group Hom(A, B), with evaluation pairing."""
    return HomGroup(a, b)


def ext1(a: FgAbGroup, b: FgAbGroup) -> Ext1Group:
    """The group Ext^1(A, B); always finite for finitely generated A, B."""
    return Ext1Group(a, b)


def tensor(a: FgAbGroup, b: FgAbGroup) -> TensorGroup:
    return TensorGroup(a, b)


def tor1(a: FgAbGroup, b: FgAbGroup) -> Tor1Group:
    return Tor1Group(a, b)


def graded_hom(a: GradedAbGroup, b: GradedAbGroup) -> DirectSum:
    """Degree-0 graded Hom: Hom(A0, B0) + Hom(A1, B1)."""
    return DirectSum((hom(a.even, b.even), hom(a.odd, b.odd)))


def graded_ext_shifted(a: GradedAbGroup, b: GradedAbGroup) -> DirectSum:
    """The degree-shifted Ext used by the universal coefficient sequence:
    Ext^1(A0, B1) + Ext^1(A1, B0)."""
    return DirectSum((ext1(a.even, b.odd), ext1(a.odd, b.even)))


def homology_of_pair(f: GroupHom, g: GroupHom) -> tuple[FgAbGroup, Subquotient]:
    """ker(g)/im(f) at the middle group of source --f--> middle --g--> target.

    Returns the homology group together with the Subquotient giving its
    generators as coordinate vectors over the middle group's generators.
    """
    if not g.compose(f).is_zero():
        raise InputError("homology_of_pair: composite is not zero")
    sq = lattice_quotient(g.kernel_gens(), f.image_gens())
    return FgAbGroup(sq.presentation), sq
