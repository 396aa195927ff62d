"""Spec(L) and Max(L) as finite topological spaces (Stone topology).

Points are filter indices into the lattice's :class:`FilterLattice`; point
sets are frozensets of such indices.  The open sets are held extensionally
as the family {U(F) : F ∈ Filt(L)}, which is already closed under unions.
"""

from functools import cached_property
from typing import FrozenSet, Iterable, List, Tuple

from . import bits
from .algebra import Lattice, boolean_center, star
from .errors import InternalInconsistency
from .filters import ElementSet, FilterLattice, _generate, as_mask, filter_lattice

PointSet = FrozenSet[int]


class SpectrumSpace:
    def __init__(self, L: Lattice, kind: str = "Spec"):
        if kind not in ("Spec", "Max"):
            raise ValueError(f"unknown spectrum kind {kind!r}")
        self.lattice = L
        self.kind = kind
        self.fl: FilterLattice = filter_lattice(L)
        self.points: Tuple[int, ...] = tuple(
            self.fl.primes if kind == "Spec" else self.fl.maximals
        )
        self.all: PointSet = frozenset(self.points)

    def __repr__(self):
        return f"SpectrumSpace({self.kind}, {len(self.points)} points)"

    def U(self, mask: int) -> PointSet:
        return frozenset(p for p in self.points if mask & ~self.fl.masks[p])

    def V(self, mask: int) -> PointSet:
        return self.all - self.U(mask)

    @cached_property
    def opens(self) -> FrozenSet[PointSet]:
        return frozenset(self.U(m) for m in self.fl.masks)

    @cached_property
    def closeds(self) -> FrozenSet[PointSet]:
        return frozenset(self.all - o for o in self.opens)

    def meet_of(self, pts: Iterable[int]) -> int:
        """Mask of ⋂ of a set of points; the empty family gives L."""
        return self.fl.masks[self.fl.intersect_all(pts)]


def spectrum_space(L: Lattice, kind: str = "Spec") -> SpectrumSpace:
    return SpectrumSpace(L, kind)


def open_set(space: SpectrumSpace, A: ElementSet) -> PointSet:
    """U(A) = {P : A ⊄ P} (restricted to the space's points)."""
    return space.U(as_mask(space.lattice, A))


def closed_set(space: SpectrumSpace, A: ElementSet) -> PointSet:
    """V(A), the complement of U(A)."""
    return space.V(as_mask(space.lattice, A))


def _check_points(space, pts):
    pts = frozenset(pts)
    if not pts <= space.all:
        raise ValueError(f"{sorted(pts - space.all)} are not points of {space.kind}(L)")
    return pts


def closure(space: SpectrumSpace, pts: Iterable[int]) -> PointSet:
    """V(⋂𝔄), cross-checked against the smallest closed superset."""
    pts = _check_points(space, pts)
    formula = space.V(space.meet_of(pts))
    generic = space.all
    for c in space.closeds:
        if pts <= c:
            generic = generic & c
    if formula != generic:
        raise InternalInconsistency(f"closure of {sorted(pts)} in {space.kind}(L) is ambiguous")
    return formula


def interior(space: SpectrumSpace, pts: Iterable[int]) -> PointSet:
    """The largest open set U(F) inside the given point set."""
    pts = _check_points(space, pts)
    inside = [o for o in space.opens if o <= pts]
    largest = max(inside, key=lambda o: (len(o), sorted(o)))
    if any(not o <= largest for o in inside):
        raise InternalInconsistency("open sets are not closed under union")
    return largest


def is_dense(space: SpectrumSpace, pts: Iterable[int]) -> bool:
    pts = _check_points(space, pts)
    dense = closure(space, pts) == space.all
    fl = space.fl
    applies = space.kind == "Spec" or fl.radical == fl.trivial
    if applies and dense != (space.meet_of(pts) == space.lattice.unit_mask):
        raise InternalInconsistency("density disagrees with ⋂𝔄 = {1}")
    return dense


def is_nowhere_dense(space: SpectrumSpace, pts: Iterable[int]) -> bool:
    return not interior(space, closure(space, pts))


def isolated_points(space: SpectrumSpace) -> PointSet:
    """M₀(L): points p with {p} open.

    On Max(L) with Rad(L) = {1}, cross-checked against the maximal filters of
    the form [e*) with e Boolean, and against the maximal direct summands of L.
    """
    isolated = frozenset(p for p in space.points if frozenset([p]) in space.opens)
    fl = space.fl
    if space.kind == "Max" and fl.radical == fl.trivial:
        L = space.lattice
        boolean = {
            fl.index[_generate(L, 1 << star(L, e))] for e in boolean_center(L)
        } & set(space.points)
        summands = {
            m
            for m in space.points
            if any(
                fl.meet_table[m][g] == fl.trivial and fl.join_table[m][g] == fl.whole
                for g in range(len(fl))
            )
        }
        if not isolated == boolean == summands:
            raise InternalInconsistency("isolated maximal filters: three descriptions disagree")
    return isolated


def specialization_order(L: Lattice) -> List[Tuple[int, int]]:
    """Edges (P, Q) of Spec(L) with P ⊊ Q."""
    fl = filter_lattice(L)
    primes = fl.primes
    return [(p, q) for p in primes for q in primes if p != q and fl.subset(p, q)]


def point_names(space: SpectrumSpace, pts: Iterable[int]) -> List[List[str]]:
    return [space.fl.filters[p].names for p in sorted(pts, key=lambda p: bits.sort_key(space.fl.masks[p]))]
