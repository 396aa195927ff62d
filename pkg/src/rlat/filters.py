"""Filters of a finite residuated lattice and the lattice they form.

Every classification that has a known element-wise characterization is
computed twice, once from the inclusion order of :class:`FilterLattice` and
once element-wise; disagreement raises :class:`InternalInconsistency`.
"""

import os
import weakref
from functools import cached_property
from itertools import product
from typing import Dict, Iterable, List, Optional, Union

from . import bits
from .algebra import Lattice, powers, star
from .errors import (
    CapacityExceeded,
    EmptyGeneratingSet,
    InternalInconsistency,
    LatticeMismatch,
    NotAFilter,
    NotASubfilter,
)

SCAN_LIMIT = 20
DEFAULT_CAP = 100_000

ElementSet = Union[int, Iterable]


def default_cap() -> int:
    value = os.environ.get("RLAT_CAP")
    return int(value) if value else DEFAULT_CAP


def as_mask(L: Lattice, S: ElementSet) -> int:
    """Accept a bitmask, a Filter, or an iterable of indices / names."""
    if isinstance(S, Filter):
        return S.mask
    if isinstance(S, int):
        return S
    return L.mask(S)


# -- subset predicates -------------------------------------------------------


def is_filter_mask(L: Lattice, mask: int) -> bool:
    """(F1) closed under ⊙ and (F2) upward closed, for a non-empty subset."""
    if not mask:
        return False
    elems = list(bits.members(mask))
    for x in elems:
        if L.up[x] & ~mask:
            return False
    for i, x in enumerate(elems):
        row = L.odot[x]
        for y in elems[i:]:
            if not mask >> row[y] & 1:
                return False
    return True


def is_deductive_system(L: Lattice, mask: int) -> bool:
    """(D1) contains 1 and (D2) closed under modus ponens."""
    if not mask >> L.top & 1:
        return False
    for x in bits.members(mask):
        for y in range(L.n):
            if mask >> L.arrow[x][y] & 1 and not mask >> y & 1:
                return False
    return True


def upward_closure(L: Lattice, mask: int) -> int:
    out = 0
    for x in bits.members(mask):
        out |= L.up[x]
    return out


def _product_closure(L: Lattice, mask: int) -> int:
    while True:
        elems = list(bits.members(mask))
        grown = mask
        for x in elems:
            row = L.odot[x]
            for y in elems:
                grown |= 1 << row[y]
        if grown == mask:
            return mask
        mask = grown


def _generate(L: Lattice, mask: int) -> int:
    return upward_closure(L, _product_closure(L, mask | L.unit_mask))


# -- the Filter value type ---------------------------------------------------


class Filter:
    """A filter, i.e. a validated set of elements of one lattice."""

    __slots__ = ("lattice", "mask")

    def __init__(self, lattice: Lattice, mask: int, check: bool = True):
        if check and not is_filter_mask(lattice, mask):
            raise NotAFilter(f"{lattice.names_of(mask)} is not a filter")
        self.lattice = lattice
        self.mask = mask

    def __eq__(self, other):
        if not isinstance(other, Filter):
            return NotImplemented
        return self.lattice is other.lattice and self.mask == other.mask

    def __hash__(self):
        return hash((id(self.lattice), self.mask))

    def __contains__(self, x):
        return bool(self.mask >> self.lattice.element(x) & 1)

    def __iter__(self):
        return bits.members(self.mask)

    def __len__(self):
        return bits.count(self.mask)

    def __le__(self, other):
        _same(self, other)
        return bits.is_subset(self.mask, other.mask)

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    @property
    def names(self) -> List[str]:
        return self.lattice.names_of(self.mask)

    @property
    def is_trivial(self) -> bool:
        return self.mask == self.lattice.unit_mask

    @property
    def is_proper(self) -> bool:
        return not self.mask & 1 << self.lattice.bottom

    def __repr__(self):
        return "Filter{" + ",".join(self.names) + "}"


def _same(F: Filter, G: Filter):
    if F.lattice is not G.lattice:
        raise LatticeMismatch("filters belong to different lattices")


# -- generation ----------------------------------------------------------------


def generated_filter(L: Lattice, S: ElementSet) -> Filter:
    """[S): the least filter containing S."""
    mask = as_mask(L, S)
    if not mask:
        raise EmptyGeneratingSet("cannot generate a filter from the empty set")
    return Filter(L, _generate(L, mask), check=False)


def principal_filter(L: Lattice, x) -> Filter:
    """[x), cross-checked against {z : x^n ≤ z for some n ≥ 1}."""
    x = L.element(x)
    F = generated_filter(L, 1 << x)
    by_powers = 0
    for p in powers(L, x):
        by_powers |= L.up[p]
    if by_powers != F.mask:
        raise InternalInconsistency(f"[{L.names[x]}) disagrees with its power description")
    return F


def scan_filters(L: Lattice) -> List[int]:
    """Every filter, by testing each subset that contains the top element."""
    top_bit = L.unit_mask
    rest = [i for i in range(L.n) if i != L.top]
    found = []
    for choice in range(1 << len(rest)):
        mask = top_bit
        for k, i in enumerate(rest):
            if choice >> k & 1:
                mask |= 1 << i
        if is_filter_mask(L, mask):
            found.append(mask)
    return sorted(found, key=bits.sort_key)


def closure_filters(L: Lattice) -> List[int]:
    """Every filter, as the closure of the principal filters under ∨ and ∩."""
    found = {_generate(L, 1 << x) for x in range(L.n)}
    frontier = list(found)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(found):
                for c in (a & b, _generate(L, a | b)):
                    if c not in found:
                        found.add(c)
                        fresh.append(c)
        frontier = fresh
    return sorted(found, key=bits.sort_key)


# -- the filter lattice --------------------------------------------------------


class FilterLattice:
    """Filt(L) with its meet/join tables and cached classifications.

    Filters are indexed in canonical order (cardinality, then member list),
    so index 0 is always {1} and the last index is L.
    """

    def __init__(self, L: Lattice, masks: List[int]):
        self.lattice = L
        self.masks = tuple(masks)
        self.filters = tuple(Filter(L, m, check=False) for m in masks)
        self.index = {m: i for i, m in enumerate(masks)}
        k = len(masks)
        self.trivial = self.index[L.unit_mask]
        self.whole = self.index[L.full]
        self.meet_table = tuple(
            tuple(self.index[masks[i] & masks[j]] for j in range(k)) for i in range(k)
        )
        self.join_table = tuple(
            tuple(self.index[_generate(L, masks[i] | masks[j])] for j in range(k))
            for i in range(k)
        )

    def __len__(self):
        return len(self.masks)

    def __iter__(self):
        return iter(self.filters)

    def __repr__(self):
        return f"FilterLattice({len(self)} filters of {self.lattice!r})"

    def idx(self, F) -> int:
        """Index of a Filter or a filter mask."""
        if isinstance(F, Filter):
            if F.lattice is not self.lattice:
                raise LatticeMismatch("filter belongs to a different lattice")
            F = F.mask
        return self.index[F]

    def subset(self, i: int, j: int) -> bool:
        return bits.is_subset(self.masks[i], self.masks[j])

    def intersect_all(self, indices: Iterable[int]) -> int:
        """Index of the intersection of a family; the empty family gives L."""
        mask = self.lattice.full
        for i in indices:
            mask &= self.masks[i]
        return self.index[mask]

    def join_all(self, indices: Iterable[int]) -> int:
        """Index of the join of a family; the empty family gives {1}."""
        acc = self.trivial
        for i in indices:
            acc = self.join_table[acc][i]
        return acc

    @cached_property
    def covers(self) -> Dict[int, List[int]]:
        """Hasse diagram: j in covers[i] iff i ⊊ j with no filter strictly between."""
        k = len(self)
        out = {}
        for i in range(k):
            above = [j for j in range(k) if j != i and self.subset(i, j)]
            out[i] = [
                j
                for j in above
                if not any(m != j and self.subset(m, j) for m in above)
            ]
        return out

    @cached_property
    def proper(self) -> List[int]:
        return [i for i in range(len(self)) if self.filters[i].is_proper]

    # -- primes --------------------------------------------------------------

    @cached_property
    def primes(self) -> List[int]:
        L = self.lattice
        out = []
        for i in self.proper:
            P = self.masks[i]
            elementwise = all(
                not P >> L.join[x][y] & 1 or P >> x & 1 or P >> y & 1
                for x, y in product(range(L.n), repeat=2)
            )
            orderwise = all(
                not self.subset(self.meet_table[a][b], i) or self.subset(a, i) or self.subset(b, i)
                for a, b in product(range(len(self)), repeat=2)
            )
            if elementwise != orderwise:
                raise InternalInconsistency(f"primality of {self.filters[i]} is ambiguous")
            if elementwise:
                out.append(i)
        return out

    @cached_property
    def maximals(self) -> List[int]:
        L = self.lattice
        out = []
        for i in self.proper:
            M = self.masks[i]
            orderwise = not any(j != i and self.subset(i, j) for j in self.proper)
            # x ∉ M  ⇔  (x^n)* ∈ M for some n ≥ 1
            elementwise = all(
                (not M >> x & 1) == any(M >> star(L, p) & 1 for p in powers(L, x))
                for x in range(L.n)
            )
            if orderwise != elementwise:
                raise InternalInconsistency(f"maximality of {self.filters[i]} is ambiguous")
            if orderwise:
                out.append(i)
        return out

    @cached_property
    def minimal_primes(self) -> List[int]:
        L = self.lattice
        primes = self.primes
        out = []
        for i in primes:
            P = self.masks[i]
            orderwise = not any(j != i and self.subset(j, i) for j in primes)
            # every x ∈ P has some y ∉ P with x ∨ y = 1
            elementwise = all(
                any(not P >> y & 1 and L.join[x][y] == L.top for y in range(L.n))
                for x in bits.members(P)
            )
            if orderwise != elementwise:
                raise InternalInconsistency(f"minimality of prime {self.filters[i]} is ambiguous")
            if orderwise:
                out.append(i)
        return out

    # -- radical, simple, star, essential --------------------------------------

    @cached_property
    def radical(self) -> int:
        L = self.lattice
        by_max = self.intersect_all(self.maximals)
        formula = 0
        for x in range(L.n):
            # for every n there is k with ((x^n)*)^k = 0
            if all(L.bottom in powers(L, star(L, p)) for p in powers(L, x)):
                formula |= 1 << x
        if formula != self.masks[by_max]:
            raise InternalInconsistency("radical: ∩Max(L) disagrees with the element formula")
        return by_max

    @cached_property
    def simples(self) -> List[int]:
        atoms = sorted(self.covers[self.trivial])
        by_definition = [
            i
            for i in range(len(self))
            if i != self.trivial
            and all(j in (self.trivial, i) for j in range(len(self)) if self.subset(j, i))
        ]
        if atoms != by_definition:
            raise InternalInconsistency("simple filters: atoms disagree with the definition")
        return atoms

    @cached_property
    def star(self) -> List[int]:
        """star[i] is the index of F_i*."""
        L = self.lattice
        out = []
        for i, F in enumerate(self.masks):
            mask = 0
            for x in range(L.n):
                if all(L.join[x][y] == L.top for y in bits.members(F)):
                    mask |= 1 << x
            # F* = {x : F ∩ [x) = {1}}
            by_definition = bits.mask_of(
                x for x in range(L.n) if F & _generate(L, 1 << x) == L.unit_mask
            )
            if mask != by_definition or mask not in self.index:
                raise InternalInconsistency(f"F* of {self.filters[i]} is inconsistent")
            j = self.index[mask]
            for g in range(len(self)):
                if (self.meet_table[i][g] == self.trivial) != self.subset(g, j):
                    raise InternalInconsistency(f"F* of {self.filters[i]} is not the pseudocomplement")
            out.append(j)
        return out

    def essential_in(self, h: int, f: int) -> bool:
        """H ∈ E_F, with G ranging over all of Filt(L)."""
        if not self.subset(h, f):
            raise NotASubfilter(f"{self.filters[h]} is not contained in {self.filters[f]}")
        t = self.trivial
        verdict = all(
            self.meet_table[f][g] == t for g in range(len(self)) if self.meet_table[h][g] == t
        )
        if f == self.whole and verdict != (self.star[h] == t):
            raise InternalInconsistency(f"essentiality of {self.filters[h]} disagrees with F*")
        return verdict

    def essential_family(self, f: int) -> List[int]:
        return [h for h in range(len(self)) if self.subset(h, f) and self.essential_in(h, f)]

    @cached_property
    def essential(self) -> List[int]:
        """E_L."""
        return self.essential_family(self.whole)

    @cached_property
    def generators(self) -> List[List[int]]:
        """generators[i] lists the elements x with [x) = F_i."""
        out = [[] for _ in self.masks]
        for x in range(self.lattice.n):
            out[self.index[_generate(self.lattice, 1 << x)]].append(x)
        return out

    def classification(self, i: int) -> Dict[str, bool]:
        return {
            "proper": i in self.proper,
            "prime": i in self.primes,
            "maximal": i in self.maximals,
            "minimal_prime": i in self.minimal_primes,
            "simple": i in self.simples,
            "essential_in_L": i in self.essential,
            "principal": bool(self.generators[i]),
        }


_cache: "weakref.WeakKeyDictionary[Lattice, FilterLattice]" = weakref.WeakKeyDictionary()


def all_filters(L: Lattice, cap: Optional[int] = None, method: str = "auto") -> FilterLattice:
    """Build Filt(L).

    ``method`` is ``"scan"`` (test all subsets), ``"closure"`` (close the
    principal filters under ∨ and ∩) or ``"auto"`` (scan when n ≤ 20).
    """
    if method == "auto":
        method = "scan" if L.n <= SCAN_LIMIT else "closure"
    masks = scan_filters(L) if method == "scan" else closure_filters(L)
    cap = default_cap() if cap is None else cap
    if len(masks) > cap:
        raise CapacityExceeded(f"{len(masks)} filters exceed the cap of {cap}")
    return FilterLattice(L, masks)


def filter_lattice(L: Lattice) -> FilterLattice:
    """Cached :func:`all_filters` for a lattice."""
    fl = _cache.get(L)
    if fl is None:
        fl = _cache[L] = all_filters(L)
    return fl


# -- operations on Filter values -------------------------------------------


def filter_meet(F: Filter, G: Filter) -> Filter:
    _same(F, G)
    return Filter(F.lattice, F.mask & G.mask, check=False)


def filter_join(F: Filter, G: Filter) -> Filter:
    """F ∨ G = [F ∪ G), cross-checked against {x : a⊙b ≤ x, a ∈ F, b ∈ G}."""
    _same(F, G)
    L = F.lattice
    joined = _generate(L, F.mask | G.mask)
    elementwise = 0
    for a in F:
        for b in G:
            elementwise |= L.up[L.odot[a][b]]
    if joined != elementwise:
        raise InternalInconsistency("filter join disagrees with its element form")
    return Filter(L, joined, check=False)


def _lookup(F: Filter):
    fl = filter_lattice(F.lattice)
    return fl, fl.idx(F)


def star_filter(F: Filter) -> Filter:
    """F* = {x : x ∨ y = 1 for all y ∈ F}."""
    fl, i = _lookup(F)
    return fl.filters[fl.star[i]]


def is_prime(P: Filter) -> bool:
    fl, i = _lookup(P)
    return i in fl.primes


def is_maximal(M: Filter) -> bool:
    fl, i = _lookup(M)
    return i in fl.maximals


def is_minimal_prime(P: Filter) -> bool:
    fl, i = _lookup(P)
    return i in fl.minimal_primes


def radical(L: Lattice) -> Filter:
    fl = filter_lattice(L)
    return fl.filters[fl.radical]


def is_simple(T: Filter) -> bool:
    fl, i = _lookup(T)
    return i in fl.simples


def is_essential_in(H: Filter, F: Filter) -> bool:
    _same(H, F)
    fl = filter_lattice(H.lattice)
    return fl.essential_in(fl.idx(H), fl.idx(F))


def essential_family(F: Filter, cap: Optional[int] = None) -> List[Filter]:
    """E_F, all filters essential in F (always contains F itself)."""
    fl, f = _lookup(F)
    out = fl.essential_family(f)
    cap = default_cap() if cap is None else cap
    if len(out) > cap:
        raise CapacityExceeded(f"E_F has {len(out)} members, above the cap of {cap}")
    return [fl.filters[h] for h in out]


def spec(L: Lattice) -> List[Filter]:
    fl = filter_lattice(L)
    return [fl.filters[i] for i in fl.primes]


def max_filters(L: Lattice) -> List[Filter]:
    fl = filter_lattice(L)
    return [fl.filters[i] for i in fl.maximals]


def minimal_primes(L: Lattice) -> List[Filter]:
    fl = filter_lattice(L)
    return [fl.filters[i] for i in fl.minimal_primes]


def simple_filters(L: Lattice) -> List[Filter]:
    fl = filter_lattice(L)
    return [fl.filters[i] for i in fl.simples]
