"""Independence, direct sums, the socle, and semi-simplicity.

Semi-simplicity is decided by several independent routes (five for a filter,
twelve for the whole lattice).  They are all evaluated and must agree; a
disagreement is an implementation bug and raises InternalInconsistency.
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Sequence, Tuple

from . import bits
from .algebra import Lattice, boolean_center, powers, star
from .errors import CapacityExceeded, EmptyFamily, InternalInconsistency, LatticeMismatch
from .filters import Filter, FilterLattice, _generate, filter_lattice

MAX_FAMILY = 20


@dataclass(frozen=True)
class DirectSumWitness:
    """``target`` is the direct sum of ``parts`` (indices into Filt(L))."""

    parts: Tuple[int, ...]
    target: int

    def filters(self, fl: FilterLattice) -> Tuple[Filter, ...]:
        return tuple(fl.filters[i] for i in self.parts)


# -- independence ------------------------------------------------------------


def _independent_by_definition(fl: FilterLattice, family: Sequence[int]) -> bool:
    t = fl.trivial
    for j in range(len(family)):
        rest = fl.join_all(family[i] for i in range(len(family)) if i != j)
        if fl.meet_table[family[j]][rest] != t:
            return False
    return True


def _independent_by_blocks(fl: FilterLattice, family: Sequence[int]) -> bool:
    """Disjoint non-empty index blocks have joins meeting in {1}."""
    k = len(family)
    for labels in product(range(3), repeat=k):  # 0: neither, 1: block A, 2: block B
        A = [family[i] for i in range(k) if labels[i] == 1]
        B = [family[i] for i in range(k) if labels[i] == 2]
        if A and B and fl.meet_table[fl.join_all(A)][fl.join_all(B)] != fl.trivial:
            return False
    return True


def _independent_by_factorization(fl: FilterLattice, family: Sequence[int]) -> bool:
    """On every subfamily, (f_i) ↦ ⊙ f_i is injective."""
    L = fl.lattice
    k = len(family)
    for size in range(2, k + 1):
        for sub in combinations(range(k), size):
            seen = set()
            for choice in product(*(list(bits.members(fl.masks[family[i]])) for i in sub)):
                acc = L.top
                for f in choice:
                    acc = L.odot[acc][f]
                if acc in seen:
                    return False
                seen.add(acc)
    return True


def independent_indices(fl: FilterLattice, family: Sequence[int], cross_check: bool = True) -> bool:
    if not family:
        raise EmptyFamily("independence is defined for non-empty families")
    verdict = _independent_by_definition(fl, family)
    if cross_check and len(family) <= MAX_FAMILY // 2:
        if _independent_by_blocks(fl, family) != verdict:
            raise InternalInconsistency("independence: block form disagrees with the definition")
        if _independent_by_factorization(fl, family) != verdict:
            raise InternalInconsistency("independence: factorization form disagrees")
    return verdict


def is_independent(L: Lattice, family: Sequence[Filter]) -> bool:
    if not family:
        raise EmptyFamily("independence is defined for non-empty families")
    if any(F.lattice is not L for F in family):
        raise LatticeMismatch("family contains a filter of another lattice")
    fl = filter_lattice(L)
    return independent_indices(fl, [fl.idx(F) for F in family])


def is_direct_sum(fl: FilterLattice, parts: Sequence[int], target: int) -> bool:
    return fl.join_all(parts) == target and independent_indices(fl, parts, cross_check=False)


def decompositions(fl: FilterLattice, f: int) -> List[DirectSumWitness]:
    t = fl.trivial
    return [
        DirectSumWitness((g, h), f)
        for g in range(len(fl))
        for h in range(len(fl))
        if fl.meet_table[g][h] == t and fl.join_table[g][h] == f
    ]


def decompose_direct_sum(L: Lattice, F: Filter) -> List[DirectSumWitness]:
    """All ordered two-part decompositions F = G ⊕ H.

    For F = L these are exactly the pairs ([e), [e*)) with e Boolean, which is
    checked.
    """
    fl = filter_lattice(L)
    f = fl.idx(F)
    found = decompositions(fl, f)
    if f == fl.whole:
        expected = {
            (fl.index[_generate(L, 1 << e)], fl.index[_generate(L, 1 << star(L, e))])
            for e in boolean_center(L)
        }
        if {w.parts for w in found} != expected:
            raise InternalInconsistency("decompositions of L disagree with the Boolean center")
    return found


# -- socle -------------------------------------------------------------------


def socle_index(fl: FilterLattice, f: int) -> int:
    soc = fl.join_all(t for t in fl.simples if fl.subset(t, f))
    if f != fl.trivial:
        via_essentials = fl.intersect_all(fl.essential_family(f))
        if via_essentials != soc:
            raise InternalInconsistency(f"Soc({fl.filters[f]}) disagrees with ⋂E_F")
    return soc


def socle(L: Lattice, F: Filter) -> Filter:
    """Join of the simple filters inside F ({1} when there are none)."""
    fl = filter_lattice(L)
    return fl.filters[socle_index(fl, fl.idx(F))]


# -- archimedean elements -----------------------------------------------------


def is_archimedean(L: Lattice, x) -> bool:
    """Some power x^n (n ≥ 1) is Boolean."""
    B = boolean_center(L)
    return any(p in B for p in powers(L, L.element(x)))


def is_hyperarchimedean(L: Lattice) -> bool:
    verdict = all(is_archimedean(L, x) for x in range(L.n))
    fl = filter_lattice(L)
    if (fl.primes == fl.maximals) != verdict or (fl.primes == fl.minimal_primes) != verdict:
        raise InternalInconsistency("hyperarchimedean verdict disagrees with Spec/Max/MinP")
    return verdict


def is_local(L: Lattice) -> bool:
    return len(filter_lattice(L).maximals) == 1


def is_semilocal(L: Lattice) -> bool:
    """Always true: a finite lattice has finitely many maximal filters."""
    return True


# -- semi-simplicity ---------------------------------------------------------


def _greedy_simple_sum(fl: FilterLattice, f: int) -> List[int]:
    chosen: List[int] = []
    for t in fl.simples:
        if fl.subset(t, f) and fl.meet_table[t][fl.join_all(chosen)] == fl.trivial:
            chosen.append(t)
    return chosen


def filter_conditions(fl: FilterLattice, f: int) -> Dict[str, bool]:
    """The five equivalent descriptions of a semi-simple filter F ≠ {1}."""
    t = fl.trivial
    below = [h for h in range(len(fl)) if fl.subset(h, f)]
    simples = [s for s in fl.simples if fl.subset(s, f)]
    greedy = _greedy_simple_sum(fl, f)

    def complemented(h):
        fast = fl.meet_table[fl.star[h]][f]
        candidates = [fast] + [g for g in range(len(fl)) if g != fast]
        return any(fl.meet_table[h][g] == t and fl.join_table[h][g] == f for g in candidates)

    return {
        "join_of_simples": bool(simples) and fl.join_all(simples) == f,
        "direct_sum_of_simples": bool(greedy)
        and fl.join_all(greedy) == f
        and independent_indices(fl, greedy),
        "every_subfilter_complemented": all(complemented(h) for h in below),
        "splits_with_star": all(
            fl.meet_table[h][fl.meet_table[fl.star[h]][f]] == t
            and fl.join_table[h][fl.meet_table[fl.star[h]][f]] == f
            for h in below
        ),
        "only_self_essential": fl.essential_family(f) == [f],
    }


def semisimple_index(fl: FilterLattice, f: int) -> bool:
    if f == fl.trivial:
        return False
    conditions = filter_conditions(fl, f)
    if len(set(conditions.values())) != 1:
        raise InternalInconsistency(f"semi-simplicity of {fl.filters[f]} is ambiguous: {conditions}")
    return conditions["join_of_simples"]


def is_semisimple_filter(L: Lattice, F: Filter) -> bool:
    """F ≠ {1} is a join of simple filters; {1} is never semi-simple."""
    fl = filter_lattice(L)
    return semisimple_index(fl, fl.idx(F))


def _finite_simple_decomposition(fl: FilterLattice) -> bool:
    simples = fl.simples
    if len(simples) > MAX_FAMILY:
        raise CapacityExceeded(f"{len(simples)} simple filters; subset search capped at {MAX_FAMILY}")
    for size in range(1, len(simples) + 1):
        for family in combinations(simples, size):
            if fl.join_all(family) == fl.whole and independent_indices(fl, family, cross_check=False):
                return True
    return False


def _intersections_of_maximals(fl: FilterLattice) -> Dict[int, int]:
    """How many non-empty sets of distinct maximal filters meet to each filter."""
    maximals = fl.maximals
    if len(maximals) > MAX_FAMILY:
        raise CapacityExceeded(f"{len(maximals)} maximal filters; subset search capped at {MAX_FAMILY}")
    counts: Dict[int, int] = {}
    for size in range(1, len(maximals) + 1):
        for family in combinations(maximals, size):
            i = fl.intersect_all(family)
            counts[i] = counts.get(i, 0) + 1
    return counts


def lattice_conditions(L: Lattice) -> Dict[str, bool]:
    """The twelve equivalent descriptions of a semi-simple lattice."""
    fl = filter_lattice(L)
    whole = fl.whole
    base = filter_conditions(fl, whole)
    B = boolean_center(L)
    boolean_principal = {fl.index[_generate(L, 1 << e)] for e in B}
    hyper = is_hyperarchimedean(L)
    semilocal = is_semilocal(L)
    counts = _intersections_of_maximals(fl)
    return {
        "join_of_simples": base["join_of_simples"],
        "direct_sum_of_simples": base["direct_sum_of_simples"],
        "every_filter_complemented": base["every_subfilter_complemented"],
        "splits_with_star": base["splits_with_star"],
        "boolean_generated_filters": boolean_principal == set(range(len(fl))),
        "only_whole_essential": base["only_self_essential"],
        "finite_direct_sum_of_simples": _finite_simple_decomposition(fl),
        "hyperarchimedean_semilocal": hyper and semilocal,
        "radical_trivial_semilocal": fl.radical == fl.trivial and semilocal,
        "unique_maximal_intersections": all(counts.get(p, 0) == 1 for p in fl.proper),
        "trivial_filter_maximal_intersection": counts.get(fl.trivial, 0) >= 1,
        "nontrivial_filters_semisimple": all(
            semisimple_index(fl, f) for f in range(len(fl)) if f != fl.trivial
        ),
    }


def is_semisimple_lattice(L: Lattice) -> bool:
    conditions = lattice_conditions(L)
    if len(set(conditions.values())) != 1:
        raise InternalInconsistency(f"semi-simplicity of L is ambiguous: {conditions}")
    return conditions["join_of_simples"]


def audit(L: Lattice, name: str = "lattice"):
    """Run the full claim catalog on L (see :mod:`rlat.audit`)."""
    from .audit import audit as run

    return run(L, name)
