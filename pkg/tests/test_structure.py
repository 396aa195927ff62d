from itertools import combinations

import pytest

import oracles
from conftest import universe
from rlat.errors import EmptyFamily, LatticeMismatch
from rlat.filters import Filter, filter_lattice, principal_filter
from rlat.structure import (
    decompose_direct_sum,
    filter_conditions,
    is_archimedean,
    is_hyperarchimedean,
    is_independent,
    is_local,
    is_semilocal,
    is_semisimple_filter,
    is_semisimple_lattice,
    lattice_conditions,
    socle,
    socle_index,
)


def whole(L):
    return Filter(L, L.full)


def label_pairs(L, witnesses):
    fl = filter_lattice(L)
    return [tuple(",".join(fl.filters[i].names) for i in w.parts) for w in witnesses]


def test_ex44_structure(ex44):
    assert label_pairs(ex44, decompose_direct_sum(ex44, whole(ex44))) == [
        ("1", "0,a,b,c,1"),
        ("0,a,b,c,1", "1"),
    ]
    assert socle(ex44, whole(ex44)).names == ["c", "1"]
    assert not is_hyperarchimedean(ex44)
    assert not is_archimedean(ex44, "a")
    assert is_archimedean(ex44, "0")
    assert not is_local(ex44) and is_semilocal(ex44)
    assert not is_semisimple_lattice(ex44)
    assert not any(lattice_conditions(ex44).values())
    assert is_semisimple_filter(ex44, principal_filter(ex44, "c"))


def test_ex55_structure(ex55):
    pairs = label_pairs(ex55, decompose_direct_sum(ex55, whole(ex55)))
    assert ("a,1", "b,1") in pairs and len(pairs) == 4
    assert socle(ex55, whole(ex55)).names == ["0", "a", "b", "1"]
    assert is_hyperarchimedean(ex55)
    assert is_semisimple_lattice(ex55)
    conditions = lattice_conditions(ex55)
    assert len(conditions) == 12 and all(conditions.values())
    a, b = principal_filter(ex55, "a"), principal_filter(ex55, "b")
    assert is_independent(ex55, [a, b])
    assert not is_independent(ex55, [a, whole(ex55)])


def test_idr_structure(idr):
    assert is_hyperarchimedean(idr) and is_local(idr)
    assert is_semisimple_lattice(idr)
    assert socle(idr, whole(idr)).names == ["0", "a", "1"]


def test_trivial_filter_is_never_semisimple(fixtures):
    for L in fixtures.values():
        assert not is_semisimple_filter(L, Filter(L, L.unit_mask))


def test_independence_errors(ex44, ex55):
    with pytest.raises(EmptyFamily):
        is_independent(ex44, [])
    with pytest.raises(LatticeMismatch):
        is_independent(ex44, [principal_filter(ex55, "a")])


def test_socle_matches_oracle(small_universe):
    for L in small_universe:
        fl = filter_lattice(L)
        for i, F in enumerate(oracles.filters(L)):
            assert frozenset(fl.filters[socle_index(fl, i)]) == oracles.socle(L, F)


def test_socle_equals_meet_of_essentials(small_universe):
    for L in small_universe:
        fl = filter_lattice(L)
        for f in range(len(fl)):
            if f == fl.trivial:
                continue
            E = [H for H in oracles.filters(L) if H <= frozenset(fl.filters[f])
                 and oracles.essential_in(L, H, frozenset(fl.filters[f]))]
            assert frozenset(fl.filters[socle_index(fl, f)]) == frozenset.intersection(*E)


def test_decompositions_of_whole_are_boolean(small_universe):
    for L in small_universe:
        found = {w.parts for w in decompose_direct_sum(L, whole(L))}
        B = oracles.boolean_center(L)
        assert len(found) == len(B)


def test_independence_matches_definition(small_universe):
    for L in small_universe:
        fl = filter_lattice(L)
        fs = list(fl)
        for k in (1, 2, 3):
            for family in combinations(fs, k):
                expected = all(
                    frozenset(F) & _join(L, [G for G in family if G is not F]) == oracles.trivial(L)
                    for F in family
                )
                assert is_independent(L, list(family)) == expected


def _join(L, family):
    acc = oracles.trivial(L)
    for G in family:
        acc = oracles.filter_join(L, acc, frozenset(G))
    return acc


def test_semisimple_verdict_matches_oracle(small_universe):
    for L in small_universe:
        fl = filter_lattice(L)
        for f, F in enumerate(oracles.filters(L)):
            inside = [T for T in oracles.simples(L) if T <= F]
            expected = bool(inside) and _join(L, inside) == F
            assert is_semisimple_filter(L, fl.filters[f]) == expected
            if f != fl.trivial:
                assert len(set(filter_conditions(fl, f).values())) == 1


def test_finite_semisimple_iff_hyperarchimedean():
    for L in universe(5):
        assert is_semisimple_lattice(L) == is_hyperarchimedean(L)
        assert is_semisimple_lattice(L) == (
            filter_lattice(L).radical == filter_lattice(L).trivial
        )
