from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import universe
from rlat.filters import filter_lattice
from rlat.spectrum import (
    SpectrumSpace,
    closed_set,
    closure,
    interior,
    is_dense,
    is_nowhere_dense,
    isolated_points,
    open_set,
    point_names,
    specialization_order,
    spectrum_space,
)


def oracle_closure(L, points, kind):
    """Smallest set of the form V(F) containing the given primes, by brute force."""
    space = oracles.primes(L) if kind == "Spec" else oracles.maximals(L)
    closeds = [frozenset(P for P in space if F <= P) for F in oracles.filters(L)]
    return frozenset.intersection(frozenset(space), *[c for c in closeds if points <= c])


def to_sets(space, pts):
    return frozenset(frozenset(space.fl.filters[p]) for p in pts)


def test_ex44_spaces(ex44):
    spec = SpectrumSpace(ex44)
    mx = SpectrumSpace(ex44, "Max")
    assert repr(spec) == "SpectrumSpace(Spec, 3 points)"
    assert point_names(spec, spec.points) == [["1"], ["a", "c", "1"], ["b", "c", "1"]]
    assert point_names(mx, isolated_points(mx)) == [["a", "c", "1"], ["b", "c", "1"]]
    assert point_names(spec, open_set(spec, ["a"])) == [["1"], ["b", "c", "1"]]
    assert point_names(spec, closed_set(spec, ["c"])) == [["a", "c", "1"], ["b", "c", "1"]]
    trivial = spec.fl.trivial
    assert closure(spec, [trivial]) == spec.all
    assert is_dense(spec, [trivial])


def test_ex44_max_space_is_discrete_but_radical_nontrivial(ex44):
    mx = SpectrumSpace(ex44, "Max")
    assert len(mx.opens) == 4
    # the radical {c,1} is essential yet V(c) = Max(L) is not nowhere dense
    c = filter_lattice(ex44).index[ex44.mask(["c", "1"])]
    assert not is_nowhere_dense(mx, mx.V(mx.fl.masks[c]))


def test_ex55_max_equals_spec(ex55):
    spec, mx = spectrum_space(ex55), spectrum_space(ex55, "Max")
    assert spec.points == mx.points
    assert isolated_points(mx) == mx.all
    assert specialization_order(ex55) == []


def test_specialization_order_on_ex44(ex44):
    fl = filter_lattice(ex44)
    assert [(fl.filters[p].names, fl.filters[q].names) for p, q in specialization_order(ex44)] == [
        (["1"], ["a", "c", "1"]),
        (["1"], ["b", "c", "1"]),
    ]


def test_unknown_kind_and_foreign_points(ex44):
    with pytest.raises(ValueError):
        SpectrumSpace(ex44, "Zariski")
    with pytest.raises(ValueError):
        closure(SpectrumSpace(ex44, "Max"), [0])


@pytest.mark.parametrize("kind", ["Spec", "Max"])
def test_closure_formula_matches_brute_force(small_universe, kind):
    for L in small_universe:
        space = SpectrumSpace(L, kind)
        pts = list(space.points)
        for k in range(len(pts) + 1):
            for chosen in combinations(pts, k):
                got = to_sets(space, closure(space, chosen))
                assert got == oracle_closure(L, to_sets(space, chosen), kind)


@pytest.mark.parametrize("kind", ["Spec", "Max"])
def test_open_sets_are_a_topology(small_universe, kind):
    for L in small_universe:
        space = SpectrumSpace(L, kind)
        assert frozenset() in space.opens and space.all in space.opens
        for a in space.opens:
            for b in space.opens:
                assert a | b in space.opens and a & b in space.opens


def test_dense_iff_meet_is_trivial_on_spec(small_universe):
    for L in small_universe:
        space = SpectrumSpace(L)
        pts = list(space.points)
        for k in range(len(pts) + 1):
            for chosen in combinations(pts, k):
                assert is_dense(space, chosen) == (space.meet_of(chosen) == L.unit_mask)


_POOL = universe(5)


@st.composite
def space_and_points(draw):
    L = draw(st.sampled_from(_POOL))
    space = SpectrumSpace(L, draw(st.sampled_from(["Spec", "Max"])))
    pts = draw(st.sets(st.sampled_from(space.points)))
    return space, frozenset(pts)


@settings(max_examples=100, deadline=None)
@given(space_and_points())
def test_closure_and_interior_are_kuratowski(pair):
    space, pts = pair
    c = closure(space, pts)
    assert pts <= c and closure(space, c) == c
    i = interior(space, pts)
    assert i <= pts and interior(space, i) == i
    assert space.all - interior(space, space.all - pts) == c


@settings(max_examples=100, deadline=None)
@given(space_and_points())
def test_nowhere_dense_sets_have_dense_complement_closure(pair):
    space, pts = pair
    if is_nowhere_dense(space, pts):
        assert closure(space, space.all - closure(space, pts)) == space.all
