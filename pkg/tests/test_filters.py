import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import universe
from rlat import bits
from rlat.errors import (
    CapacityExceeded,
    EmptyGeneratingSet,
    LatticeMismatch,
    NotAFilter,
    NotASubfilter,
)
from rlat.filters import (
    Filter,
    all_filters,
    closure_filters,
    essential_family,
    filter_join,
    filter_lattice,
    filter_meet,
    generated_filter,
    is_deductive_system,
    is_essential_in,
    is_filter_mask,
    is_maximal,
    is_minimal_prime,
    is_prime,
    is_simple,
    max_filters,
    minimal_primes,
    principal_filter,
    radical,
    scan_filters,
    simple_filters,
    spec,
    star_filter,
)


def as_sets(fl, indices):
    return [frozenset(bits.members(fl.masks[i])) for i in indices]


def names(F):
    return "{" + ",".join(F.names) + "}"


# -- frozen values on the worked examples ----------------------------------------
# Each value below was computed with tests/oracles.py and then frozen.


def test_ex44_filter_lattice(ex44):
    fl = filter_lattice(ex44)
    assert [names(F) for F in fl] == ["{1}", "{c,1}", "{a,c,1}", "{b,c,1}", "{0,a,b,c,1}"]
    assert [names(F) for F in spec(ex44)] == ["{1}", "{a,c,1}", "{b,c,1}"]
    assert [names(F) for F in max_filters(ex44)] == ["{a,c,1}", "{b,c,1}"]
    assert [names(F) for F in minimal_primes(ex44)] == ["{1}"]
    assert [names(F) for F in simple_filters(ex44)] == ["{c,1}"]
    assert names(radical(ex44)) == "{c,1}"
    assert fl.covers == {0: [1], 1: [2, 3], 2: [4], 3: [4], 4: []}
    assert [names(fl.filters[i]) for i in fl.essential] == ["{c,1}", "{a,c,1}", "{b,c,1}", "{0,a,b,c,1}"]


def test_ex55_filter_lattice(ex55):
    fl = filter_lattice(ex55)
    assert [names(F) for F in fl] == ["{1}", "{a,1}", "{b,1}", "{0,a,b,1}"]
    assert [names(F) for F in max_filters(ex55)] == ["{a,1}", "{b,1}"]
    assert [names(F) for F in simple_filters(ex55)] == ["{a,1}", "{b,1}"]
    assert names(radical(ex55)) == "{1}"
    assert [names(fl.filters[i]) for i in fl.essential] == ["{0,a,b,1}"]
    assert names(star_filter(principal_filter(ex55, "a"))) == "{b,1}"


def test_idr_filter_lattice(idr):
    assert [names(F) for F in filter_lattice(idr)] == ["{1}", "{0,a,1}"]
    assert [names(F) for F in max_filters(idr)] == ["{1}"]
    assert names(radical(idr)) == "{1}"


def test_minimal_prime_is_trivial_filter_in_idr(idr):
    assert [names(F) for F in minimal_primes(idr)] == ["{1}"]


# -- oracle agreement on every class of order ≤ 4 ---------------------------------


def test_filter_enumeration_matches_subset_oracle(small_universe):
    for L in small_universe:
        fl = filter_lattice(L)
        assert as_sets(fl, range(len(fl))) == oracles.filters(L)


def test_scan_equals_closure(small_universe):
    for L in small_universe:
        assert scan_filters(L) == closure_filters(L)


def test_classifications_match_oracle(small_universe):
    for L in small_universe:
        fl = filter_lattice(L)
        assert as_sets(fl, fl.primes) == oracles.primes(L)
        assert as_sets(fl, fl.maximals) == oracles.maximals(L)
        assert as_sets(fl, fl.minimal_primes) == oracles.minimal_primes(L)
        assert as_sets(fl, fl.simples) == oracles.simples(L)
        assert as_sets(fl, [fl.radical]) == [oracles.radical(L)]


def test_star_and_essential_match_oracle(small_universe):
    for L in small_universe:
        fl = filter_lattice(L)
        fs = oracles.filters(L)
        for i, F in enumerate(fs):
            assert as_sets(fl, [fl.star[i]]) == [oracles.filter_star(L, F)]
            for j, G in enumerate(fs):
                if F <= G:
                    assert fl.essential_in(i, j) == oracles.essential_in(L, F, G)


def test_essential_test_may_restrict_to_subfilters(small_universe):
    # letting G range over all filters or only over G ⊆ F gives the same verdict
    for L in small_universe:
        fs = oracles.filters(L)
        t = oracles.trivial(L)
        for F in fs:
            for H in fs:
                if H <= F:
                    restricted = all(F & G == t for G in fs if G <= F and H & G == t)
                    assert restricted == oracles.essential_in(L, H, F)


def test_filter_join_matches_oracle(small_universe):
    for L in small_universe:
        fl = filter_lattice(L)
        fs = oracles.filters(L)
        for i, F in enumerate(fs):
            for j, G in enumerate(fs):
                assert as_sets(fl, [fl.join_table[i][j]]) == [oracles.filter_join(L, F, G)]
                assert filter_join(fl.filters[i], fl.filters[j]) == fl.filters[fl.join_table[i][j]]


def test_filters_are_deductive_systems(small_universe):
    for L in small_universe:
        for mask in range(1, 1 << L.n):
            assert is_filter_mask(L, mask) == is_deductive_system(L, mask)


def test_every_filter_is_principal(small_universe):
    for L in small_universe:
        fl = filter_lattice(L)
        assert all(fl.generators)


# -- the Filter API ----------------------------------------------------------------


def test_filter_value_semantics(ex44):
    F = generated_filter(ex44, ["a"])
    assert "c" in F and "b" not in F
    assert sorted(F) == [ex44.index("a"), ex44.index("c"), ex44.top]
    assert len(F) == 3
    assert F.is_proper and not F.is_trivial
    assert repr(F) == "Filter{a,c,1}"
    assert F == Filter(ex44, F.mask)
    assert hash(F) == hash(Filter(ex44, F.mask))
    G = principal_filter(ex44, "c")
    assert G < F and F > G and G <= F and F >= G
    assert filter_meet(F, principal_filter(ex44, "b")) == G
    assert filter_join(F, principal_filter(ex44, "b")).mask == ex44.full


def test_predicates_on_filter_values(ex44):
    a, c = principal_filter(ex44, "a"), principal_filter(ex44, "c")
    assert is_prime(a) and is_maximal(a) and not is_minimal_prime(a)
    assert is_minimal_prime(Filter(ex44, ex44.unit_mask))
    assert is_simple(c) and not is_prime(c)
    assert is_essential_in(c, Filter(ex44, ex44.full))
    assert not is_essential_in(Filter(ex44, ex44.unit_mask), a)
    assert [names(H) for H in essential_family(a)] == ["{c,1}", "{a,c,1}"]


def test_filter_errors(ex44, ex55):
    with pytest.raises(NotAFilter):
        Filter(ex44, ex44.mask(["a"]))
    with pytest.raises(EmptyGeneratingSet):
        generated_filter(ex44, [])
    with pytest.raises(LatticeMismatch):
        filter_meet(principal_filter(ex44, "a"), principal_filter(ex55, "a"))
    with pytest.raises(NotASubfilter):
        is_essential_in(principal_filter(ex44, "a"), principal_filter(ex44, "b"))


def test_cap_is_enforced(ex44, monkeypatch):
    with pytest.raises(CapacityExceeded):
        all_filters(ex44, cap=4)
    monkeypatch.setenv("RLAT_CAP", "3")
    with pytest.raises(CapacityExceeded):
        all_filters(ex44)
    with pytest.raises(CapacityExceeded):
        essential_family(Filter(ex44, ex44.full))
    monkeypatch.delenv("RLAT_CAP")
    assert len(all_filters(ex44)) == 5


def test_scan_and_closure_methods_agree_on_bool8(fixtures):
    L = fixtures["bool8"]
    assert all_filters(L, method="scan").masks == all_filters(L, method="closure").masks


# -- properties ---------------------------------------------------------------------

_POOL = universe(5)


@st.composite
def lattice_and_subset(draw):
    L = draw(st.sampled_from(_POOL))
    subset = draw(st.sets(st.integers(0, L.n - 1), min_size=1))
    return L, subset


@settings(max_examples=80, deadline=None)
@given(lattice_and_subset())
def test_generated_filter_is_the_least_filter_above(pair):
    L, S = pair
    F = generated_filter(L, S)
    assert frozenset(F) == oracles.generated(L, S)


@settings(max_examples=80, deadline=None)
@given(lattice_and_subset())
def test_star_filter_is_pseudocomplement(pair):
    L, S = pair
    fl = filter_lattice(L)
    F = generated_filter(L, S)
    Fs = star_filter(F)
    for G in fl:
        assert (filter_meet(F, G).is_trivial) == (G <= Fs)


@settings(max_examples=80, deadline=None)
@given(lattice_and_subset())
def test_every_proper_filter_lies_below_a_maximal(pair):
    L, S = pair
    F = generated_filter(L, S)
    if F.is_proper:
        assert any(F <= M for M in max_filters(L))
        assert F == _meet_of_primes_above(L, F)


def _meet_of_primes_above(L, F):
    mask = L.full
    for P in spec(L):
        if F <= P:
            mask &= P.mask
    return Filter(L, mask)
