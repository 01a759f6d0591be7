import itertools

import pytest

from fincat import (
    FunctorData,
    SearchTruncated,
    build_limit_cache,
    delta_functors,
    exists_natural_iso,
    identity_functor,
    is_invertible,
    search_natural_transformations,
    validate_natural_transformation,
)
from fincat.corpus import gen_bool_matrix, gen_boolean_algebra, gen_chain, gen_cyclic_group, gen_m3, gen_terminal
from fincat.search import BUDGET_ENV, default_budget, iter_natural_transformations

import oracles


def test_identity_on_m3_has_exactly_one_iso():
    M = gen_m3()
    res = search_natural_transformations(identity_functor(M), identity_functor(M), iso_only=True)
    assert len(res) == 1 and not res.truncated
    assert res[0].components == M.identities


def test_identity_on_terminal():
    T = gen_terminal()
    assert len(search_natural_transformations(identity_functor(T), identity_functor(T))) == 1


def test_delta_functors_on_m3_have_no_iso():
    M = gen_m3()
    F, G = delta_functors(M, build_limit_cache(M))
    res = search_natural_transformations(F, G, iso_only=True)
    assert len(res) == 0 and not res.truncated
    assert exists_natural_iso(F, G) is None


def test_delta_functors_on_boolean_square_iso_is_identity():
    B = gen_boolean_algebra(2)
    F, G = delta_functors(B, build_limit_cache(B))
    assert F.object_map == G.object_map
    psi = exists_natural_iso(F, G)
    assert psi is not None
    assert all(B.src[m] == B.dst[m] and m == B.identities[B.src[m]] for m in psi.components)


def test_exists_natural_iso_on_equal_functors():
    G = gen_cyclic_group(4)
    F = identity_functor(G)
    assert exists_natural_iso(F, F).components == (0,)


def test_cyclic_group_automorphism_transformations():
    # natural transformations Id => Id on a one-object group are central elements
    G = gen_cyclic_group(5)
    res = search_natural_transformations(identity_functor(G), identity_functor(G))
    assert sorted(eta.components for eta in res) == [(g,) for g in range(5)]


def test_iso_only_components_are_invertible():
    B = gen_bool_matrix(1)
    Id = identity_functor(B)
    for eta in search_natural_transformations(Id, Id, iso_only=True):
        assert all(is_invertible(B, m) is not None for m in eta.components)


def _functor_pairs(C, D):
    fs = [FunctorData(C, D, obj, mor) for obj, mor in oracles.all_functors(C, D)]
    return list(itertools.product(fs, repeat=2))


CASES = [
    (gen_chain(2), gen_chain(3)),
    (gen_chain(2), gen_boolean_algebra(2)),
    (gen_cyclic_group(2), gen_cyclic_group(4)),
    (gen_cyclic_group(3), gen_cyclic_group(6)),
    (gen_chain(2), gen_bool_matrix(1)),
    (gen_bool_matrix(1), gen_bool_matrix(1)),
]


@pytest.mark.parametrize("C,D", CASES, ids=lambda c: repr(c))
@pytest.mark.parametrize("iso_only", [False, True])
def test_search_equals_naive_enumeration(C, D, iso_only):
    pairs = _functor_pairs(C, D)
    assert pairs
    for F, G in pairs:
        res = search_natural_transformations(F, G, iso_only=iso_only)
        got = [eta.components for eta in res]
        assert len(got) == len(set(got))
        assert set(got) == oracles.naive_natural_transformations(F, G, iso_only)
        for eta in res:
            assert validate_natural_transformation(eta).ok


def test_search_is_deterministic():
    B = gen_bool_matrix(1)
    Id = identity_functor(B)
    a = [eta.components for eta in search_natural_transformations(Id, Id)]
    b = [eta.components for eta in search_natural_transformations(Id, Id)]
    assert a == b


def test_budget_truncation_is_flagged():
    B = gen_boolean_algebra(2)
    F, G = delta_functors(B, build_limit_cache(B))
    res = search_natural_transformations(F, G, iso_only=True, limit=3)
    assert res.truncated and not res.transformations
    with pytest.raises(SearchTruncated):
        exists_natural_iso(F, G, limit=3)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "7")
    assert default_budget() == 7
    B = gen_boolean_algebra(2)
    F, G = delta_functors(B, build_limit_cache(B))
    assert search_natural_transformations(F, G).truncated
    monkeypatch.setenv(BUDGET_ENV, "not-a-number")
    assert default_budget() == 10**6


def test_max_results_stops_early():
    G = gen_cyclic_group(6)
    Id = identity_functor(G)
    assert len(search_natural_transformations(Id, Id, max_results=2)) == 2


def test_iterator_is_lazy():
    G = gen_cyclic_group(6)
    Id = identity_functor(G)
    it = iter_natural_transformations(Id, Id)
    assert next(it).components == (0,)
