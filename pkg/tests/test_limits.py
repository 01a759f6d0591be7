import itertools

import pytest
from hypothesis import given, settings, strategies as st

from fincat import (
    FinCategory,
    LimitAbsent,
    build_limit_cache,
    canonical_alpha,
    canonical_delta,
    delta_functors,
    find_binary_coproduct,
    find_binary_product,
    find_initial,
    find_terminal,
    is_distributive,
    is_invertible,
    is_semi_additive,
    is_subterminal,
    plus_times_functors,
    validate_functor,
    validate_natural_transformation,
    zero_structure,
)
from fincat.corpus import (
    gen_bool_matrix,
    gen_boolean_algebra,
    gen_chain,
    gen_divisor_lattice,
    gen_m3,
    gen_n5,
    gen_poset_from_covers,
    gen_terminal,
)
from fincat.limits import (
    NoZeroStructure,
    _mediating_table,
    alpha_transformation,
    copair_from_coproduct,
    delta_transformation,
    pair_into_product,
)

import oracles

POSETS = {
    "chain1": lambda: gen_chain(1),
    "chain2": lambda: gen_chain(2),
    "chain3": lambda: gen_chain(3),
    "b1": lambda: gen_boolean_algebra(1),
    "b2": lambda: gen_boolean_algebra(2),
    "b3": lambda: gen_boolean_algebra(3),
    "div12": lambda: gen_divisor_lattice(12),
    "div30": lambda: gen_divisor_lattice(30),
    "m3": gen_m3,
    "n5": gen_n5,
}

BOT, A, B, C_, TOP = range(5)


def discrete(n):
    return FinCategory(n, list(range(n)), list(range(n)), list(range(n)), {(k, k): k for k in range(n)})


def test_terminal_initial_examples():
    C = gen_chain(3)
    assert (find_terminal(C), find_initial(C)) == (2, 0)
    M = gen_m3()
    assert (find_terminal(M), find_initial(M)) == (TOP, BOT)
    D = discrete(2)
    assert find_terminal(D) is None and find_initial(D) is None


def test_product_examples():
    M = gen_m3()
    assert find_binary_product(M, A, B).apex == BOT
    T = gen_terminal()
    assert find_binary_product(T, 0, 0).apex == 0
    bm = gen_bool_matrix(2)
    w = find_binary_product(bm, 1, 1)
    assert w.apex == 2
    assert [bm.matrices[p] for p in w.projections] == [((1, 0),), ((0, 1),)]


def test_pairing_examples():
    M = gen_m3()
    w = find_binary_product(M, A, B)
    assert pair_into_product(w, *w.projections) == M.identities[w.apex]
    for X in M.objects:
        for f, g in itertools.product(M.hom(X, A), M.hom(X, B)):
            assert pair_into_product(w, f, g) == M.hom(X, BOT)[0]
    bm = gen_bool_matrix(2)
    s = find_binary_coproduct(bm, 1, 1)
    e1, e2 = bm.index_of([[1], [0]]), bm.index_of([[0], [1]])
    assert copair_from_coproduct(s, e1, e2) == bm.index_of([[1, 0], [0, 1]])
    with pytest.raises(LimitAbsent):
        pair_into_product(w, M.identities[TOP], M.identities[TOP])


def test_product_witness_equations_on_bool_matrices():
    bm = gen_bool_matrix(2)
    cache = build_limit_cache(bm)
    for (X, Y), w in cache.products.items():
        if w is None:
            continue
        p, q = w.projections
        for (f, g), m in w.pairing.items():
            assert bm.compose(p, m) == f and bm.compose(q, m) == g
        # mediating maps cover every cone exactly once
        for Aobj in bm.objects:
            cones = len(bm.hom(Aobj, X)) * len(bm.hom(Aobj, Y))
            assert sum(1 for m in w.pairing.values() if bm.src[m] == Aobj) == cones


def test_zero_structure_examples():
    bm = gen_bool_matrix(2)
    z = zero_structure(bm)
    assert z.zero == 0
    assert bm.matrices[z[2, 2]] == ((0, 0), (0, 0))
    assert zero_structure(gen_m3()) is None
    assert zero_structure(gen_terminal()) is not None


def test_zero_maps_factor_through_zero():
    bm = gen_bool_matrix(2)
    z = zero_structure(bm)
    for Y, Z in itertools.product(bm.objects, repeat=2):
        assert z[Y, Z] == bm.compose(bm.hom(0, Z)[0], bm.hom(Y, 0)[0])


def test_delta_examples():
    Bq = gen_boolean_algebra(2)
    cache = build_limit_cache(Bq)
    for X, Y, Z in itertools.product(Bq.objects, repeat=3):
        d = canonical_delta(Bq, cache, X, Y, Z)
        assert d == Bq.identities[Bq.src[d]]
    M = gen_m3()
    d = canonical_delta(M, build_limit_cache(M), A, B, C_)
    assert d == M.hom(BOT, A)[0]
    assert is_invertible(M, d) is None


def test_delta_missing_witness_names_pair():
    bm = gen_bool_matrix(2)
    with pytest.raises(LimitAbsent, match="product of objects 2 and 2"):
        canonical_delta(bm, build_limit_cache(bm), 2, 2, 0)


def test_delta_with_initial_slot_is_invertible_when_x_times_zero_is_zero():
    for make in POSETS.values():
        C = make()
        cache = build_limit_cache(C)
        zero = cache.initial
        for X, Y in itertools.product(C.objects, repeat=2):
            assert cache.product(X, zero).apex == zero
            assert is_invertible(C, canonical_delta(C, cache, X, Y, zero)) is not None


def test_alpha_examples():
    bm = gen_bool_matrix(2)
    cache = build_limit_cache(bm)
    z = zero_structure(bm, cache)
    a = canonical_alpha(bm, cache, z, 1, 1)
    assert bm.matrices[a] == ((1, 0), (0, 1))
    assert is_invertible(bm, a) == a
    T = gen_terminal()
    ct = build_limit_cache(T)
    assert canonical_alpha(T, ct, zero_structure(T, ct), 0, 0) == 0
    M = gen_m3()
    with pytest.raises(NoZeroStructure):
        canonical_alpha(M, build_limit_cache(M), zero_structure(M), A, B)


def test_is_distributive_examples():
    assert is_distributive(gen_boolean_algebra(2)).holds
    rep = is_distributive(gen_m3())
    assert not rep.holds and rep.witness == (A, B, C_)
    assert not is_distributive(gen_n5()).holds


def test_is_distributive_all_scope_errors_on_missing_limit():
    with pytest.raises(LimitAbsent):
        is_distributive(gen_bool_matrix(2), "all")
    rep = is_distributive(gen_bool_matrix(2), "existing")
    assert rep.skipped and rep.checked
    with pytest.raises(ValueError):
        is_distributive(gen_m3(), "some")


def test_is_semi_additive_examples():
    assert is_semi_additive(gen_terminal()).holds
    rep = is_semi_additive(gen_chain(2))
    assert not rep.holds and rep.reason == "not pointed"
    rep = is_semi_additive(gen_bool_matrix(2), "existing")
    assert rep.holds and rep.skipped == [(1, 2), (2, 1), (2, 2)]
    with pytest.raises(LimitAbsent):
        is_semi_additive(gen_bool_matrix(2), "all")


def test_semi_additive_on_three_object_bool_matrices():
    bm = gen_bool_matrix(3)
    rep = is_semi_additive(bm, "existing")
    assert rep.holds
    # exactly the pairs whose biproduct would need more than three rows are skipped
    assert rep.skipped == [(Y, Z) for Y, Z in itertools.product(bm.objects, repeat=2) if Y + Z > 3]


def test_semi_additive_on_five_object_bool_matrices():
    """Objects 0..4; about 16 s because hom(4, 4) alone has 2^16 matrices."""
    bm = gen_bool_matrix(4)
    rep = is_semi_additive(bm, "existing")
    assert rep.holds and (4, 4) in rep.skipped
    assert rep.skipped == [(Y, Z) for Y, Z in itertools.product(bm.objects, repeat=2) if Y + Z > 4]


def test_is_subterminal_examples():
    for make in POSETS.values():
        C = make()
        assert all(is_subterminal(C, T) for T in C.objects)
    bm = gen_bool_matrix(2)
    assert len(bm.hom(2, 1)) == 4 and not is_subterminal(bm, 1)
    assert is_subterminal(bm, 0)


def test_delta_functor_examples():
    Bq = gen_boolean_algebra(2)
    F, G = delta_functors(Bq, build_limit_cache(Bq))
    assert F.object_map == G.object_map
    T = gen_terminal()
    F, G = delta_functors(T, build_limit_cache(T))
    assert set(F.object_map) == {0} == set(G.object_map)
    M = gen_m3()
    F, G = delta_functors(M, build_limit_cache(M))
    u = F.source.encode_object((A, B, C_))
    assert (F.object_map[u], G.object_map[u]) == (BOT, A)
    assert validate_functor(F).ok and validate_functor(G).ok


def test_plus_times_examples():
    C = gen_chain(2)
    P, T = plus_times_functors(C, build_limit_cache(C))
    for u in P.source.objects:
        y, z = P.source.decode_object(u)
        assert P.object_map[u] == max(y, z) and T.object_map[u] == min(y, z)
    M = gen_m3()
    P, T = plus_times_functors(M, build_limit_cache(M))
    u = P.source.encode_object((A, B))
    assert (P.object_map[u], T.object_map[u]) == (TOP, BOT)
    Tc = gen_terminal()
    P, T = plus_times_functors(Tc, build_limit_cache(Tc))
    assert P.object_map == T.object_map == (0,)


@pytest.mark.parametrize("name", sorted(POSETS))
def test_poset_limits_match_lattice_oracle(name):
    C = POSETS[name]()
    leq = oracles.order_of(C)
    n = C.object_count
    cache = build_limit_cache(C)
    for x, y in itertools.product(C.objects, repeat=2):
        assert cache.product(x, y).apex == oracles.meet(leq, n, x, y)
        assert cache.coproduct(x, y).apex == oracles.join(leq, n, x, y)
    dist, witness = oracles.lattice_distributive(leq, n)
    rep = is_distributive(C, "all", cache)
    assert rep.holds == dist
    assert rep.witness == witness


@pytest.mark.parametrize("name", sorted(POSETS))
def test_canonical_maps_are_natural(name):
    C = POSETS[name]()
    cache = build_limit_cache(C)
    eta = delta_transformation(C, cache)
    assert validate_natural_transformation(eta).ok


def test_alpha_natural_on_terminal_and_matrices():
    T = gen_terminal()
    ct = build_limit_cache(T)
    assert validate_natural_transformation(alpha_transformation(T, ct, zero_structure(T, ct))).ok
    bm = gen_bool_matrix(1)
    cb = build_limit_cache(bm)
    # bool_matrix(1) lacks 1+1, so only the existing α components are compared to block identities
    z = zero_structure(bm, cb)
    for Y, Z in [(0, 0), (0, 1), (1, 0)]:
        a = canonical_alpha(bm, cb, z, Y, Z)
        assert a == bm.identities[bm.src[a]]


def test_witnesses_unique_up_to_iso():
    bm = gen_bool_matrix(2)
    for X, Y in [(0, 1), (1, 1), (1, 0), (0, 2)]:
        w = find_binary_product(bm, X, Y)
        # any other product cone maps to the chosen one by an isomorphism
        for P in bm.objects:
            for p, q in itertools.product(bm.hom(P, X), bm.hom(P, Y)):
                counts_match = all(
                    len(bm.hom(S, P)) == len(bm.hom(S, X)) * len(bm.hom(S, Y)) for S in bm.objects
                )
                if counts_match and _mediating_table(bm, P, p, q) is not None:
                    assert is_invertible(bm, pair_into_product(w, p, q)) is not None


covers_strategy = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1]),
            max_size=10,
        ),
    )
)


@settings(max_examples=60, deadline=None)
@given(covers_strategy)
def test_random_posets_products_are_meets(spec):
    n, covers = spec
    C = gen_poset_from_covers(n, covers)
    leq = oracles.order_from_covers(n, covers)
    assert oracles.order_of(C) == leq
    cache = build_limit_cache(C)
    for x, y in itertools.product(range(n), repeat=2):
        w = cache.products[x, y]
        m = oracles.meet(leq, n, x, y)
        assert (w.apex if w else None) == m
        s = cache.coproducts[x, y]
        assert (s.apex if s else None) == oracles.join(leq, n, x, y)
