import pytest

from fincat import FinCategory, Verdict
from fincat.corpus import (
    CorpusSpec,
    default_corpus,
    gen_bool_matrix,
    gen_boolean_algebra,
    gen_chain,
    gen_cyclic_group,
    gen_divisor_lattice,
    gen_m3,
    gen_n5,
    gen_poset_from_covers,
    gen_terminal,
)
from fincat.harness import (
    THEOREMS,
    Context,
    run_full_suite,
    run_member,
    verify,
    verify_additivity_theorem,
    verify_coproduct_preservation,
    verify_distributivity_theorem,
    verify_lemma_pres_plus,
    verify_pointed_trivial,
    verify_strength_theorem,
    verify_zero_subterminal,
)

import oracles

CONSISTENT, NA, INCONSISTENT = Verdict.CONSISTENT, Verdict.NOT_APPLICABLE, Verdict.INCONSISTENT


def corrupted_category():
    """One object with a second endomorphism e, where id∘e is wrongly recorded as id."""
    table = {(0, 0): 0, (0, 1): 0, (1, 0): 1, (1, 1): 1}
    return FinCategory(1, [0, 0], [0, 0], [0], table, check=False)


# -- verifier examples ----------------------------------------------------------


@pytest.mark.parametrize("make,verdict", [(lambda: gen_boolean_algebra(2), CONSISTENT), (gen_m3, NA),
                                          (gen_terminal, CONSISTENT)])
def test_lemma1_examples(make, verdict):
    rep = verify_lemma_pres_plus(make())
    assert rep.verdict is verdict


def test_lemma1_m3_psi_absent():
    rep = verify_lemma_pres_plus(gen_m3())
    assert rep.hypotheses[0].satisfied is False
    assert rep.conclusion is False


@pytest.mark.parametrize("make,verdict", [(lambda: gen_chain(3), CONSISTENT), (gen_m3, NA),
                                          (gen_terminal, CONSISTENT)])
def test_prop2_examples(make, verdict):
    rep = verify_zero_subterminal(make())
    assert rep.verdict is verdict
    if verdict is CONSISTENT:
        assert all(s.satisfied for s in rep.steps)


@pytest.mark.parametrize("make,verdict", [(gen_terminal, CONSISTENT), (lambda: gen_chain(1), CONSISTENT),
                                          (lambda: gen_bool_matrix(2), NA)])
def test_prop3_examples(make, verdict):
    assert verify_pointed_trivial(make()).verdict is verdict


def test_prop3_bool_matrix_is_coverage_limited():
    rep = verify_pointed_trivial(gen_bool_matrix(2))
    assert rep.hypothesis("pointed").satisfied
    assert rep.coverage and "missing" in rep.coverage[0]


def test_prop3_non_pointed_lattice():
    rep = verify_pointed_trivial(gen_chain(3))
    assert rep.verdict is NA
    assert rep.hypothesis("pointed").satisfied is False


def test_distributivity_theorem_boolean_square():
    rep = verify_distributivity_theorem(gen_boolean_algebra(2))
    assert rep.verdict is CONSISTENT and rep.conclusion
    assert all(s.satisfied for s in rep.steps)


@pytest.mark.parametrize("make", [gen_m3, gen_n5])
def test_distributivity_theorem_contrapositive(make):
    rep = verify_distributivity_theorem(make())
    assert rep.verdict is NA
    assert rep.conclusion is False and rep.contrapositive is True
    assert "contrapositive confirmed" in rep.render()


@pytest.mark.parametrize("make,verdict,contra", [(gen_terminal, CONSISTENT, None), (lambda: gen_chain(2), NA, True),
                                                 (gen_m3, NA, True)])
def test_additivity_examples(make, verdict, contra):
    rep = verify_additivity_theorem(make())
    assert rep.verdict is verdict
    assert rep.contrapositive is contra


def test_additivity_bool_matrix_not_covered():
    rep = verify_additivity_theorem(gen_bool_matrix(2))
    assert rep.verdict is NA and rep.coverage


def test_truncated_budget_is_not_applicable():
    rep = verify_distributivity_theorem(gen_boolean_algebra(2), limit=1)
    assert rep.verdict is NA
    assert rep.hypotheses[0].satisfied is None
    assert any("truncated" in c for c in rep.coverage)
    assert rep.contrapositive is None


def test_truncation_never_claims_absence():
    for make in (gen_m3, gen_n5, lambda: gen_chain(3)):
        rep = verify_distributivity_theorem(make(), limit=1)
        truncated = any("truncated" in c for c in rep.coverage)
        if truncated:
            assert rep.contrapositive is None and rep.hypotheses[0].satisfied is None
        else:
            assert rep.hypotheses[0].satisfied is not None


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("FINCAT_SEARCH_BUDGET", "1")
    assert verify_distributivity_theorem(gen_boolean_algebra(2)).verdict is NA


def test_unknown_theorem():
    with pytest.raises(ValueError):
        verify(gen_terminal(), "nope")


# -- monoidal verifiers ----------------------------------------------------------


LATTICES = [lambda: gen_chain(2), lambda: gen_chain(3), lambda: gen_boolean_algebra(2), gen_m3, gen_n5,
            lambda: gen_divisor_lattice(12)]


@pytest.mark.parametrize("make", LATTICES)
def test_strength_verifier_agrees_with_distributivity(make):
    C = make()
    rep = verify_strength_theorem(C)
    dist, _ = oracles.lattice_distributive(oracles.order_of(C), C.object_count)
    assert rep.verdict is not INCONSISTENT
    assert any("agree with" in n for n in rep.notes)
    strong_instances = [r for r in rep.instances if r.theorem != "monoidal[identity]"]
    assert all(r.verdict is CONSISTENT for r in strong_instances) == dist


@pytest.mark.parametrize("make", LATTICES)
def test_coproduct_preservation_verifier(make):
    C = make()
    rep = verify_coproduct_preservation(C)
    assert rep.verdict is CONSISTENT  # the identity instance always applies
    dist, _ = oracles.lattice_distributive(oracles.order_of(C), C.object_count)
    rest = [r for r in rep.instances if r.theorem != "caccamo-winskel[identity]"]
    assert all(r.verdict is CONSISTENT for r in rest) == dist


def test_monoidal_verifiers_on_one_object_category():
    """A nontrivial group lacks an initial object, so nothing applies."""
    for fn in (verify_strength_theorem, verify_coproduct_preservation):
        rep = fn(gen_cyclic_group(3))
        assert rep.verdict is NA and rep.coverage


def test_context_shares_search():
    ctx = Context(gen_boolean_algebra(2))
    verify_lemma_pres_plus(ctx)
    first = ctx.delta_psi()
    verify_distributivity_theorem(ctx)
    assert ctx.delta_psi() is first


# -- suite ------------------------------------------------------------------------


def test_default_suite_has_no_inconsistency():
    report = run_full_suite()
    assert report.inconsistent == 0 and report.invalid == 0 and report.ok
    assert len(report.members) == len(default_corpus())
    assert all(len(m.reports) == len(THEOREMS) for m in report.members)
    counts = report.verdict_counts()
    assert counts["consistent"] > 0 and counts["inconsistent"] == 0


def test_empty_corpus():
    report = run_full_suite([])
    assert report.members == [] and report.ok
    assert report.verdict_counts() == {"consistent": 0, "not-applicable": 0, "inconsistent": 0}


def test_corrupted_member_is_reported_without_running_theorems():
    report = run_full_suite([("bad", corrupted_category()), CorpusSpec("terminal")])
    bad, good = report.members
    assert not bad.valid and bad.reports == [] and bad.validation
    assert good.valid and len(good.reports) == len(THEOREMS)
    assert report.invalid == 1 and not report.ok
    assert "INVALID" in report.render()


def test_bad_spec_is_reported():
    member = run_member(CorpusSpec("chain", {"n": 99}))
    assert not member.valid and "build failed" in member.validation[0]


def test_suite_is_deterministic():
    corpus = [CorpusSpec("m3"), CorpusSpec("chain", {"n": 2})]
    assert run_full_suite(corpus).to_dict() == run_full_suite(corpus).to_dict()


def test_random_posets_never_inconsistent():
    covers_list = [(4, [(0, 1), (0, 2), (1, 3), (2, 3)]), (3, [(0, 1)]), (4, [(0, 1), (1, 2), (0, 3)])]
    entries = [(f"poset{k}", gen_poset_from_covers(n, c)) for k, (n, c) in enumerate(covers_list)]
    report = run_full_suite(entries)
    assert report.inconsistent == 0
