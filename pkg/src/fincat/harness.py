"""Executable consistency checks of the non-canonical isomorphism theorems.

Each verifier evaluates a theorem's hypotheses and conclusion on one finite
category and returns a TheoremReport.  A hypothesis that cannot be decided
(missing limits, exhausted search budget) never counts as satisfied, so the
verdict is then not-applicable rather than a claim either way.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any, Optional, Union

from .core import (
    FinCatError,
    FinCategory,
    FunctorData,
    NatTransformData,
    identity_functor,
    is_fully_faithful,
    is_invertible,
    is_trivial,
    slice_category,
    validate_category,
)
from .corpus import CorpusSpec, default_corpus
from .limits import (
    LimitCache,
    apexes_isomorphic,
    build_limit_cache,
    copair_from_coproduct,
    delta_functors,
    is_distributive,
    is_semi_additive,
    is_subterminal,
    plus_times_functors,
    zero_structure,
)
from .monoidal import (
    HypothesisViolation,
    MonoidalNatData,
    Strength,
    check_coproduct_preservation,
    check_strength_theorem,
    classify_monoidal_functor,
    cocartesian_monoidal,
    comparison_setting,
    find_monoidal_isos,
    identity_monoidal_functor,
    product_functor_on,
    product_lax_functor,
    product_monoidal,
    strength_setting,
)
from .reports import Check, TheoremReport, Verdict
from .search import search_natural_transformations

log = logging.getLogger(__name__)

THEOREMS = ("lemma1", "prop2", "prop3", "distributive", "additive", "monoidal", "caccamo-winskel")


@dataclass
class PsiOutcome:
    """Result of looking for a natural iso: found, proved absent, or undecided."""

    psi: Optional[NatTransformData]
    truncated: bool
    nodes: int

    @property
    def decided(self) -> bool:
        return self.psi is not None or not self.truncated

    def check(self, name: str) -> Check:
        if self.psi is not None:
            return Check(name, True, f"found after {self.nodes} nodes")
        if self.truncated:
            return Check(name, None, f"search truncated after {self.nodes} nodes")
        return Check(name, False, "search exhausted: no natural isomorphism")


def _find_iso(F: FunctorData, G: FunctorData, limit: Optional[int]) -> PsiOutcome:
    res = search_natural_transformations(F, G, iso_only=True, limit=limit, max_results=1)
    return PsiOutcome(res.transformations[0] if res.transformations else None, res.truncated, res.nodes)


class Context:
    """One category with its limit cache and lazily computed shared data."""

    def __init__(self, C: FinCategory, cache: Optional[LimitCache] = None, limit: Optional[int] = None):
        self.category = C
        self.cache = cache or build_limit_cache(C)
        self.limit = limit
        self._memo: dict[str, Any] = {}

    def _get(self, key: str, make: Callable[[], Any]):
        if key not in self._memo:
            self._memo[key] = make()
        return self._memo[key]

    def delta_psi(self) -> PsiOutcome:
        return self._get("delta", lambda: _find_iso(*delta_functors(self.category, self.cache), self.limit))

    def plus_times_psi(self) -> PsiOutcome:
        return self._get("plus-times", lambda: _find_iso(*plus_times_functors(self.category, self.cache), self.limit))

    def distributive(self) -> bool:
        return self._get("distributive", lambda: is_distributive(self.category, "all", self.cache).holds)

    def cocartesian(self):
        return self._get("cocartesian", lambda: cocartesian_monoidal(self.category, self.cache))

    def cocartesian_square(self):
        return self._get("cocartesian-square", lambda: product_monoidal(self.cocartesian(), self.cocartesian()))


def _context(C: Union[FinCategory, Context], limit: Optional[int]) -> Context:
    return C if isinstance(C, Context) else Context(C, limit=limit)


def _needs_full_limits(ctx: Context, report: TheoremReport) -> bool:
    """Record missing (co)limits as coverage notes; True when something is missing."""
    missing = ctx.cache.missing()
    if missing:
        shown = ", ".join(missing[:6])
        more = f" (+{len(missing) - 6} more)" if len(missing) > 6 else ""
        report.coverage.append(f"missing {shown}{more}")
    return bool(missing)


def _psi_hypothesis(report: TheoremReport, outcome: PsiOutcome, name: str) -> None:
    report.hypotheses.append(outcome.check(name))
    if outcome.truncated and outcome.psi is None:
        report.coverage.append(f"natural-iso search truncated after {outcome.nodes} nodes")


def _x_times_zero(ctx: Context) -> Check:
    C, cache = ctx.category, ctx.cache
    bad = [x for x in C.objects if apexes_isomorphic(C, cache.product(x, cache.initial).apex, cache.initial) is None]
    return Check("X×0 ≅ 0 for all X", not bad, f"fails at X={C.object_label(bad[0])}" if bad else "")


def verify_lemma_pres_plus(C, limit: Optional[int] = None) -> TheoremReport:
    """Natural ψ plus X×0 ≅ 0 gives distributivity."""
    ctx = _context(C, limit)
    report = TheoremReport("lemma1")
    if _needs_full_limits(ctx, report):
        return report.decide()
    _psi_hypothesis(report, ctx.delta_psi(), "natural iso ψ: X×Y+X×Z ≅ X×(Y+Z)")
    report.hypotheses.append(_x_times_zero(ctx))
    report.conclusion = ctx.distributive()
    return report.decide()


def verify_zero_subterminal(C, limit: Optional[int] = None) -> TheoremReport:
    """Natural ψ forces 0×0 to be initial, hence 0 subterminal."""
    ctx = _context(C, limit)
    report = TheoremReport("prop2")
    if _needs_full_limits(ctx, report):
        return report.decide()
    _psi_hypothesis(report, ctx.delta_psi(), "natural iso ψ: X×Y+X×Z ≅ X×(Y+Z)")
    Cat, cache = ctx.category, ctx.cache
    zero = cache.initial
    zz = cache.product(zero, zero).apex
    zz_initial = all(len(Cat.hom(zz, y)) == 1 for y in Cat.objects)
    report.steps.append(Check("0×0 initial", zz_initial, Cat.object_label(zz)))
    report.conclusion = is_subterminal(Cat, zero)
    return report.decide()


def verify_pointed_trivial(C, limit: Optional[int] = None) -> TheoremReport:
    """A pointed category with natural ψ is trivial."""
    ctx = _context(C, limit)
    report = TheoremReport("prop3")
    Cat, cache = ctx.category, ctx.cache
    zs = zero_structure(Cat, cache)
    report.hypotheses.append(Check("pointed", zs is not None, Cat.object_label(zs.zero) if zs else "no zero object"))
    if _needs_full_limits(ctx, report):
        return report.decide()
    outcome = ctx.delta_psi()
    _psi_hypothesis(report, outcome, "natural iso ψ: X×Y+X×Z ≅ X×(Y+Z)")
    if outcome.psi is not None and zs is not None:
        # θ_X = ψ_{X,1,1} : X+X ≅ X forces the codiagonal to be invertible
        bad = []
        for x in Cat.objects:
            w = cache.coproduct(x, x)
            nabla = copair_from_coproduct(w, Cat.identities[x], Cat.identities[x])
            if is_invertible(Cat, nabla) is None:
                bad.append(x)
        report.steps.append(Check("codiagonal X+X -> X invertible", not bad, f"fails at {bad[0]}" if bad else ""))
    report.conclusion = is_trivial(Cat)
    return report.decide()


def verify_distributivity_theorem(C, limit: Optional[int] = None) -> TheoremReport:
    """Natural ψ alone gives distributivity; the contrapositive is recorded too."""
    ctx = _context(C, limit)
    report = TheoremReport("distributive")
    if _needs_full_limits(ctx, report):
        return report.decide()
    outcome = ctx.delta_psi()
    _psi_hypothesis(report, outcome, "natural iso ψ: X×Y+X×Z ≅ X×(Y+Z)")
    dist = ctx.distributive()
    report.conclusion = dist
    if not dist and outcome.decided:
        report.contrapositive = outcome.psi is None
    if outcome.psi is not None:
        report.steps.extend(_slice_steps(ctx))
    return report.decide()


def _slice_steps(ctx: Context) -> list[Check]:
    """The reduction to the slice over 0 used in the proof."""
    C, cache = ctx.category, ctx.cache
    zero = cache.initial
    steps = [Check("0 subterminal", is_subterminal(C, zero))]
    S, proj = slice_category(C, zero)
    steps.append(Check("projection D/0 -> D fully faithful", is_fully_faithful(proj)))
    steps.append(Check("D/0 trivial", is_trivial(S), f"{S.object_count} objects"))
    steps.append(_x_times_zero(ctx))
    return steps


def verify_additivity_theorem(C, limit: Optional[int] = None) -> TheoremReport:
    """Natural ψ : Y+Z ≅ Y×Z gives pointedness and semi-additivity."""
    ctx = _context(C, limit)
    report = TheoremReport("additive")
    if _needs_full_limits(ctx, report):
        return report.decide()
    outcome = ctx.plus_times_psi()
    _psi_hypothesis(report, outcome, "natural iso ψ: Y+Z ≅ Y×Z")
    Cat, cache = ctx.category, ctx.cache
    pointed = zero_structure(Cat, cache) is not None
    report.steps.append(Check("pointed", pointed))
    sa = is_semi_additive(Cat, "all", cache)
    report.conclusion = sa.holds
    if not sa.holds and outcome.decided:
        report.contrapositive = outcome.psi is None
    if sa.reason:
        report.notes.append(sa.reason)
    return report.decide()


def _instance_from_violation(theorem: str, label: str, exc: HypothesisViolation) -> TheoremReport:
    report = TheoremReport(f"{theorem}[{label}]")
    report.hypotheses.append(Check("hypotheses", False, str(exc)))
    return report.decide()


def verify_strength_theorem(C, limit: Optional[int] = None) -> TheoremReport:
    """Normal monoidal F with a monoidal iso ψ is strong, on (C, +, 0).

    Instances: the identity functor with identity ψ, and X × - for every X
    (whose structure maps are δ).  The X × - instances are compared with
    is_distributive, which they must agree with.
    """
    ctx = _context(C, limit)
    if _needs_full_limits(ctx, coverage := TheoremReport("monoidal")):
        return coverage.decide()
    Cat, cache = ctx.category, ctx.cache
    M, AA = ctx.cocartesian(), ctx.cocartesian_square()
    instances = []

    Id = identity_monoidal_functor(M)
    st = strength_setting(Id, AA)
    ident = NatTransformData(st.tensor_after.functor, st.functor_after.functor,
                             tuple(Cat.identities[x] for x in st.tensor_after.functor.object_map))
    try:
        r = check_strength_theorem(Id, MonoidalNatData(ident, st.tensor_after, st.functor_after), setting=st)
        r.theorem = "monoidal[identity]"
        instances.append(r)
    except HypothesisViolation as exc:
        instances.append(_instance_from_violation("monoidal", "identity", exc))

    strong_all = True
    decided_all = True
    for x in Cat.objects:
        label = f"{Cat.object_label(x)}×-"
        Fh = product_lax_functor(Cat, cache, x, M)
        if classify_monoidal_functor(Fh) is Strength.LAX:
            instances.append(_instance_from_violation("monoidal", label, HypothesisViolation("F is not normal")))
            strong_all = False
            continue
        st = strength_setting(Fh, AA)
        found, stats = find_monoidal_isos(st.tensor_after, st.functor_after, limit=limit)
        try:
            r = check_strength_theorem(Fh, found[0] if found else None, setting=st)
        except HypothesisViolation as exc:
            r = _instance_from_violation("monoidal", label, exc)
        r.theorem = f"monoidal[{label}]"
        if not found and stats.truncated:
            r.coverage.append(f"monoidal-iso search truncated after {stats.nodes} nodes")
            r.decide()
            decided_all = False
        if r.verdict is not Verdict.CONSISTENT:
            strong_all = False
        instances.append(r)

    report = TheoremReport.combine("monoidal", instances)
    if decided_all:
        dist = ctx.distributive()
        agree = strong_all == dist
        report.notes.append(f"X×- instances {'agree' if agree else 'DISAGREE'} with is_distributive={dist}")
        if not agree:
            report.verdict = Verdict.INCONSISTENT
    return report


def verify_coproduct_preservation(C, limit: Optional[int] = None) -> TheoremReport:
    """A functor preserving 0 with some natural FX+FY ≅ F(X+Y) preserves coproducts.

    Instances: the identity, and X × - for every X.
    """
    ctx = _context(C, limit)
    if _needs_full_limits(ctx, coverage := TheoremReport("caccamo-winskel")):
        return coverage.decide()
    Cat, cache = ctx.category, ctx.cache
    structures = (ctx.cocartesian(), ctx.cocartesian(), ctx.cocartesian_square())
    instances = []
    candidates = [("identity", identity_functor(Cat))]
    candidates += [(f"{Cat.object_label(x)}×-", product_functor_on(Cat, cache, x)) for x in Cat.objects]
    for label, F in candidates:
        try:
            setting = comparison_setting(F, cache, cache)
            if label == "identity":
                psi: Optional[NatTransformData] = setting.comparison
                truncated = False
            else:
                f0 = F.object_map[cache.initial]
                if not all(len(Cat.hom(f0, y)) == 1 for y in Cat.objects):
                    raise HypothesisViolation("F does not preserve the initial object")
                outcome = _find_iso(setting.plus_after, setting.functor_after, limit)
                psi, truncated = outcome.psi, outcome.truncated
            r = check_coproduct_preservation(F, psi, cache, cache, setting, structures)
            if psi is None and truncated:
                r.coverage.append("natural-iso search truncated")
                r.decide()
        except HypothesisViolation as exc:
            r = _instance_from_violation("caccamo-winskel", label, exc)
        r.theorem = f"caccamo-winskel[{label}]"
        instances.append(r)
    return TheoremReport.combine("caccamo-winskel", instances)


VERIFIERS: dict[str, Callable[..., TheoremReport]] = {
    "lemma1": verify_lemma_pres_plus,
    "prop2": verify_zero_subterminal,
    "prop3": verify_pointed_trivial,
    "distributive": verify_distributivity_theorem,
    "additive": verify_additivity_theorem,
    "monoidal": verify_strength_theorem,
    "caccamo-winskel": verify_coproduct_preservation,
}


def verify(C, theorem: str, limit: Optional[int] = None) -> TheoremReport:
    try:
        fn = VERIFIERS[theorem]
    except KeyError:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}") from None
    return fn(C, limit)


# -- suite ---------------------------------------------------------------------


@dataclass
class MemberReport:
    name: str
    valid: bool
    validation: list[str] = field(default_factory=list)
    reports: list[TheoremReport] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def inconsistent(self) -> list[str]:
        return [r.theorem for r in self.reports if r.verdict is Verdict.INCONSISTENT]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "valid": self.valid,
            "validation": list(self.validation),
            "reports": [r.to_dict() for r in self.reports],
        }


@dataclass
class SuiteReport:
    members: list[MemberReport] = field(default_factory=list)

    @property
    def inconsistent(self) -> int:
        return sum(len(m.inconsistent) for m in self.members)

    @property
    def invalid(self) -> int:
        return sum(not m.valid for m in self.members)

    @property
    def ok(self) -> bool:
        return self.inconsistent == 0 and self.invalid == 0

    def verdict_counts(self) -> dict[str, int]:
        counts = {v.value: 0 for v in Verdict}
        for m in self.members:
            for r in m.reports:
                counts[r.verdict.value] += 1
        return counts

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "inconsistent": self.inconsistent,
            "invalid": self.invalid,
            "verdicts": self.verdict_counts(),
            "members": [m.to_dict() for m in self.members],
        }

    def render(self) -> str:
        lines = []
        for m in self.members:
            if not m.valid:
                lines.append(f"{m.name}: INVALID")
                lines += [f"  {v}" for v in m.validation]
                continue
            cells = " ".join(f"{r.theorem}={r.verdict.value}" for r in m.reports)
            lines.append(f"{m.name}: {cells}")
        counts = self.verdict_counts()
        lines.append(
            f"{len(self.members)} members, {self.invalid} invalid; "
            + ", ".join(f"{k} {v}" for k, v in counts.items())
        )
        return "\n".join(lines)


CorpusEntry = Union[CorpusSpec, FinCategory, tuple[str, FinCategory]]


def _entry(entry: CorpusEntry) -> tuple[str, Callable[[], FinCategory]]:
    if isinstance(entry, CorpusSpec):
        return entry.name, entry.build
    if isinstance(entry, FinCategory):
        return repr(entry), lambda: entry
    name, C = entry
    return name, lambda: C


def run_member(entry: CorpusEntry, limit: Optional[int] = None, theorems: Sequence[str] = THEOREMS) -> MemberReport:
    name, build = _entry(entry)
    start = time.perf_counter()
    try:
        C = build()
    except (FinCatError, OSError, ValueError) as exc:
        return MemberReport(name, False, [f"build failed: {exc}"])
    val = validate_category(C, max_failures=10)
    if not val.ok:
        return MemberReport(name, False, [f"{law} at {w}" for law, w in val.failures])
    ctx = Context(C, limit=limit)
    member = MemberReport(name, True)
    for t in theorems:
        member.reports.append(VERIFIERS[t](ctx))
    member.seconds = time.perf_counter() - start
    log.info("%s done in %.2fs", name, member.seconds)
    return member


def run_full_suite(
    corpus: Optional[Iterable[CorpusEntry]] = None,
    limit: Optional[int] = None,
    theorems: Sequence[str] = THEOREMS,
) -> SuiteReport:
    """Run every verifier on every corpus member, in corpus order.

    Members are independent; a member that fails validation is reported and
    skipped.  ``corpus`` defaults to the standard corpus.
    """
    entries = default_corpus() if corpus is None else list(corpus)
    return SuiteReport([run_member(e, limit, theorems) for e in entries])
