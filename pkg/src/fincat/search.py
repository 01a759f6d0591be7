"""Exhaustive search for natural transformations between finite functors.

Backtracking over the source objects, ordered by ascending number of
candidate components (ties broken by object index).  After each assignment
every naturality square whose endpoints are both assigned is checked, so a
partial assignment is abandoned as soon as one square fails.
"""

from __future__ import annotations

import logging
import os
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Optional

from .core import FinCatError, FunctorData, NatTransformData, StructuralError, is_invertible

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**6
BUDGET_ENV = "FINCAT_SEARCH_BUDGET"


class SearchTruncated(FinCatError):
    """The node budget ran out before the search could decide the question."""


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            log.warning("ignoring non-integer %s=%r", BUDGET_ENV, raw)
    return DEFAULT_BUDGET


@dataclass
class SearchResult:
    transformations: list[NatTransformData] = field(default_factory=list)
    truncated: bool = False
    nodes: int = 0

    def __len__(self):
        return len(self.transformations)

    def __iter__(self):
        return iter(self.transformations)

    def __getitem__(self, k):
        return self.transformations[k]


class _Search:
    def __init__(self, F: FunctorData, G: FunctorData, iso_only: bool, budget: Optional[int]):
        if not (F.source == G.source and F.target == G.target):
            raise StructuralError("functors must share source and target")
        self.F, self.G = F, G
        self.budget = default_budget() if budget is None else budget
        self.nodes = 0
        self.truncated = False
        C, D = F.source, F.target
        cands = []
        for x in C.objects:
            homs = D.hom(F.object_map[x], G.object_map[x])
            if iso_only:
                homs = tuple(m for m in homs if is_invertible(D, m) is not None)
            cands.append(homs)
        self.cands = cands
        self.order = sorted(C.objects, key=lambda x: (len(cands[x]), x))
        pos = {x: k for k, x in enumerate(self.order)}
        # squares to check once position k is assigned: (x, y, F f, G f)
        checks: list[list[tuple[int, int, int, int]]] = [[] for _ in self.order]
        for f in C.morphisms:
            x, y = C.src[f], C.dst[f]
            checks[max(pos[x], pos[y])].append((x, y, F.morphism_map[f], G.morphism_map[f]))
        self.checks = checks

    def run(self) -> Iterator[tuple[int, ...]]:
        D = self.F.target
        comp = D.compose
        cands, order, checks = self.cands, self.order, self.checks
        n = len(order)
        if any(not c for c in cands):
            return
        assign: list[int] = [-1] * n
        nxt = [0] * (n + 1)
        k = 0
        while k >= 0:
            if k == n:
                yield tuple(assign)
                k -= 1
                continue
            x = order[k]
            cl = cands[x]
            ok = False
            while nxt[k] < len(cl):
                m = cl[nxt[k]]
                nxt[k] += 1
                self.nodes += 1
                if self.nodes > self.budget:
                    self.truncated = True
                    return
                assign[x] = m
                if all(comp(Gf, assign[a]) == comp(assign[b], Ff) for a, b, Ff, Gf in checks[k]):
                    ok = True
                    break
            if ok:
                k += 1
                nxt[k] = 0
            else:
                assign[x] = -1
                k -= 1


def iter_natural_transformations(
    F: FunctorData,
    G: FunctorData,
    iso_only: bool = False,
    limit: Optional[int] = None,
    stats: Optional[SearchResult] = None,
) -> Iterator[NatTransformData]:
    """Lazily yield natural transformations F => G in search order.

    ``limit`` is the node budget.  When ``stats`` is given its ``nodes`` and
    ``truncated`` fields are kept up to date.
    """
    search = _Search(F, G, iso_only, limit)
    for comps in search.run():
        if stats is not None:
            stats.nodes = search.nodes
        yield NatTransformData(F, G, comps)
    if stats is not None:
        stats.nodes = search.nodes
        stats.truncated = search.truncated


def search_natural_transformations(
    F: FunctorData,
    G: FunctorData,
    iso_only: bool = False,
    limit: Optional[int] = None,
    max_results: Optional[int] = None,
) -> SearchResult:
    """All natural transformations F => G, or those made of isomorphisms.

    The search stops when ``limit`` nodes have been visited (default 10**6,
    overridable through ``FINCAT_SEARCH_BUDGET``) and then sets ``truncated``.
    An empty truncated result says nothing about existence.
    """
    result = SearchResult()
    for eta in iter_natural_transformations(F, G, iso_only, limit, result):
        result.transformations.append(eta)
        if max_results is not None and len(result.transformations) >= max_results:
            break
    return result


def exists_natural_iso(F: FunctorData, G: FunctorData, limit: Optional[int] = None) -> Optional[NatTransformData]:
    """First natural isomorphism F => G in search order, or None.

    Raises SearchTruncated if the budget ran out before one was found.
    """
    result = search_natural_transformations(F, G, iso_only=True, limit=limit, max_results=1)
    if result.transformations:
        return result.transformations[0]
    if result.truncated:
        raise SearchTruncated(f"natural-iso search exhausted its budget after {result.nodes} nodes")
    return None
