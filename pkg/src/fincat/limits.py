"""Terminal/initial objects, binary (co)products, zero objects and the
canonical comparison maps built from them.

Every witness is found by scanning apexes and cones and checking the
universal property against every test object; nothing is assumed.
Coproducts are products in the opposite category, which shares morphism
indices with the original.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Optional

from .core import (
    FinCatError,
    FinCategory,
    FunctorData,
    NatTransformData,
    is_invertible,
    opposite,
    product_category,
)
from .reports import DecisionReport


class LimitAbsent(FinCatError):
    """A required terminal/initial object or binary (co)product does not exist."""


class NoZeroStructure(FinCatError):
    pass


@dataclass(frozen=True)
class ProductWitness:
    factors: tuple[int, int]
    apex: int
    projections: tuple[int, int]
    pairing: Mapping[tuple[int, int], int]


@dataclass(frozen=True)
class CoproductWitness:
    summands: tuple[int, int]
    apex: int
    injections: tuple[int, int]
    copairing: Mapping[tuple[int, int], int]


def _is_universal_object(C: FinCategory, T: int, into: bool) -> bool:
    if into:
        return all(len(C.hom(X, T)) == 1 for X in C.objects)
    return all(len(C.hom(T, X)) == 1 for X in C.objects)


def find_terminal(C: FinCategory) -> Optional[int]:
    return next((T for T in C.objects if _is_universal_object(C, T, True)), None)


def find_initial(C: FinCategory) -> Optional[int]:
    return next((T for T in C.objects if _is_universal_object(C, T, False)), None)


def _mediating_table(C: FinCategory, P: int, p: int, q: int) -> Optional[dict[tuple[int, int], int]]:
    # hom(A, P) -> hom(A, X) x hom(A, Y) must be a bijection; sizes are checked
    # by the caller, so injectivity is enough.
    table: dict[tuple[int, int], int] = {}
    for A in C.objects:
        for m in C.hom(A, P):
            key = (C.compose(p, m), C.compose(q, m))
            if key in table:
                return None
            table[key] = m
    return table


def find_binary_product(C: FinCategory, X: int, Y: int) -> Optional[ProductWitness]:
    """Least apex index, then lexicographically least projection pair."""
    for P in C.objects:
        if any(len(C.hom(A, P)) != len(C.hom(A, X)) * len(C.hom(A, Y)) for A in C.objects):
            continue
        for p in C.hom(P, X):
            for q in C.hom(P, Y):
                table = _mediating_table(C, P, p, q)
                if table is not None:
                    return ProductWitness((X, Y), P, (p, q), table)
    return None


def find_binary_coproduct(C: FinCategory, X: int, Y: int) -> Optional[CoproductWitness]:
    w = find_binary_product(opposite(C), X, Y)
    if w is None:
        return None
    return CoproductWitness((X, Y), w.apex, w.projections, w.pairing)


def pair_into_product(w: ProductWitness, f: int, g: int) -> int:
    """The unique ``<f, g>`` with ``pr1∘<f,g> = f`` and ``pr2∘<f,g> = g``."""
    try:
        return w.pairing[f, g]
    except KeyError:
        raise LimitAbsent(f"no mediating morphism into product {w.factors} for ({f}, {g})") from None


def copair_from_coproduct(w: CoproductWitness, f: int, g: int) -> int:
    """The unique ``[f, g]`` with ``[f,g]∘i = f`` and ``[f,g]∘j = g``."""
    try:
        return w.copairing[f, g]
    except KeyError:
        raise LimitAbsent(f"no mediating morphism out of coproduct {w.summands} for ({f}, {g})") from None


@dataclass
class LimitCache:
    category: FinCategory
    terminal: Optional[int]
    initial: Optional[int]
    products: dict[tuple[int, int], Optional[ProductWitness]] = field(default_factory=dict)
    coproducts: dict[tuple[int, int], Optional[CoproductWitness]] = field(default_factory=dict)

    def product(self, X: int, Y: int) -> ProductWitness:
        w = self.products.get((X, Y))
        if w is None:
            raise LimitAbsent(f"product of objects {X} and {Y} does not exist")
        return w

    def coproduct(self, X: int, Y: int) -> CoproductWitness:
        w = self.coproducts.get((X, Y))
        if w is None:
            raise LimitAbsent(f"coproduct of objects {X} and {Y} does not exist")
        return w

    def has_product(self, X: int, Y: int) -> bool:
        return self.products.get((X, Y)) is not None

    def has_coproduct(self, X: int, Y: int) -> bool:
        return self.coproducts.get((X, Y)) is not None

    def require_terminal(self) -> int:
        if self.terminal is None:
            raise LimitAbsent("terminal object does not exist")
        return self.terminal

    def require_initial(self) -> int:
        if self.initial is None:
            raise LimitAbsent("initial object does not exist")
        return self.initial

    def missing(self) -> list[str]:
        out = []
        if self.terminal is None:
            out.append("terminal object")
        if self.initial is None:
            out.append("initial object")
        out += [f"product {k}" for k, w in self.products.items() if w is None]
        out += [f"coproduct {k}" for k, w in self.coproducts.items() if w is None]
        return out

    @property
    def complete(self) -> bool:
        return not self.missing()

    def terminal_map(self, X: int) -> int:
        (m,) = self.category.hom(X, self.require_terminal())
        return m

    def initial_map(self, X: int) -> int:
        (m,) = self.category.hom(self.require_initial(), X)
        return m


def build_limit_cache(C: FinCategory) -> LimitCache:
    cache = LimitCache(C, find_terminal(C), find_initial(C))
    for X, Y in itertools.product(C.objects, repeat=2):
        cache.products[X, Y] = find_binary_product(C, X, Y)
        cache.coproducts[X, Y] = find_binary_coproduct(C, X, Y)
    return cache


def product_morphism(cache: LimitCache, f: int, g: int) -> int:
    """``f × g : X×Y -> X'×Y'``."""
    C = cache.category
    w = cache.product(C.src[f], C.src[g])
    w2 = cache.product(C.dst[f], C.dst[g])
    p, q = w.projections
    return pair_into_product(w2, C.compose(f, p), C.compose(g, q))


def coproduct_morphism(cache: LimitCache, f: int, g: int) -> int:
    """``f + g : X+Y -> X'+Y'``."""
    C = cache.category
    w = cache.coproduct(C.src[f], C.src[g])
    w2 = cache.coproduct(C.dst[f], C.dst[g])
    i, j = w2.injections
    return copair_from_coproduct(w, C.compose(i, f), C.compose(j, g))


# -- zero objects --------------------------------------------------------------


@dataclass(frozen=True)
class ZeroStructure:
    zero: int
    zero_maps: Mapping[tuple[int, int], int]

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return self.zero_maps[pair]


def zero_structure(C: FinCategory, cache: Optional[LimitCache] = None) -> Optional[ZeroStructure]:
    """Zero object and zero morphisms, present iff initial ≅ terminal."""
    cache = cache or LimitCache(C, find_terminal(C), find_initial(C))
    I, T = cache.initial, cache.terminal
    if I is None or T is None:
        return None
    (u,) = C.hom(I, T)
    if is_invertible(C, u) is None:
        return None
    # I is also terminal, so hom(Y, I) is a singleton for every Y
    to_zero = [C.hom(Y, I)[0] for Y in C.objects]
    from_zero = [C.hom(I, Z)[0] for Z in C.objects]
    maps = {(Y, Z): C.compose(from_zero[Z], to_zero[Y]) for Y in C.objects for Z in C.objects}
    return ZeroStructure(I, maps)


def is_subterminal(C: FinCategory, T: int) -> bool:
    return all(len(C.hom(X, T)) <= 1 for X in C.objects)


# -- canonical comparison maps -------------------------------------------------


def canonical_delta(C: FinCategory, cache: LimitCache, X: int, Y: int, Z: int) -> int:
    """``δ : X×Y + X×Z -> X×(Y+Z)``, the copairing of ``X×i`` and ``X×j``."""
    XY = cache.product(X, Y)
    XZ = cache.product(X, Z)
    S = cache.coproduct(Y, Z)
    XS = cache.product(X, S.apex)
    L = cache.coproduct(XY.apex, XZ.apex)
    i, j = S.injections
    x_times_i = pair_into_product(XS, XY.projections[0], C.compose(i, XY.projections[1]))
    x_times_j = pair_into_product(XS, XZ.projections[0], C.compose(j, XZ.projections[1]))
    return copair_from_coproduct(L, x_times_i, x_times_j)


def canonical_alpha(C: FinCategory, cache: LimitCache, zero: Optional[ZeroStructure], Y: int, Z: int) -> int:
    """``α : Y+Z -> Y×Z``, the copairing of ``<1, 0>`` and ``<0, 1>``."""
    if zero is None:
        raise NoZeroStructure("canonical_alpha needs a zero object")
    S = cache.coproduct(Y, Z)
    P = cache.product(Y, Z)
    left = pair_into_product(P, C.identities[Y], zero[Y, Z])
    right = pair_into_product(P, zero[Z, Y], C.identities[Z])
    return copair_from_coproduct(S, left, right)


def _delta_inputs(cache: LimitCache, X: int, Y: int, Z: int) -> list[tuple[str, int, int]]:
    need = [("product", X, Y), ("product", X, Z), ("coproduct", Y, Z)]
    missing = [n for n in need if not getattr(cache, "has_" + n[0])(n[1], n[2])]
    if missing:
        return missing
    S = cache.coproduct(Y, Z).apex
    if not cache.has_product(X, S):
        missing.append(("product", X, S))
    a, b = cache.product(X, Y).apex, cache.product(X, Z).apex
    if not cache.has_coproduct(a, b):
        missing.append(("coproduct", a, b))
    return missing


def is_distributive(C: FinCategory, scope: str = "all", cache: Optional[LimitCache] = None) -> DecisionReport:
    """Decide whether every δ_{X,Y,Z} is invertible.

    ``scope="all"`` raises LimitAbsent if some needed (co)limit is missing;
    ``scope="existing"`` checks the triples it can and lists the rest.
    """
    scope = scope.lower()
    if scope not in ("all", "existing"):
        raise ValueError(f"unknown scope {scope!r}")
    cache = cache or build_limit_cache(C)
    report = DecisionReport("distributive", True, scope)
    for X, Y, Z in itertools.product(C.objects, repeat=3):
        missing = _delta_inputs(cache, X, Y, Z)
        if missing:
            if scope == "all":
                kind, a, b = missing[0]
                raise LimitAbsent(f"{kind} of objects {a} and {b} does not exist (needed for δ at {(X, Y, Z)})")
            report.skipped.append((X, Y, Z))
            continue
        report.checked += 1
        if report.holds and is_invertible(C, canonical_delta(C, cache, X, Y, Z)) is None:
            report.holds = False
            report.witness = (X, Y, Z)
    return report


def is_semi_additive(C: FinCategory, scope: str = "all", cache: Optional[LimitCache] = None) -> DecisionReport:
    """Decide whether C is pointed and every α_{Y,Z} is invertible."""
    scope = scope.lower()
    if scope not in ("all", "existing"):
        raise ValueError(f"unknown scope {scope!r}")
    cache = cache or build_limit_cache(C)
    report = DecisionReport("semi-additive", True, scope)
    zero = zero_structure(C, cache)
    if zero is None:
        report.holds = False
        report.reason = "not pointed"
        return report
    for Y, Z in itertools.product(C.objects, repeat=2):
        if not (cache.has_product(Y, Z) and cache.has_coproduct(Y, Z)):
            if scope == "all":
                kind = "product" if not cache.has_product(Y, Z) else "coproduct"
                raise LimitAbsent(f"{kind} of objects {Y} and {Z} does not exist")
            report.skipped.append((Y, Z))
            continue
        report.checked += 1
        if report.holds and is_invertible(C, canonical_alpha(C, cache, zero, Y, Z)) is None:
            report.holds = False
            report.witness = (Y, Z)
    return report


# -- the two sides of ψ as functors --------------------------------------------


def _require_total(cache: LimitCache, triples: bool) -> None:
    C = cache.category
    if triples:
        for X, Y, Z in itertools.product(C.objects, repeat=3):
            missing = _delta_inputs(cache, X, Y, Z)
            if missing:
                kind, a, b = missing[0]
                raise LimitAbsent(f"{kind} of objects {a} and {b} does not exist (needed at {(X, Y, Z)})")
    else:
        for Y, Z in itertools.product(C.objects, repeat=2):
            cache.product(Y, Z)
            cache.coproduct(Y, Z)


def delta_functors(C: FinCategory, cache: LimitCache) -> tuple[FunctorData, FunctorData]:
    """``(X,Y,Z) ↦ X×Y + X×Z`` and ``(X,Y,Z) ↦ X×(Y+Z)`` on C³."""
    _require_total(cache, triples=True)
    C3 = product_category([C, C, C])
    prod = lambda a, b: cache.product(a, b).apex  # noqa: E731
    coprod = lambda a, b: cache.coproduct(a, b).apex  # noqa: E731
    lhs_obj, rhs_obj = [], []
    for code in C3.objects:
        X, Y, Z = C3.decode_object(code)
        lhs_obj.append(coprod(prod(X, Y), prod(X, Z)))
        rhs_obj.append(prod(X, coprod(Y, Z)))
    lhs_mor, rhs_mor = [], []
    for code in C3.morphisms:
        f, g, h = C3.decode_morphism(code)
        lhs_mor.append(coproduct_morphism(cache, product_morphism(cache, f, g), product_morphism(cache, f, h)))
        rhs_mor.append(product_morphism(cache, f, coproduct_morphism(cache, g, h)))
    return FunctorData(C3, C, lhs_obj, lhs_mor), FunctorData(C3, C, rhs_obj, rhs_mor)


def delta_transformation(C: FinCategory, cache: LimitCache, functors=None) -> NatTransformData:
    lhs, rhs = functors or delta_functors(C, cache)
    C3 = lhs.source
    comps = [canonical_delta(C, cache, *C3.decode_object(code)) for code in C3.objects]
    return NatTransformData(lhs, rhs, comps)


def plus_times_functors(C: FinCategory, cache: LimitCache) -> tuple[FunctorData, FunctorData]:
    """``(Y,Z) ↦ Y+Z`` and ``(Y,Z) ↦ Y×Z`` on C²."""
    _require_total(cache, triples=False)
    C2 = product_category([C, C])
    plus_obj, times_obj, plus_mor, times_mor = [], [], [], []
    for code in C2.objects:
        Y, Z = C2.decode_object(code)
        plus_obj.append(cache.coproduct(Y, Z).apex)
        times_obj.append(cache.product(Y, Z).apex)
    for code in C2.morphisms:
        g, h = C2.decode_morphism(code)
        plus_mor.append(coproduct_morphism(cache, g, h))
        times_mor.append(product_morphism(cache, g, h))
    return FunctorData(C2, C, plus_obj, plus_mor), FunctorData(C2, C, times_obj, times_mor)


def alpha_transformation(C: FinCategory, cache: LimitCache, zero: ZeroStructure, functors=None) -> NatTransformData:
    plus, times = functors or plus_times_functors(C, cache)
    C2 = plus.source
    comps = [canonical_alpha(C, cache, zero, *C2.decode_object(code)) for code in C2.objects]
    return NatTransformData(plus, times, comps)


def apexes_isomorphic(C: FinCategory, a: int, b: int) -> Optional[int]:
    """An isomorphism a -> b if one exists."""
    return next((m for m in C.hom(a, b) if is_invertible(C, m) is not None), None)
