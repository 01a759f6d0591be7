"""Monoidal and braided structure on finite categories, lax monoidal functors,
monoidal natural transformations, and the strength / coproduct-preservation
checkers.

Coherence is checked against the standard axioms: pentagon and triangle for
monoidal categories, the two hexagons for braidings, and the associativity
and two unit diagrams for lax monoidal functors.  A component lying in the
wrong hom-set is reported as a failure rather than raised, so that mutated
structures can be scored uniformly.
"""

from __future__ import annotations

import enum
import itertools
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, replace
from typing import Any, Optional

from .core import (
    FinCatError,
    FinCategory,
    FunctorData,
    NatTransformData,
    ProductCategory,
    StructuralError,
    compose_functors,
    is_invertible,
    product_category,
    product_functor,
    validate_functor,
    validate_natural_transformation,
)
from .limits import (
    LimitCache,
    build_limit_cache,
    canonical_alpha,
    copair_from_coproduct,
    coproduct_morphism,
    pair_into_product,
    product_morphism,
    zero_structure,
)
from .reports import Check, CoherenceReport, TheoremReport
from .search import SearchResult, SearchTruncated, iter_natural_transformations


class HypothesisViolation(FinCatError):
    """A checker was handed data that does not satisfy the theorem's hypotheses."""


class LazyTable(Mapping):
    """Read-only mapping whose values are computed and memoised on first access."""

    def __init__(self, keys: Callable[[], Iterable], compute: Callable[[Any], int], size: int):
        self._keys = keys
        self._compute = compute
        self._size = size
        self._memo: dict = {}

    def __getitem__(self, key):
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = self._compute(key)
            return value

    def __iter__(self):
        return iter(self._keys())

    def __len__(self):
        return self._size


@dataclass(frozen=True, eq=False)
class MonoidalStructure:
    category: FinCategory
    tensor: FunctorData
    unit: int
    associator: Mapping[tuple[int, int, int], int]
    left_unitor: Mapping[int, int]
    right_unitor: Mapping[int, int]
    braiding: Optional[Mapping[tuple[int, int], int]] = None
    name: str = ""
    limits: Optional[LimitCache] = None

    def __post_init__(self):
        object.__setattr__(self, "_inverses", {})

    def tensor_obj(self, x: int, y: int) -> int:
        return self.tensor.object_map[x * self.category.object_count + y]

    def tensor_mor(self, f: int, g: int) -> int:
        return self.tensor.morphism_map[f * self.category.n_morphisms + g]

    def inverse(self, f: int) -> Optional[int]:
        inv = self._inverses
        if f not in inv:
            inv[f] = is_invertible(self.category, f)
        return inv[f]

    def require_inverse(self, f: int, what: str) -> int:
        g = self.inverse(f)
        if g is None:
            raise StructuralError(f"{what} component {f} is not invertible")
        return g

    def interchange(self, w: int, x: int, y: int, z: int) -> int:
        """The middle-four map ``(w⊗x)⊗(y⊗z) -> (w⊗y)⊗(x⊗z)`` built from 1⊗γ⊗1."""
        if self.braiding is None:
            raise StructuralError("interchange needs a braiding")
        C, t, T, one = self.category, self.tensor_obj, self.tensor_mor, self.category.identities
        a = self.associator
        return C.compose_all(
            self.require_inverse(a[w, y, t(x, z)], "associator"),
            T(one[w], a[y, x, z]),
            T(one[w], T(self.braiding[x, y], one[z])),
            T(one[w], self.require_inverse(a[x, y, z], "associator")),
            a[w, x, t(y, z)],
        )

    def with_component(self, table: str, key, value: int) -> "MonoidalStructure":
        """A copy with one component of ``table`` replaced (used for mutation testing)."""
        new = dict(getattr(self, table))
        new[key] = value
        return replace(self, **{table: new})


def _square(C: FinCategory) -> ProductCategory:
    return product_category([C, C])


def cartesian_monoidal(C: FinCategory, cache: Optional[LimitCache] = None) -> MonoidalStructure:
    """``(C, ×, 1)`` with structure maps built from mediating morphisms."""
    cache = cache or build_limit_cache(C)
    one = cache.require_terminal()
    C2 = _square(C)
    obj = [cache.product(*C2.decode_object(u)).apex for u in C2.objects]
    mor = [product_morphism(cache, *C2.decode_morphism(h)) for h in C2.morphisms]
    tensor = FunctorData(C2, C, obj, mor)
    P = cache.product
    ids = C.identities
    assoc, lam, rho, gam = {}, {}, {}, {}
    for x, y, z in itertools.product(C.objects, repeat=3):
        xy, yz = P(x, y), P(y, z)
        xy_z, x_yz = P(xy.apex, z), P(x, yz.apex)
        to_x = C.compose(xy.projections[0], xy_z.projections[0])
        to_y = C.compose(xy.projections[1], xy_z.projections[0])
        to_yz = pair_into_product(yz, to_y, xy_z.projections[1])
        assoc[x, y, z] = pair_into_product(x_yz, to_x, to_yz)
    for x in C.objects:
        lam[x] = P(one, x).projections[1]
        rho[x] = P(x, one).projections[0]
    for x, y in itertools.product(C.objects, repeat=2):
        w = P(x, y)
        gam[x, y] = pair_into_product(P(y, x), w.projections[1], w.projections[0])
    del ids
    return MonoidalStructure(C, tensor, one, assoc, lam, rho, gam, "cartesian", cache)


def cocartesian_monoidal(C: FinCategory, cache: Optional[LimitCache] = None) -> MonoidalStructure:
    """``(C, +, 0)`` with structure maps built from mediating morphisms."""
    cache = cache or build_limit_cache(C)
    zero = cache.require_initial()
    C2 = _square(C)
    obj = [cache.coproduct(*C2.decode_object(u)).apex for u in C2.objects]
    mor = [coproduct_morphism(cache, *C2.decode_morphism(h)) for h in C2.morphisms]
    tensor = FunctorData(C2, C, obj, mor)
    S = cache.coproduct
    ids = C.identities
    assoc, lam, rho, gam = {}, {}, {}, {}
    for x, y, z in itertools.product(C.objects, repeat=3):
        xy, yz = S(x, y), S(y, z)
        xy_z, x_yz = S(xy.apex, z), S(x, yz.apex)
        from_x = x_yz.injections[0]
        from_y = C.compose(x_yz.injections[1], yz.injections[0])
        from_z = C.compose(x_yz.injections[1], yz.injections[1])
        from_xy = copair_from_coproduct(xy, from_x, from_y)
        assoc[x, y, z] = copair_from_coproduct(xy_z, from_xy, from_z)
    for x in C.objects:
        lam[x] = copair_from_coproduct(S(zero, x), cache.initial_map(x), ids[x])
        rho[x] = copair_from_coproduct(S(x, zero), ids[x], cache.initial_map(x))
    for x, y in itertools.product(C.objects, repeat=2):
        w = S(y, x)
        gam[x, y] = copair_from_coproduct(S(x, y), w.injections[1], w.injections[0])
    return MonoidalStructure(C, tensor, zero, assoc, lam, rho, gam, "cocartesian", cache)


def strict_monoidal(
    C: FinCategory,
    tensor_obj: Callable[[int, int], int],
    tensor_mor: Callable[[int, int], int],
    unit: int,
    symmetric: bool = True,
    name: str = "strict",
) -> MonoidalStructure:
    """Identity associator and unitors; identity braiding when ``symmetric``.

    The caller's tensor must make these identities well typed; validate_monoidal
    reports it if not.
    """
    C2 = _square(C)
    obj = [tensor_obj(*C2.decode_object(u)) for u in C2.objects]
    mor = [tensor_mor(*C2.decode_morphism(h)) for h in C2.morphisms]
    ids = C.identities
    assoc = {(x, y, z): ids[tensor_obj(tensor_obj(x, y), z)] for x, y, z in itertools.product(C.objects, repeat=3)}
    lam = {x: ids[x] for x in C.objects}
    rho = {x: ids[x] for x in C.objects}
    gam = {(x, y): ids[tensor_obj(x, y)] for x, y in itertools.product(C.objects, repeat=2)} if symmetric else None
    return MonoidalStructure(C, FunctorData(C2, C, obj, mor), unit, assoc, lam, rho, gam, name)


def commutative_monoid_monoidal(C: FinCategory) -> MonoidalStructure:
    """A one-object category with commutative composition, tensored by composition."""
    if C.object_count != 1:
        raise StructuralError("commutative_monoid_monoidal needs a one-object category")
    return strict_monoidal(C, lambda x, y: 0, C.compose, 0, True, "commutative-monoid")


def kronecker_monoidal(C) -> MonoidalStructure:
    """Kronecker product on Boolean matrices with objects 0 and 1 (unit 1).

    Only the bound-1 matrix category is closed under ``m ⊗ n = m·n``.
    """
    if getattr(C, "bound", None) is None or C.bound > 1:
        raise StructuralError("kronecker_monoidal needs the Boolean-matrix category with objects {0, 1}")

    def kron(f, g):
        F, G = C.matrices[f], C.matrices[g]
        m, m2 = C.src[f], C.src[g]
        rows = [
            [F[r][c] & G[r2][c2] for c in range(m) for c2 in range(m2)]
            for r in range(len(F)) for r2 in range(len(G))
        ]
        return C.index_of(rows, m * m2)

    return strict_monoidal(C, lambda x, y: x * y, kron, 1, True, "kronecker")


def product_monoidal(M1: MonoidalStructure, M2: MonoidalStructure) -> MonoidalStructure:
    """Componentwise structure on ``C1 × C2`` (braided when both factors are)."""
    C1, C2 = M1.category, M2.category
    P = product_category([C1, C2])
    PP = product_category([P, P])
    n = P.object_count

    def t_obj(p, q):
        (p1, p2), (q1, q2) = P.decode_object(p), P.decode_object(q)
        return P.encode_object((M1.tensor_obj(p1, q1), M2.tensor_obj(p2, q2)))

    def t_mor(f, g):
        (f1, f2), (g1, g2) = P.decode_morphism(f), P.decode_morphism(g)
        return P.encode_morphism((M1.tensor_mor(f1, g1), M2.tensor_mor(f2, g2)))

    obj = [t_obj(*divmod(u, n)) for u in PP.objects]
    mor = [t_mor(*divmod(h, P.n_morphisms)) for h in PP.morphisms]
    tensor = FunctorData(PP, P, obj, mor)

    def assoc(key):
        parts = [P.decode_object(k) for k in key]
        return P.encode_morphism((M1.associator[tuple(p[0] for p in parts)], M2.associator[tuple(p[1] for p in parts)]))

    def unitor(table1, table2):
        def compute(p):
            p1, p2 = P.decode_object(p)
            return P.encode_morphism((table1[p1], table2[p2]))
        return LazyTable(lambda: iter(P.objects), compute, n)

    braiding = None
    if M1.braiding is not None and M2.braiding is not None:
        def gam(key):
            (p1, p2), (q1, q2) = P.decode_object(key[0]), P.decode_object(key[1])
            return P.encode_morphism((M1.braiding[p1, q1], M2.braiding[p2, q2]))
        braiding = LazyTable(lambda: itertools.product(P.objects, repeat=2), gam, n * n)

    return MonoidalStructure(
        P,
        tensor,
        P.encode_object((M1.unit, M2.unit)),
        LazyTable(lambda: itertools.product(P.objects, repeat=3), assoc, n**3),
        unitor(M1.left_unitor, M2.left_unitor),
        unitor(M1.right_unitor, M2.right_unitor),
        braiding,
        f"{M1.name}x{M2.name}",
    )


# -- validation of monoidal categories -----------------------------------------


def _lookup(table: Mapping, key, what: str) -> int:
    try:
        return table[key]
    except KeyError:
        raise StructuralError(f"{what} has no component at {key}") from None


def _in_hom(C: FinCategory, m: int, x: int, y: int) -> bool:
    if not 0 <= m < C.n_morphisms:
        raise StructuralError(f"morphism index {m} out of range")
    return C.src[m] == x and C.dst[m] == y


def validate_monoidal(M: MonoidalStructure) -> CoherenceReport:
    """Tensor functoriality, component typing, invertibility, naturality,
    pentagon on all quadruples and triangle on all pairs."""
    rep = CoherenceReport()
    C = M.category
    tv = validate_functor(M.tensor)
    if not tv.ok:
        rep.failures += [("tensor-" + n, w) for n, w in tv.failures]
        return rep
    t, T, ids, I = M.tensor_obj, M.tensor_mor, C.identities, M.unit
    objs = list(C.objects)
    a = {k: _lookup(M.associator, k, "associator") for k in itertools.product(objs, repeat=3)}
    lam = {x: _lookup(M.left_unitor, x, "left unitor") for x in objs}
    rho = {x: _lookup(M.right_unitor, x, "right unitor") for x in objs}
    for (x, y, z), m in a.items():
        if not _in_hom(C, m, t(t(x, y), z), t(x, t(y, z))):
            rep.failures.append(("associator-typing", (x, y, z)))
    for x in objs:
        if not _in_hom(C, lam[x], t(I, x), x):
            rep.failures.append(("left-unitor-typing", (x,)))
        if not _in_hom(C, rho[x], t(x, I), x):
            rep.failures.append(("right-unitor-typing", (x,)))
    if rep.failures:
        return rep
    for k, m in a.items():
        if M.inverse(m) is None:
            rep.failures.append(("associator-invertible", k))
    for x in objs:
        if M.inverse(lam[x]) is None:
            rep.failures.append(("left-unitor-invertible", (x,)))
        if M.inverse(rho[x]) is None:
            rep.failures.append(("right-unitor-invertible", (x,)))
    src, dst = C.src, C.dst
    for f, g, h in itertools.product(C.morphisms, repeat=3):
        x, y, z = src[f], src[g], src[h]
        x2, y2, z2 = dst[f], dst[g], dst[h]
        if C.compose(a[x2, y2, z2], T(T(f, g), h)) != C.compose(T(f, T(g, h)), a[x, y, z]):
            rep.failures.append(("associator-naturality", (f, g, h)))
    for f in C.morphisms:
        x, y = src[f], dst[f]
        if C.compose(lam[y], T(ids[I], f)) != C.compose(f, lam[x]):
            rep.failures.append(("left-unitor-naturality", (f,)))
        if C.compose(rho[y], T(f, ids[I])) != C.compose(f, rho[x]):
            rep.failures.append(("right-unitor-naturality", (f,)))
    for w, x, y, z in itertools.product(objs, repeat=4):
        lhs = C.compose_all(T(ids[w], a[x, y, z]), a[w, t(x, y), z], T(a[w, x, y], ids[z]))
        rhs = C.compose(a[w, x, t(y, z)], a[t(w, x), y, z])
        if lhs != rhs:
            rep.failures.append(("pentagon", (w, x, y, z)))
    for x, y in itertools.product(objs, repeat=2):
        if C.compose(T(ids[x], lam[y]), a[x, I, y]) != T(rho[x], ids[y]):
            rep.failures.append(("triangle", (x, y)))
    return rep


def validate_braiding(M: MonoidalStructure) -> CoherenceReport:
    """Typing, invertibility and naturality of γ plus both hexagons.

    Assumes validate_monoidal(M) passes.
    """
    rep = CoherenceReport()
    if M.braiding is None:
        rep.failures.append(("braiding-absent", ()))
        return rep
    C = M.category
    t, T, ids = M.tensor_obj, M.tensor_mor, C.identities
    objs = list(C.objects)
    g = {k: _lookup(M.braiding, k, "braiding") for k in itertools.product(objs, repeat=2)}
    for (x, y), m in g.items():
        if not _in_hom(C, m, t(x, y), t(y, x)):
            rep.failures.append(("braiding-typing", (x, y)))
    if rep.failures:
        return rep
    for k, m in g.items():
        if M.inverse(m) is None:
            rep.failures.append(("braiding-invertible", k))
    for f, h in itertools.product(C.morphisms, repeat=2):
        x, y, x2, y2 = C.src[f], C.src[h], C.dst[f], C.dst[h]
        if C.compose(g[x2, y2], T(f, h)) != C.compose(T(h, f), g[x, y]):
            rep.failures.append(("braiding-naturality", (f, h)))
    a = M.associator
    for x, y, z in itertools.product(objs, repeat=3):
        lhs = C.compose_all(a[y, z, x], g[x, t(y, z)], a[x, y, z])
        rhs = C.compose_all(T(ids[y], g[x, z]), a[y, x, z], T(g[x, y], ids[z]))
        if lhs != rhs:
            rep.failures.append(("hexagon-1", (x, y, z)))
        inv = [M.inverse(a[z, x, y]), M.inverse(a[x, y, z]), M.inverse(a[x, z, y])]
        if None in inv:
            rep.failures.append(("hexagon-2-undefined", (x, y, z)))
            continue
        lhs = C.compose_all(inv[0], g[t(x, y), z], inv[1])
        rhs = C.compose_all(T(g[x, z], ids[y]), inv[2], T(ids[x], g[y, z]))
        if lhs != rhs:
            rep.failures.append(("hexagon-2", (x, y, z)))
    return rep


# -- monoidal functors ---------------------------------------------------------


class Strength(str, enum.Enum):
    LAX = "lax"
    NORMAL = "normal"
    STRONG = "strong"


@dataclass(frozen=True, eq=False)
class MonoidalFunctorData:
    functor: FunctorData
    source: MonoidalStructure
    target: MonoidalStructure
    phi: Mapping[tuple[int, int], int]
    phi0: int

    def with_phi(self, key, value: int) -> "MonoidalFunctorData":
        new = dict(self.phi)
        new[key] = value
        return replace(self, phi=new)


def validate_monoidal_functor(Fh: MonoidalFunctorData) -> CoherenceReport:
    """Naturality of φ in both variables, associativity and the two unit diagrams."""
    rep = CoherenceReport()
    F, A, B = Fh.functor, Fh.source, Fh.target
    fv = validate_functor(F)
    if not fv.ok:
        rep.failures += [("functor-" + n, w) for n, w in fv.failures]
        return rep
    CA, CB = A.category, B.category
    Fo, Fm = F.object_map, F.morphism_map
    tA, TA, tB, TB = A.tensor_obj, A.tensor_mor, B.tensor_obj, B.tensor_mor
    objs = list(CA.objects)
    phi = {k: _lookup(Fh.phi, k, "phi") for k in itertools.product(objs, repeat=2)}
    for (y, z), m in phi.items():
        if not _in_hom(CB, m, tB(Fo[y], Fo[z]), Fo[tA(y, z)]):
            rep.failures.append(("phi-typing", (y, z)))
    if not _in_hom(CB, Fh.phi0, B.unit, Fo[A.unit]):
        rep.failures.append(("phi0-typing", ()))
    if rep.failures:
        return rep
    for f, g in itertools.product(CA.morphisms, repeat=2):
        y, z, y2, z2 = CA.src[f], CA.src[g], CA.dst[f], CA.dst[g]
        if CB.compose(phi[y2, z2], TB(Fm[f], Fm[g])) != CB.compose(Fm[TA(f, g)], phi[y, z]):
            rep.failures.append(("phi-naturality", (f, g)))
    idB = CB.identities
    for x, y, z in itertools.product(objs, repeat=3):
        lhs = CB.compose_all(Fm[A.associator[x, y, z]], phi[tA(x, y), z], TB(phi[x, y], idB[Fo[z]]))
        rhs = CB.compose_all(phi[x, tA(y, z)], TB(idB[Fo[x]], phi[y, z]), B.associator[Fo[x], Fo[y], Fo[z]])
        if lhs != rhs:
            rep.failures.append(("associativity", (x, y, z)))
    I = A.unit
    for y in objs:
        lhs = CB.compose_all(Fm[A.left_unitor[y]], phi[I, y], TB(Fh.phi0, idB[Fo[y]]))
        if lhs != B.left_unitor[Fo[y]]:
            rep.failures.append(("left-unit", (y,)))
        lhs = CB.compose_all(Fm[A.right_unitor[y]], phi[y, I], TB(idB[Fo[y]], Fh.phi0))
        if lhs != B.right_unitor[Fo[y]]:
            rep.failures.append(("right-unit", (y,)))
    return rep


def classify_monoidal_functor(Fh: MonoidalFunctorData) -> Strength:
    B = Fh.target
    if B.inverse(Fh.phi0) is None:
        return Strength.LAX
    objs = Fh.source.category.objects
    if all(B.inverse(Fh.phi[y, z]) is not None for y, z in itertools.product(objs, repeat=2)):
        return Strength.STRONG
    return Strength.NORMAL


def identity_monoidal_functor(M: MonoidalStructure) -> MonoidalFunctorData:
    C = M.category
    F = FunctorData(C, C, tuple(C.objects), tuple(C.morphisms))
    phi = {(y, z): C.identities[M.tensor_obj(y, z)] for y, z in itertools.product(C.objects, repeat=2)}
    return MonoidalFunctorData(F, M, M, phi, C.identities[M.unit])


def tensor_strong_monoidal(M: MonoidalStructure, square: Optional[MonoidalStructure] = None) -> MonoidalFunctorData:
    """``⊗ : C×C -> C`` with structure maps ``1⊗γ⊗1`` and ``I -> I⊗I``."""
    if M.braiding is None:
        raise StructuralError("tensor_strong_monoidal needs a braided structure")
    MM = square or product_monoidal(M, M)
    P = MM.category
    F = FunctorData(P, M.category, M.tensor.object_map, M.tensor.morphism_map)

    def phi(key):
        (w, x), (y, z) = P.decode_object(key[0]), P.decode_object(key[1])
        return M.interchange(w, x, y, z)

    n = P.object_count
    phi_table = LazyTable(lambda: itertools.product(P.objects, repeat=2), phi, n * n)
    phi0 = M.require_inverse(M.left_unitor[M.unit], "left unitor")
    return MonoidalFunctorData(F, MM, M, phi_table, phi0)


def canonical_lax_functor(
    F: FunctorData, source: MonoidalStructure, target: MonoidalStructure
) -> MonoidalFunctorData:
    """The lax structure every functor between cocartesian categories carries:
    ``φ = [F i, F j] : FY+FZ -> F(Y+Z)`` and ``φ0 : 0 -> F0``."""
    sc, tc = source.limits, target.limits
    if sc is None or tc is None:
        raise StructuralError("canonical_lax_functor needs cocartesian structures with limit caches")
    CB = target.category
    phi = {}
    for y, z in itertools.product(source.category.objects, repeat=2):
        i, j = sc.coproduct(y, z).injections
        w = tc.coproduct(F.object_map[y], F.object_map[z])
        phi[y, z] = copair_from_coproduct(w, F.morphism_map[i], F.morphism_map[j])
    (phi0,) = CB.hom(target.unit, F.object_map[source.unit])
    return MonoidalFunctorData(F, source, target, phi, phi0)


def product_functor_on(C: FinCategory, cache: LimitCache, X: int) -> FunctorData:
    """``X × - : C -> C``."""
    obj = [cache.product(X, y).apex for y in C.objects]
    mor = [product_morphism(cache, C.identities[X], g) for g in C.morphisms]
    return FunctorData(C, C, obj, mor)


def product_lax_functor(
    C: FinCategory, cache: LimitCache, X: int, cocartesian: Optional[MonoidalStructure] = None
) -> MonoidalFunctorData:
    """``X × -`` as a lax monoidal endofunctor of ``(C, +, 0)``; its φ is δ_{X,-,-}."""
    M = cocartesian or cocartesian_monoidal(C, cache)
    return canonical_lax_functor(product_functor_on(C, cache, X), M, M)


def meet_lax_functor(C: FinCategory, a: int, cache: Optional[LimitCache] = None, cocartesian=None) -> MonoidalFunctorData:
    """``a ∧ -`` on a lattice, lax monoidal for the join structure."""
    cache = cache or build_limit_cache(C)
    return product_lax_functor(C, cache, a, cocartesian)


def additive_identity_functor(
    C: FinCategory, cache: LimitCache, cartesian=None, cocartesian=None
) -> MonoidalFunctorData:
    """Identity ``(C, ×, 1) -> (C, +, 0)`` with φ = α and φ0 : 0 -> 1 (pointed C only)."""
    zero = zero_structure(C, cache)
    if zero is None:
        raise HypothesisViolation("not pointed: no zero object")
    A = cartesian or cartesian_monoidal(C, cache)
    B = cocartesian or cocartesian_monoidal(C, cache)
    F = FunctorData(C, C, tuple(C.objects), tuple(C.morphisms))
    phi = {(y, z): canonical_alpha(C, cache, zero, y, z) for y, z in itertools.product(C.objects, repeat=2)}
    (phi0,) = C.hom(B.unit, A.unit)
    return MonoidalFunctorData(F, A, B, phi, phi0)


def twisted_identity_functor(M: MonoidalStructure, g: int) -> MonoidalFunctorData:
    """On a one-object strict structure: identity functor with φ0 = g and φ = g⁻¹."""
    C = M.category
    ginv = M.require_inverse(g, "twist")
    F = FunctorData(C, C, tuple(C.objects), tuple(C.morphisms))
    return MonoidalFunctorData(F, M, M, {(0, 0): ginv}, g)


# -- monoidal natural transformations ------------------------------------------


@dataclass(frozen=True, eq=False)
class MonoidalNatData:
    nat: NatTransformData
    source: MonoidalFunctorData
    target: MonoidalFunctorData


def validate_monoidal_nat(alpha: MonoidalNatData, nullary: bool = True) -> CoherenceReport:
    """The binary square at every object pair and, unless disabled, the unit triangle."""
    rep = CoherenceReport()
    F, G = alpha.source, alpha.target
    A, B = F.source, F.target
    CB = B.category
    comps = alpha.nat.components
    for y, z in itertools.product(A.category.objects, repeat=2):
        lhs = CB.compose(comps[A.tensor_obj(y, z)], F.phi[y, z])
        rhs = CB.compose(G.phi[y, z], B.tensor_mor(comps[y], comps[z]))
        if lhs != rhs:
            rep.failures.append(("binary", (y, z)))
    if nullary and CB.compose(comps[A.unit], F.phi0) != G.phi0:
        rep.failures.append(("nullary", ()))
    return rep


def identity_monoidal_nat(Fh: MonoidalFunctorData) -> MonoidalNatData:
    F = Fh.functor
    comps = tuple(F.target.identities[F.object_map[x]] for x in F.source.objects)
    return MonoidalNatData(NatTransformData(F, F, comps), Fh, Fh)


@dataclass
class StrengthSetting:
    """The two monoidal functors ``A×A -> B`` compared by ψ in the strength theorem."""

    square: MonoidalStructure  # A × A
    tensor_after: MonoidalFunctorData  # ⊗_B ∘ (F × F)
    functor_after: MonoidalFunctorData  # F ∘ ⊗_A


def strength_setting(Fh: MonoidalFunctorData, square: Optional[MonoidalStructure] = None) -> StrengthSetting:
    """Build both sides of ψ; ``square`` may pass a precomputed ``A × A``."""
    A, B, F = Fh.source, Fh.target, Fh.functor
    if A.braiding is None or B.braiding is None:
        raise HypothesisViolation("source and target must be braided")
    AA = square or product_monoidal(A, A)
    P = AA.category
    CB = B.category
    FxF = product_functor([F, F], source=P, target=B.tensor.source)
    G1 = compose_functors(B.tensor, FxF)
    G2 = compose_functors(F, FunctorData(P, A.category, A.tensor.object_map, A.tensor.morphism_map))
    Fo, Fm, phi = F.object_map, F.morphism_map, Fh.phi
    n = P.object_count

    def phi1(key):
        (w, x), (y, z) = P.decode_object(key[0]), P.decode_object(key[1])
        return CB.compose(B.tensor_mor(phi[w, y], phi[x, z]), B.interchange(Fo[w], Fo[x], Fo[y], Fo[z]))

    def phi2(key):
        (w, x), (y, z) = P.decode_object(key[0]), P.decode_object(key[1])
        return CB.compose(Fm[A.interchange(w, x, y, z)], phi[A.tensor_obj(w, x), A.tensor_obj(y, z)])

    keys = lambda: itertools.product(P.objects, repeat=2)  # noqa: E731
    lamB_inv = B.require_inverse(B.left_unitor[B.unit], "left unitor")
    lamA_inv = A.require_inverse(A.left_unitor[A.unit], "left unitor")
    G1h = MonoidalFunctorData(
        G1, AA, B, LazyTable(keys, phi1, n * n), CB.compose(B.tensor_mor(Fh.phi0, Fh.phi0), lamB_inv)
    )
    G2h = MonoidalFunctorData(G2, AA, B, LazyTable(keys, phi2, n * n), CB.compose(Fm[lamA_inv], Fh.phi0))
    return StrengthSetting(AA, G1h, G2h)


def find_monoidal_isos(
    G1: MonoidalFunctorData,
    G2: MonoidalFunctorData,
    limit: Optional[int] = None,
    max_results: Optional[int] = 1,
    nullary: bool = True,
) -> tuple[list[MonoidalNatData], SearchResult]:
    """Monoidal natural isomorphisms G1 => G2, filtered from the iso search."""
    stats = SearchResult()
    found = []
    for eta in iter_natural_transformations(G1.functor, G2.functor, True, limit, stats):
        cand = MonoidalNatData(eta, G1, G2)
        if validate_monoidal_nat(cand, nullary).ok:
            found.append(cand)
            if max_results is not None and len(found) >= max_results:
                break
    return found, stats


def require_strength_psi(
    Fh: MonoidalFunctorData, limit: Optional[int] = None, setting: Optional[StrengthSetting] = None
) -> MonoidalNatData:
    """The first monoidal iso ``⊗∘(F×F) => F∘⊗``.

    Raises HypothesisViolation when the search proves none exists and
    SearchTruncated when the budget runs out first.
    """
    setting = setting or strength_setting(Fh)
    found, stats = find_monoidal_isos(setting.tensor_after, setting.functor_after, limit=limit)
    if found:
        return found[0]
    if stats.truncated:
        raise SearchTruncated(f"monoidal-iso search truncated after {stats.nodes} nodes")
    raise HypothesisViolation("no monoidal iso ψ exists")


def _validated_braided(M: MonoidalStructure, label: str, memo: dict) -> Check:
    if id(M) not in memo:
        rep = validate_monoidal(M)
        if rep.ok:
            rep = validate_braiding(M)
        memo[id(M)] = rep
    rep = memo[id(M)]
    if not rep.ok:
        raise HypothesisViolation(f"{label} is not braided monoidal: {rep.failures[:3]}")
    return Check(f"{label} braided monoidal", True, M.name)


def _checked_naturality(eta: NatTransformData):
    try:
        return validate_natural_transformation(eta)
    except StructuralError as exc:
        raise HypothesisViolation(f"ψ is mistyped: {exc}") from None


def check_strength_theorem(
    Fh: MonoidalFunctorData,
    psi: Optional[MonoidalNatData],
    relaxed: bool = False,
    setting: Optional[StrengthSetting] = None,
) -> TheoremReport:
    """Check that a normal monoidal F with a monoidal iso ⊗∘(F×F) ≅ F∘⊗ is strong.

    Raises HypothesisViolation when the supplied data fails a hypothesis; a
    missing ψ gives a not-applicable report.  ``relaxed`` skips the unit
    condition on ψ.  Besides the conclusion, the proof is replayed at the
    unit: for all W, Z the square ``φ_{W,Z}∘T = ψ_{W,Z}∘L`` is checked, where
    T and L are the routes through ``ψ_{W,I}⊗ψ_{I,Z}`` and ``φ_{W,I}⊗φ_{I,Z}``
    precomposed with ``1⊗φ0⊗φ0⊗1``.
    """
    report = TheoremReport("monoidal")
    A, B = Fh.source, Fh.target
    memo: dict = {}
    report.hypotheses.append(_validated_braided(A, "source", memo))
    report.hypotheses.append(_validated_braided(B, "target", memo))
    fv = validate_monoidal_functor(Fh)
    if not fv.ok:
        raise HypothesisViolation(f"F is not a lax monoidal functor: {fv.failures[:3]}")
    kind = classify_monoidal_functor(Fh)
    if kind is Strength.LAX:
        raise HypothesisViolation("F is not normal: φ0 is not invertible")
    report.hypotheses.append(Check("F normal", True, kind.value))
    if psi is None:
        report.hypotheses.append(Check("monoidal iso ψ", False, "hypothesis absent"))
        return report.decide()

    setting = setting or strength_setting(Fh)
    G1, G2 = setting.tensor_after, setting.functor_after
    for given, expected, label in ((psi.source, G1, "⊗∘(F×F)"), (psi.target, G2, "F∘⊗")):
        if not (
            given.functor.object_map == expected.functor.object_map
            and given.functor.morphism_map == expected.functor.morphism_map
        ):
            raise HypothesisViolation(f"ψ does not have {label} as the expected functor")
    nat = _checked_naturality(psi.nat)
    if not nat.ok:
        raise HypothesisViolation(f"ψ is not natural: {nat.failures[:3]}")
    if any(B.inverse(m) is None for m in psi.nat.components):
        raise HypothesisViolation("ψ has a non-invertible component")
    checked = MonoidalNatData(psi.nat, G1, G2)
    mon = validate_monoidal_nat(checked, nullary=not relaxed)
    if not mon.ok:
        raise HypothesisViolation(f"ψ is not monoidal: {mon.failures[:3]}")
    report.hypotheses.append(
        Check("monoidal iso ψ", True, "binary condition only" if relaxed else "binary and unit conditions")
    )

    objs = list(A.category.objects)
    bad = [(w, z) for w, z in itertools.product(objs, repeat=2) if B.inverse(Fh.phi[w, z]) is None]
    report.conclusion = not bad
    if bad:
        report.notes.append(f"φ not invertible at {bad[0]}")
    report.steps.extend(_replay_strength_proof(Fh, psi, setting))
    return report.decide()


def _replay_strength_proof(Fh: MonoidalFunctorData, psi: MonoidalNatData, setting: StrengthSetting) -> list[Check]:
    A, B, F = Fh.source, Fh.target, Fh.functor
    CB, P = B.category, setting.square.category
    Fo, Fm, phi, I = F.object_map, F.morphism_map, Fh.phi, A.unit
    T, idB = B.tensor_mor, CB.identities
    comps = psi.nat.components
    G1, G2 = setting.tensor_after, setting.functor_after

    def psi_at(w, z):
        return comps[P.encode_object((w, z))]

    square_bad, replay_bad, inv_bad = [], [], []
    for w, z in itertools.product(A.category.objects, repeat=2):
        p, q = P.encode_object((w, I)), P.encode_object((I, z))
        # the big square of the proof, at X = Y = I
        top = CB.compose_all(Fm[A.interchange(w, I, I, z)], phi[A.tensor_obj(w, I), A.tensor_obj(I, z)],
                             T(psi_at(w, I), psi_at(I, z)))
        left = CB.compose_all(comps[setting.square.tensor_obj(p, q)], T(phi[w, I], phi[I, z]),
                              B.interchange(Fo[w], Fo[I], Fo[I], Fo[z]))
        if top != left:
            square_bad.append((w, z))
        # transport both routes back to FW⊗FZ and compare
        k = CB.compose(
            T(T(idB[Fo[w]], Fh.phi0), T(Fh.phi0, idB[Fo[z]])),
            T(B.require_inverse(B.right_unitor[Fo[w]], "right unitor"),
              B.require_inverse(B.left_unitor[Fo[z]], "left unitor")),
        )
        back = T(Fm[A.right_unitor[w]], Fm[A.left_unitor[z]])
        route_t = CB.compose_all(back, T(psi_at(w, I), psi_at(I, z)), k)
        route_l = CB.compose_all(back, T(phi[w, I], phi[I, z]), k)
        if CB.compose(phi[w, z], route_t) != CB.compose(psi_at(w, z), route_l):
            replay_bad.append((w, z))
        if B.inverse(route_t) is None or B.inverse(route_l) is None:
            inv_bad.append((w, z))
    del G1, G2
    return [
        Check("square at X=Y=I", not square_bad, f"fails at {square_bad[0]}" if square_bad else ""),
        Check("final square φ∘T = ψ∘L", not replay_bad, f"fails at {replay_bad[0]}" if replay_bad else ""),
        Check("T and L invertible", not inv_bad, f"fails at {inv_bad[0]}" if inv_bad else ""),
    ]


# -- coproduct preservation ----------------------------------------------------


@dataclass
class ComparisonSetting:
    """``(X, Y) ↦ FX + FY`` and ``(X, Y) ↦ F(X + Y)`` on A×A, with the canonical comparison."""

    plus_after: FunctorData
    functor_after: FunctorData
    comparison: NatTransformData


def comparison_setting(F: FunctorData, src_cache: LimitCache, tgt_cache: LimitCache) -> ComparisonSetting:
    A, B = F.source, F.target
    A2, B2 = product_category([A, A]), product_category([B, B])
    plusA = FunctorData(
        A2, A,
        [src_cache.coproduct(*A2.decode_object(u)).apex for u in A2.objects],
        [coproduct_morphism(src_cache, *A2.decode_morphism(h)) for h in A2.morphisms],
    )
    plusB = FunctorData(
        B2, B,
        [tgt_cache.coproduct(*B2.decode_object(u)).apex for u in B2.objects],
        [coproduct_morphism(tgt_cache, *B2.decode_morphism(h)) for h in B2.morphisms],
    )
    lhs = compose_functors(plusB, product_functor([F, F], source=A2, target=B2))
    rhs = compose_functors(F, plusA)
    comps = []
    for u in A2.objects:
        x, y = A2.decode_object(u)
        i, j = src_cache.coproduct(x, y).injections
        w = tgt_cache.coproduct(F.object_map[x], F.object_map[y])
        comps.append(copair_from_coproduct(w, F.morphism_map[i], F.morphism_map[j]))
    return ComparisonSetting(lhs, rhs, NatTransformData(lhs, rhs, comps))


def _require_coproducts(cache: LimitCache, label: str) -> None:
    C = cache.category
    if cache.initial is None:
        raise HypothesisViolation(f"{label} has no initial object")
    for x, y in itertools.product(C.objects, repeat=2):
        if not cache.has_coproduct(x, y):
            raise HypothesisViolation(f"{label} lacks the coproduct of {x} and {y}")


def check_coproduct_preservation(
    F: FunctorData,
    psi: Optional[NatTransformData],
    src_cache: LimitCache,
    tgt_cache: LimitCache,
    setting: Optional[ComparisonSetting] = None,
    structures: Optional[tuple[MonoidalStructure, MonoidalStructure, MonoidalStructure]] = None,
) -> TheoremReport:
    """A functor preserving 0 with some natural iso FX+FY ≅ F(X+Y) preserves coproducts.

    The conclusion is invertibility of the canonical comparison at every pair.
    ``structures`` may supply precomputed ``(source +, target +, source² +)``.
    As a proof step, ψ is checked to be monoidal for the canonical lax
    structure of F between the cocartesian structures.
    """
    report = TheoremReport("caccamo-winskel")
    _require_coproducts(src_cache, "source")
    _require_coproducts(tgt_cache, "target")
    A, B = F.source, F.target
    f0 = F.object_map[src_cache.initial]
    if not all(len(B.hom(f0, y)) == 1 for y in B.objects):
        raise HypothesisViolation("F does not preserve the initial object")
    report.hypotheses.append(Check("F preserves initial object", True, B.object_label(f0)))
    setting = setting or comparison_setting(F, src_cache, tgt_cache)
    if psi is None:
        report.hypotheses.append(Check("natural iso ψ", False, "hypothesis absent"))
        return report.decide()
    if not (
        psi.source_functor.object_map == setting.plus_after.object_map
        and psi.source_functor.morphism_map == setting.plus_after.morphism_map
        and psi.target_functor.object_map == setting.functor_after.object_map
        and psi.target_functor.morphism_map == setting.functor_after.morphism_map
    ):
        raise HypothesisViolation("ψ is not between FX+FY and F(X+Y)")
    nat = _checked_naturality(psi)
    if not nat.ok:
        raise HypothesisViolation(f"ψ is not natural: {nat.failures[:3]}")
    if any(is_invertible(B, m) is None for m in psi.components):
        raise HypothesisViolation("ψ has a non-invertible component")
    report.hypotheses.append(Check("natural iso ψ", True))

    A2 = setting.plus_after.source
    bad = [A2.decode_object(u) for u, m in enumerate(setting.comparison.components) if is_invertible(B, m) is None]
    report.conclusion = not bad
    if bad:
        report.notes.append(f"comparison not invertible at {bad[0]}")

    # ψ is monoidal for the unique lax structure (the corollary's proof)
    if structures is None:
        MA, MB = cocartesian_monoidal(A, src_cache), cocartesian_monoidal(B, tgt_cache)
        AA = None
    else:
        MA, MB, AA = structures
    Fh = canonical_lax_functor(F, MA, MB)
    st = strength_setting(Fh, AA)
    mon = validate_monoidal_nat(MonoidalNatData(NatTransformData(st.tensor_after.functor, st.functor_after.functor,
                                                                 psi.components), st.tensor_after, st.functor_after))
    report.steps.append(Check("ψ monoidal for the canonical structure", mon.ok,
                              "" if mon.ok else str(mon.failures[:3])))
    return report.decide()
