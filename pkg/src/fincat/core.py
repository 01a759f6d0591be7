"""Finite categories with dense integer indexing.

Objects are ``0..object_count-1`` and morphisms ``0..n_morphisms-1``.  All
equality is index equality.  Composition is either an explicit table over
the composable pairs or a rule (used by product categories and the Boolean
matrix family, whose tables are too large to materialise eagerly).
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from typing import Optional


class FinCatError(Exception):
    """Base class for errors raised by fincat."""


class StructuralError(FinCatError):
    """Malformed data: indices out of range, missing table entries, hom mismatches."""


class CompositionError(StructuralError):
    """Raised when composing a pair that is not composable."""


@dataclass(frozen=True)
class ValidationReport:
    failures: tuple[tuple[str, tuple[int, ...]], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def laws(self) -> set[str]:
        return {name for name, _ in self.failures}

    def to_dict(self) -> dict:
        return {"ok": self.ok, "failures": [[n, list(w)] for n, w in self.failures]}


class FinCategory:
    """A finite category.

    ``composition`` maps ``(g, f)`` to ``g∘f`` for exactly the pairs with
    ``dst[f] == src[g]``, or is a callable computing the same.
    """

    def __init__(
        self,
        object_count: int,
        src: Sequence[int],
        dst: Sequence[int],
        identities: Sequence[int],
        composition: Mapping[tuple[int, int], int] | Callable[[int, int], int],
        *,
        object_names: Optional[Sequence[str]] = None,
        morphism_names: Optional[Sequence[Optional[str]]] = None,
        check: bool = True,
    ):
        self.object_count = int(object_count)
        self.src = tuple(src)
        self.dst = tuple(dst)
        self.identities = tuple(identities)
        if callable(composition):
            self._rule = composition
            self._table = None
        else:
            self._rule = None
            self._table = dict(composition)
        self.object_names = tuple(object_names) if object_names is not None else None
        self.morphism_names = tuple(morphism_names) if morphism_names is not None else None
        self._op: Optional[FinCategory] = None
        self._check_shape()
        self._index()
        if check:
            self._check_table()

    # -- construction helpers -------------------------------------------------

    def _check_shape(self) -> None:
        n, m = self.object_count, len(self.src)
        if n < 0:
            raise StructuralError("negative object count")
        if len(self.dst) != m:
            raise StructuralError("src and dst arrays differ in length")
        if len(self.identities) != n:
            raise StructuralError(f"expected {n} identities, got {len(self.identities)}")
        for f in range(m):
            if not (0 <= self.src[f] < n and 0 <= self.dst[f] < n):
                raise StructuralError(f"morphism {f} has an endpoint out of range")
        for x, i in enumerate(self.identities):
            if not 0 <= i < m:
                raise StructuralError(f"identity of object {x} out of range: {i}")
            if self.src[i] != x or self.dst[i] != x:
                raise StructuralError(f"identity {i} of object {x} is not an endomorphism of {x}")
        if self.object_names is not None and len(self.object_names) != n:
            raise StructuralError("object_names has the wrong length")
        if self.morphism_names is not None and len(self.morphism_names) != m:
            raise StructuralError("morphism_names has the wrong length")

    def _index(self) -> None:
        homs: dict[tuple[int, int], list[int]] = {}
        incoming: list[list[int]] = [[] for _ in range(self.object_count)]
        outgoing: list[list[int]] = [[] for _ in range(self.object_count)]
        for f, (s, d) in enumerate(zip(self.src, self.dst)):
            homs.setdefault((s, d), []).append(f)
            incoming[d].append(f)
            outgoing[s].append(f)
        self._homs = {k: tuple(v) for k, v in homs.items()}
        self._incoming = tuple(map(tuple, incoming))
        self._outgoing = tuple(map(tuple, outgoing))

    def _check_table(self) -> None:
        if self._table is None:
            return
        m = self.n_morphisms
        expected = 0
        for g, f in self.composable_pairs():
            expected += 1
            if (g, f) not in self._table:
                raise StructuralError(f"composition table is missing the pair (g={g}, f={f})")
            h = self._table[g, f]
            if not (isinstance(h, int) and 0 <= h < m):
                raise StructuralError(f"composite of (g={g}, f={f}) out of range: {h!r}")
        if len(self._table) != expected:
            for g, f in self._table:
                if not (0 <= g < m and 0 <= f < m) or self.dst[f] != self.src[g]:
                    raise StructuralError(f"composition table has non-composable pair (g={g}, f={f})")

    # -- basic queries -------------------------------------------------------

    @property
    def n_morphisms(self) -> int:
        return len(self.src)

    @property
    def objects(self) -> range:
        return range(self.object_count)

    @property
    def morphisms(self) -> range:
        return range(len(self.src))

    def hom(self, x: int, y: int) -> tuple[int, ...]:
        return self._homs.get((x, y), ())

    def incoming(self, y: int) -> tuple[int, ...]:
        return self._incoming[y]

    def outgoing(self, x: int) -> tuple[int, ...]:
        return self._outgoing[x]

    def identity(self, x: int) -> int:
        return self.identities[x]

    def compose(self, g: int, f: int) -> int:
        """Return ``g∘f``."""
        m = len(self.src)
        if not (0 <= f < m and 0 <= g < m):
            raise StructuralError(f"morphism index out of range in compose({g}, {f})")
        if self.dst[f] != self.src[g]:
            raise CompositionError(
                f"cannot compose g={g} after f={f}: dst(f)={self.dst[f]} != src(g)={self.src[g]}"
            )
        if self._table is not None:
            return self._table[g, f]
        return self._rule(g, f)

    def compose_all(self, *fs: int) -> int:
        """``compose_all(h, g, f)`` is ``h∘g∘f``."""
        if not fs:
            raise ValueError("compose_all needs at least one morphism")
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.compose(g, out)
        return out

    def composable_pairs(self) -> Iterator[tuple[int, int]]:
        for y in self.objects:
            for f in self._incoming[y]:
                for g in self._outgoing[y]:
                    yield g, f

    def composition_table(self) -> dict[tuple[int, int], int]:
        if self._table is not None:
            return dict(self._table)
        return {(g, f): self._rule(g, f) for g, f in self.composable_pairs()}

    def object_label(self, x: int) -> str:
        if self.object_names is not None:
            return self.object_names[x]
        return str(x)

    def morphism_label(self, f: int) -> str:
        if self.morphism_names is not None and self.morphism_names[f] is not None:
            return self.morphism_names[f]
        return f"{f}:{self.object_label(self.src[f])}->{self.object_label(self.dst[f])}"

    def __repr__(self) -> str:
        return f"{type(self).__name__}(objects={self.object_count}, morphisms={self.n_morphisms})"

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FinCategory):
            return NotImplemented
        if (self.object_count, self.src, self.dst, self.identities) != (
            other.object_count,
            other.src,
            other.dst,
            other.identities,
        ):
            return False
        return all(self.compose(g, f) == other.compose(g, f) for g, f in self.composable_pairs())

    def __hash__(self) -> int:
        return hash((self.object_count, self.src, self.dst, self.identities))


class ProductCategory(FinCategory):
    """Product of finitely many categories, with lexicographic index encoding.

    An object tuple ``(x_1, ..., x_k)`` has index ``sum(x_i * stride_i)`` with the
    first component most significant; morphism tuples are encoded the same way.
    """

    def __init__(self, components: Sequence[FinCategory]):
        if not components:
            raise StructuralError("product_category needs at least one factor")
        self.components = tuple(components)
        self._obj_radix = tuple(c.object_count for c in self.components)
        self._mor_radix = tuple(c.n_morphisms for c in self.components)
        obj_codes = list(itertools.product(*(c.objects for c in self.components)))
        mor_codes = list(itertools.product(*(c.morphisms for c in self.components)))
        src = [self.encode_object(c.src[f] for c, f in zip(self.components, t)) for t in mor_codes]
        dst = [self.encode_object(c.dst[f] for c, f in zip(self.components, t)) for t in mor_codes]
        ids = [self.encode_morphism(c.identities[x] for c, x in zip(self.components, t)) for t in obj_codes]
        super().__init__(len(obj_codes), src, dst, ids, self._compose_rule, check=False)

    @staticmethod
    def _encode(parts, radix) -> int:
        code = 0
        for p, r in zip(parts, radix):
            code = code * r + p
        return code

    @staticmethod
    def _decode(code: int, radix) -> tuple[int, ...]:
        out = []
        for r in reversed(radix):
            code, p = divmod(code, r)
            out.append(p)
        return tuple(reversed(out))

    def encode_object(self, parts) -> int:
        return self._encode(parts, self._obj_radix)

    def decode_object(self, x: int) -> tuple[int, ...]:
        return self._decode(x, self._obj_radix)

    def encode_morphism(self, parts) -> int:
        return self._encode(parts, self._mor_radix)

    def decode_morphism(self, f: int) -> tuple[int, ...]:
        return self._decode(f, self._mor_radix)

    def _compose_rule(self, g: int, f: int) -> int:
        gs, fs = self.decode_morphism(g), self.decode_morphism(f)
        return self.encode_morphism(c.compose(a, b) for c, a, b in zip(self.components, gs, fs))

    def object_label(self, x: int) -> str:
        parts = self.decode_object(x)
        return "(" + ",".join(c.object_label(p) for c, p in zip(self.components, parts)) + ")"

    def morphism_label(self, f: int) -> str:
        parts = self.decode_morphism(f)
        return "(" + ",".join(c.morphism_label(p) for c, p in zip(self.components, parts)) + ")"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ProductCategory):
            return self is other or (
                len(self.components) == len(other.components)
                and all(a == b for a, b in zip(self.components, other.components))
            )
        return super().__eq__(other)

    __hash__ = FinCategory.__hash__


# -- validation ----------------------------------------------------------------


def validate_category(C: FinCategory, max_failures: Optional[int] = None) -> ValidationReport:
    """Check typing of composites, the identity laws and associativity."""
    failures: list[tuple[str, tuple[int, ...]]] = []

    def add(name, witness):
        failures.append((name, witness))
        return max_failures is not None and len(failures) >= max_failures

    ill_typed: set[tuple[int, int]] = set()
    for g, f in C.composable_pairs():
        h = C.compose(g, f)
        if C.src[h] != C.src[f] or C.dst[h] != C.dst[g]:
            ill_typed.add((g, f))
            if add("composite-typing", (g, f)):
                return ValidationReport(tuple(failures))
    for f in C.morphisms:
        if C.compose(C.identities[C.dst[f]], f) != f:
            if add("left-identity", (f,)):
                return ValidationReport(tuple(failures))
        if C.compose(f, C.identities[C.src[f]]) != f:
            if add("right-identity", (f,)):
                return ValidationReport(tuple(failures))
    for f in C.morphisms:
        for g in C.outgoing(C.dst[f]):
            if (g, f) in ill_typed:
                continue
            gf = C.compose(g, f)
            for h in C.outgoing(C.dst[g]):
                if (h, g) in ill_typed or (h, gf) in ill_typed:
                    continue
                hg = C.compose(h, g)
                if (hg, f) in ill_typed:
                    continue
                if C.compose(h, gf) != C.compose(hg, f):
                    if add("associativity", (h, g, f)):
                        return ValidationReport(tuple(failures))
    return ValidationReport(tuple(failures))


def compose(C: FinCategory, g: int, f: int) -> int:
    return C.compose(g, f)


def is_invertible(C: FinCategory, f: int) -> Optional[int]:
    """Return the inverse of ``f`` if it has one."""
    s, d = C.src[f], C.dst[f]
    id_s, id_d = C.identities[s], C.identities[d]
    for g in C.hom(d, s):
        if C.compose(g, f) == id_s and C.compose(f, g) == id_d:
            return g
    return None


def opposite(C: FinCategory) -> FinCategory:
    """The opposite category; morphism and object indices are unchanged."""
    if C._op is None:
        if C._table is not None:
            comp = {(f, g): h for (g, f), h in C._table.items()}
        else:
            def comp(g, f, _c=C):
                return _c.compose(f, g)
        C._op = FinCategory(
            C.object_count,
            C.dst,
            C.src,
            C.identities,
            comp,
            object_names=C.object_names,
            morphism_names=C.morphism_names,
            check=False,
        )
    return C._op


def product_category(Cs: Sequence[FinCategory]) -> ProductCategory:
    return ProductCategory(Cs)


def is_trivial(C: FinCategory) -> bool:
    """True iff C is non-empty and every hom-set is a singleton."""
    if C.object_count == 0:
        return False
    return all(len(C.hom(x, y)) == 1 for x in C.objects for y in C.objects)


# -- functors and natural transformations -----------------------------------


@dataclass(frozen=True, eq=False)
class FunctorData:
    source: FinCategory
    target: FinCategory
    object_map: tuple[int, ...]
    morphism_map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "object_map", tuple(self.object_map))
        object.__setattr__(self, "morphism_map", tuple(self.morphism_map))
        if len(self.object_map) != self.source.object_count:
            raise StructuralError("object_map length differs from the source object count")
        if len(self.morphism_map) != self.source.n_morphisms:
            raise StructuralError("morphism_map length differs from the source morphism count")

    def obj(self, x: int) -> int:
        return self.object_map[x]

    def mor(self, f: int) -> int:
        return self.morphism_map[f]

    def same_as(self, other: "FunctorData") -> bool:
        return (
            self.object_map == other.object_map
            and self.morphism_map == other.morphism_map
            and self.source == other.source
            and self.target == other.target
        )


@dataclass(frozen=True, eq=False)
class NatTransformData:
    source_functor: FunctorData
    target_functor: FunctorData
    components: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    def __getitem__(self, x: int) -> int:
        return self.components[x]


def validate_functor(F: FunctorData) -> ValidationReport:
    C, D = F.source, F.target
    for x in F.object_map:
        if not 0 <= x < D.object_count:
            raise StructuralError(f"object image {x} out of range")
    for f in F.morphism_map:
        if not 0 <= f < D.n_morphisms:
            raise StructuralError(f"morphism image {f} out of range")
    failures = []
    for f in C.morphisms:
        Ff = F.morphism_map[f]
        if D.src[Ff] != F.object_map[C.src[f]] or D.dst[Ff] != F.object_map[C.dst[f]]:
            failures.append(("typing", (f,)))
    if failures:
        return ValidationReport(tuple(failures))
    for x in C.objects:
        if F.morphism_map[C.identities[x]] != D.identities[F.object_map[x]]:
            failures.append(("identity", (x,)))
    for g, f in C.composable_pairs():
        if F.morphism_map[C.compose(g, f)] != D.compose(F.morphism_map[g], F.morphism_map[f]):
            failures.append(("composition", (g, f)))
    return ValidationReport(tuple(failures))


def identity_functor(C: FinCategory) -> FunctorData:
    return FunctorData(C, C, tuple(C.objects), tuple(C.morphisms))


def constant_functor(C: FinCategory, D: FinCategory, x: int) -> FunctorData:
    return FunctorData(C, D, (x,) * C.object_count, (D.identities[x],) * C.n_morphisms)


def compose_functors(G: FunctorData, F: FunctorData) -> FunctorData:
    """``G∘F``."""
    if not F.target == G.source:
        raise StructuralError("compose_functors: target(F) differs from source(G)")
    return FunctorData(
        F.source,
        G.target,
        tuple(G.object_map[x] for x in F.object_map),
        tuple(G.morphism_map[f] for f in F.morphism_map),
    )


def product_functor(
    Fs: Sequence[FunctorData],
    source: Optional[ProductCategory] = None,
    target: Optional[ProductCategory] = None,
) -> FunctorData:
    """``F_1 × ... × F_k`` between the product categories."""
    P = source or product_category([F.source for F in Fs])
    Q = target or product_category([F.target for F in Fs])
    obj = tuple(
        Q.encode_object(F.object_map[p] for F, p in zip(Fs, P.decode_object(x))) for x in P.objects
    )
    mor = tuple(
        Q.encode_morphism(F.morphism_map[p] for F, p in zip(Fs, P.decode_morphism(f))) for f in P.morphisms
    )
    return FunctorData(P, Q, obj, mor)


def identity_transformation(F: FunctorData) -> NatTransformData:
    return NatTransformData(F, F, tuple(F.target.identities[F.object_map[x]] for x in F.source.objects))


def validate_natural_transformation(eta: NatTransformData) -> ValidationReport:
    F, G = eta.source_functor, eta.target_functor
    if not (F.source == G.source and F.target == G.target):
        raise StructuralError("natural transformation between functors with different source/target")
    C, D = F.source, F.target
    if len(eta.components) != C.object_count:
        raise StructuralError("wrong number of components")
    for x, m in enumerate(eta.components):
        if not 0 <= m < D.n_morphisms:
            raise StructuralError(f"component at object {x} out of range: {m}")
        if D.src[m] != F.object_map[x] or D.dst[m] != G.object_map[x]:
            raise StructuralError(f"component at object {x} is not in hom(F {x}, G {x})")
    failures = []
    for f in C.morphisms:
        x, y = C.src[f], C.dst[f]
        if D.compose(G.morphism_map[f], eta.components[x]) != D.compose(eta.components[y], F.morphism_map[f]):
            failures.append(("naturality", (f, x, y)))
    return ValidationReport(tuple(failures))


# -- slices --------------------------------------------------------------------


def slice_category(C: FinCategory, X: int) -> tuple[FinCategory, FunctorData]:
    """The slice C/X and its projection to C.

    Slice objects are the morphisms into X, in ascending morphism index;
    a slice morphism ``u -> v`` is a morphism ``h`` of C with ``v∘h = u``.
    """
    objs = list(C.incoming(X))
    pos = {u: k for k, u in enumerate(objs)}
    src, dst, under = [], [], []
    index: dict[tuple[int, int], int] = {}
    for u in objs:
        for v in objs:
            for h in C.hom(C.src[u], C.src[v]):
                if C.compose(v, h) == u:
                    index[h, v] = len(under)
                    src.append(pos[u])
                    dst.append(pos[v])
                    under.append(h)
    ids = [index[C.identities[C.src[u]], u] for u in objs]
    table = {}
    for k1, h1 in enumerate(under):
        v = objs[dst[k1]]
        for k2, h2 in enumerate(under):
            if src[k2] == dst[k1]:
                w = objs[dst[k2]]
                table[k2, k1] = index[C.compose(h2, h1), w]
    names = [f"{C.morphism_label(u)}" for u in objs]
    S = FinCategory(len(objs), src, dst, ids, table, object_names=names)
    proj = FunctorData(S, C, tuple(C.src[u] for u in objs), tuple(under))
    return S, proj


def is_fully_faithful(F: FunctorData) -> bool:
    """Every induced map hom(x, y) -> hom(Fx, Fy) is a bijection."""
    C, D = F.source, F.target
    for x in C.objects:
        for y in C.objects:
            images = {F.morphism_map[f] for f in C.hom(x, y)}
            if len(images) != len(C.hom(x, y)):
                return False
            if len(images) != len(D.hom(F.object_map[x], F.object_map[y])):
                return False
    return True
