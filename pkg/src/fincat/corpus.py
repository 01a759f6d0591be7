"""Generators for the structured families of small categories used as test corpus."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any, Optional

from .core import FinCategory, FinCatError


class GeneratorBoundsError(FinCatError, ValueError):
    pass


def _bound(name: str, value: int, lo: int, hi: int) -> int:
    if not isinstance(value, int) or not lo <= value <= hi:
        raise GeneratorBoundsError(f"{name} must be an integer in [{lo}, {hi}], got {value!r}")
    return value


def reflexive_transitive_closure(n: int, covers: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
    up: list[set[int]] = [set() for _ in range(n)]
    for a, b in covers:
        if not (0 <= a < n and 0 <= b < n):
            raise GeneratorBoundsError(f"cover ({a}, {b}) out of range")
        up[a].add(b)
    leq = set()
    for a in range(n):
        seen, stack = {a}, [a]
        while stack:
            for b in up[stack.pop()]:
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        leq.update((a, b) for b in seen)
    return leq


def poset_category(n: int, leq: Iterable[tuple[int, int]], names: Optional[Sequence[str]] = None) -> FinCategory:
    """The category of a preorder given by its (reflexive, transitive) relation.

    Morphisms are the pairs ``x <= y`` in lexicographic order.
    """
    pairs = sorted(set(leq))
    index = {p: k for k, p in enumerate(pairs)}
    src = [a for a, _ in pairs]
    dst = [b for _, b in pairs]
    ids = [index[x, x] for x in range(n)]
    table = {}
    for (y, z), g in index.items():
        for x in range(n):
            f = index.get((x, y))
            if f is not None:
                table[g, f] = index[x, z]
    return FinCategory(n, src, dst, ids, table, object_names=names)


def gen_poset_from_covers(n: int, covers: Iterable[tuple[int, int]], names: Optional[Sequence[str]] = None) -> FinCategory:
    leq = reflexive_transitive_closure(n, covers)
    for a, b in leq:
        if a != b and (b, a) in leq:
            raise GeneratorBoundsError(f"cover relation has a cycle through {a} and {b}")
    return poset_category(n, leq, names)


def gen_chain(n: int) -> FinCategory:
    _bound("chain length", n, 1, 16)
    return poset_category(n, [(a, b) for a in range(n) for b in range(a, n)])


def gen_terminal() -> FinCategory:
    return gen_chain(1)


def gen_boolean_algebra(k: int) -> FinCategory:
    """Subsets of {1..k} ordered by inclusion; object index = bitmask."""
    _bound("Boolean algebra exponent", k, 0, 4)
    n = 1 << k
    names = ["{" + ",".join(str(i + 1) for i in range(k) if s >> i & 1) + "}" for s in range(n)]
    return poset_category(n, [(s, t) for s in range(n) for t in range(n) if s & t == s], names)


def gen_divisor_lattice(n: int) -> FinCategory:
    _bound("divisor lattice argument", n, 1, 10**6)
    divs = [d for d in range(1, n + 1) if n % d == 0]
    leq = [(i, j) for i, a in enumerate(divs) for j, b in enumerate(divs) if b % a == 0]
    return poset_category(len(divs), leq, [str(d) for d in divs])


def gen_m3() -> FinCategory:
    """The diamond lattice: bottom < a, b, c < top."""
    return gen_poset_from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], ["bot", "a", "b", "c", "top"])


def gen_n5() -> FinCategory:
    """The pentagon lattice: 0 < a < b < 1 and 0 < c < 1."""
    return gen_poset_from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], ["0", "a", "b", "c", "1"])


# -- Boolean matrices ----------------------------------------------------------


class BoolMatrixCategory(FinCategory):
    """Objects 0..n; a morphism m -> k is a k×m matrix over the Boolean semiring.

    Within hom(m, k) matrices are ordered by their bit code, entry (r, c)
    contributing bit ``r*m + c``; homs are laid out by (src, dst).
    Composition is the OR-AND matrix product.
    """

    def __init__(self, n: int):
        self.bound = n
        self.matrices: list[tuple[tuple[int, ...], ...]] = []
        self._offset: dict[tuple[int, int], int] = {}
        src, dst = [], []
        for m in range(n + 1):
            for k in range(n + 1):
                self._offset[m, k] = len(self.matrices)
                for code in range(1 << (m * k)):
                    self.matrices.append(
                        tuple(tuple(code >> (r * m + c) & 1 for c in range(m)) for r in range(k))
                    )
                    src.append(m)
                    dst.append(k)
        ids = [self.index_of([[int(r == c) for c in range(m)] for r in range(m)], m) for m in range(n + 1)]
        names = [_matrix_name(M) for M in self.matrices]
        super().__init__(n + 1, src, dst, ids, self._product, morphism_names=names, check=False)

    def index_of(self, M: Sequence[Sequence[int]], cols: Optional[int] = None) -> int:
        """Morphism index of matrix ``M``; ``cols`` is needed when M has no rows."""
        k = len(M)
        m = len(M[0]) if k else cols
        if m is None:
            raise ValueError("a matrix with no rows needs an explicit column count")
        code = 0
        for r in range(k):
            for c in range(m):
                if M[r][c]:
                    code |= 1 << (r * m + c)
        return self._offset[m, k] + code

    def _product(self, g: int, f: int) -> int:
        G, F = self.matrices[g], self.matrices[f]
        m, mid, k = self.src[f], self.dst[f], self.dst[g]
        code = 0
        for r in range(k):
            for c in range(m):
                if any(G[r][t] and F[t][c] for t in range(mid)):
                    code |= 1 << (r * m + c)
        return self._offset[m, k] + code


def _matrix_name(M) -> str:
    if not M or not M[0]:
        return "[]"
    return "[" + ";".join(" ".join(map(str, row)) for row in M) + "]"


def gen_bool_matrix(n: int) -> BoolMatrixCategory:
    _bound("matrix bound", n, 0, 4)
    return BoolMatrixCategory(n)


# -- one-object categories -----------------------------------------------------


def monoid_category(elements: int, mult, identity: int = 0, names: Optional[Sequence[str]] = None) -> FinCategory:
    """One-object category whose morphisms are monoid elements; ``g∘f = mult(g, f)``."""
    table = {(g, f): mult(g, f) for g in range(elements) for f in range(elements)}
    return FinCategory(1, [0] * elements, [0] * elements, [identity], table, morphism_names=names)


def gen_cyclic_group(n: int) -> FinCategory:
    _bound("group order", n, 1, 16)
    return monoid_category(n, lambda g, f: (g + f) % n, 0, [f"g{k}" for k in range(n)])


# -- corpus specs --------------------------------------------------------------


GENERATORS = {
    "chain": (gen_chain, ["n"]),
    "boolean": (gen_boolean_algebra, ["k"]),
    "divisor": (gen_divisor_lattice, ["n"]),
    "m3": (gen_m3, []),
    "n5": (gen_n5, []),
    "terminal": (gen_terminal, []),
    "bool-matrix": (gen_bool_matrix, ["n"]),
    "cyclic": (gen_cyclic_group, ["n"]),
    "poset": (gen_poset_from_covers, ["n", "covers"]),
}

ALIASES = {"boolean-algebra": "boolean", "bool_matrix": "bool-matrix", "boolmatrix": "bool-matrix"}

POSET_FAMILIES = {"chain", "boolean", "divisor", "m3", "n5", "terminal", "poset"}


@dataclass
class CorpusSpec:
    family: str
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.family = ALIASES.get(self.family, self.family)

    @property
    def name(self) -> str:
        if not self.params:
            return self.family
        if self.family == "file":
            return f"file:{self.params.get('path')}"
        return self.family + "(" + ",".join(f"{v}" for k, v in self.params.items() if k != "covers") + ")"

    def build(self) -> FinCategory:
        if self.family == "file":
            from .serialize import load_category

            return load_category(self.params["path"], validate=False)
        try:
            gen, argnames = GENERATORS[self.family]
        except KeyError:
            raise GeneratorBoundsError(f"unknown generator family {self.family!r}") from None
        kwargs = dict(self.params)
        if "covers" in kwargs:
            kwargs["covers"] = [tuple(c) for c in kwargs["covers"]]
        return gen(**kwargs)

    def to_dict(self) -> dict:
        return {"family": self.family, "params": dict(self.params)}


def default_corpus() -> list[CorpusSpec]:
    return [
        CorpusSpec("chain", {"n": 1}),
        CorpusSpec("chain", {"n": 2}),
        CorpusSpec("chain", {"n": 3}),
        CorpusSpec("boolean", {"k": 1}),
        CorpusSpec("boolean", {"k": 2}),
        CorpusSpec("divisor", {"n": 12}),
        CorpusSpec("m3"),
        CorpusSpec("n5"),
        CorpusSpec("terminal"),
        CorpusSpec("bool-matrix", {"n": 2}),
    ]
