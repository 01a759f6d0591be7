"""A fixed list of single-component mutations of valid monoidal data.

Every entry breaks at least one axiom; the reason is recorded next to each
family.  Poset mutations retype a component (hom-sets have at most one
element).  One-object mutations are judged by additive arithmetic in Z/n,
independently of the validators.
"""

from dataclasses import dataclass
from typing import Any, Callable

from fincat.corpus import gen_bool_matrix, gen_boolean_algebra, gen_chain, gen_cyclic_group, gen_m3, gen_n5
from fincat.limits import build_limit_cache
from fincat.monoidal import (
    MonoidalNatData,
    cartesian_monoidal,
    cocartesian_monoidal,
    commutative_monoid_monoidal,
    identity_monoidal_functor,
    identity_monoidal_nat,
    kronecker_monoidal,
    tensor_strong_monoidal,
    validate_braiding,
    validate_monoidal,
    validate_monoidal_functor,
    validate_monoidal_nat,
)


@dataclass
class Mutation:
    label: str
    validator: Callable[[Any], Any]
    mutant: Any


def monoidal_checks(M):
    """validate_monoidal, then validate_braiding once the monoidal part passes."""
    rep = validate_monoidal(M)
    if rep.ok and M.braiding is not None:
        rep = validate_braiding(M)
    return rep


def poset_structures():
    out = []
    for name, C in [("chain2", gen_chain(2)), ("chain3", gen_chain(3)), ("b2", gen_boolean_algebra(2)),
                    ("m3", gen_m3()), ("n5", gen_n5())]:
        cache = build_limit_cache(C)
        out.append((f"{name}-cartesian", cartesian_monoidal(C, cache)))
        out.append((f"{name}-cocartesian", cocartesian_monoidal(C, cache)))
    return out


def one_object_structures():
    return [(f"z{n}", commutative_monoid_monoidal(gen_cyclic_group(n))) for n in (2, 3, 4)]


def _other(C, m):
    return (m + 1) % C.n_morphisms


def cyclic_axioms_hold(n, a, lam, rho, gam):
    """Additive form of pentagon, triangle and hexagons for a one-object strict tensor."""
    pentagon = (3 * a - 2 * a) % n == 0
    triangle = (lam + a - rho) % n == 0
    hexagon1 = (2 * a + gam - (2 * gam + a)) % n == 0
    hexagon2 = (-2 * a + gam - (2 * gam - a)) % n == 0
    return pentagon and triangle and hexagon1 and hexagon2


def build_mutations():
    muts = []
    for name, M in poset_structures():
        C = M.category
        for table in ("associator", "left_unitor", "right_unitor", "braiding"):
            keys = sorted(getattr(M, table))
            for key in (keys[0], keys[len(keys) // 2], keys[-1]):
                bad = _other(C, getattr(M, table)[key])
                muts.append(Mutation(f"{name}:{table}{key}->{bad}", monoidal_checks,
                                     M.with_component(table, key, bad)))
    for name, M in one_object_structures():
        n = M.category.n_morphisms
        for table, key in (("associator", (0, 0, 0)), ("left_unitor", 0), ("right_unitor", 0), ("braiding", (0, 0))):
            for g in range(1, n):
                vals = {"associator": 0, "left_unitor": 0, "right_unitor": 0, "braiding": 0, table: g}
                assert not cyclic_axioms_hold(n, vals["associator"], vals["left_unitor"],
                                              vals["right_unitor"], vals["braiding"])
                muts.append(Mutation(f"{name}:{table}->{g}", monoidal_checks, M.with_component(table, key, g)))
        ts = tensor_strong_monoidal(M)
        key = next(iter(ts.phi))
        for g in range(1, n):
            # unit coherence of ⊗ reads φ + φ0 = 0 in Z/n
            muts.append(Mutation(f"{name}:tensor-phi->{g}", validate_monoidal_functor, ts.with_phi(key, g)))
            muts.append(Mutation(f"{name}:tensor-phi0->{g}", validate_monoidal_functor,
                                 _replace_phi0(ts, g)))
    K = kronecker_monoidal(gen_bool_matrix(1))
    Kc = K.category
    zero11 = Kc.index_of([[0]])
    for table, key in (("associator", (1, 1, 1)), ("left_unitor", 1), ("right_unitor", 1), ("braiding", (1, 1))):
        muts.append(Mutation(f"kronecker:{table}->[0]", monoidal_checks, K.with_component(table, key, zero11)))
    Id = identity_monoidal_functor(K)
    muts.append(Mutation("kronecker:id-phi0->[0]", validate_monoidal_functor, _replace_phi0(Id, zero11)))
    muts.append(Mutation("kronecker:id-phi(1,1)->[0]", validate_monoidal_functor, Id.with_phi((1, 1), zero11)))
    nat = identity_monoidal_nat(Id)
    muts.append(Mutation("kronecker:nat-target-phi0->[0]", validate_monoidal_nat,
                         MonoidalNatData(nat.nat, nat.source, _replace_phi0(Id, zero11))))
    for name, M in [p for p in poset_structures() if p[0] in ("chain2-cartesian", "b2-cocartesian")]:
        ts = tensor_strong_monoidal(M)
        C = M.category
        for key in sorted(ts.phi)[:3]:
            muts.append(Mutation(f"{name}:tensor-phi{key}", validate_monoidal_functor,
                                 ts.with_phi(key, _other(C, ts.phi[key]))))
        muts.append(Mutation(f"{name}:tensor-phi0", validate_monoidal_functor, _replace_phi0(ts, _other(C, ts.phi0))))
    return muts


def _replace_phi0(Fh, value):
    from dataclasses import replace

    return replace(Fh, phi0=value)


def unmutated():
    """The valid originals the mutations are drawn from, with their validators."""
    out = [(name, monoidal_checks, M) for name, M in poset_structures() + one_object_structures()]
    K = kronecker_monoidal(gen_bool_matrix(1))
    out.append(("kronecker", monoidal_checks, K))
    for name, M in poset_structures()[:4] + one_object_structures() + [("kronecker", K)]:
        out.append((f"{name}:tensor", validate_monoidal_functor, tensor_strong_monoidal(M)))
    Id = identity_monoidal_functor(K)
    out.append(("kronecker:id", validate_monoidal_functor, Id))
    out.append(("kronecker:id-nat", validate_monoidal_nat, identity_monoidal_nat(Id)))
    return out
