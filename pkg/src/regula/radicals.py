"""Structural normal subgroups: p-core, p'-core, solvable radical, Fitting.

Each core is the join of the normal closures of single elements whose
closure has the defining property, and the defining property is constant
on conjugacy classes, so only one representative per class is tested.
Closures are cached per representative since every core of the same
group reuses them.
"""

from __future__ import annotations

from typing import Optional

from .classes import conjugacy_classes
from .errors import RegulaError
from .numtheory import is_prime, prime_factors
from .perm_core import PermGroup

CORE_KINDS = ("p-core", "p-prime-core", "solvable-radical")


def _closure_of_rep(G: PermGroup, rep) -> PermGroup:
    cache = G._cache.setdefault("rep_closures", {})
    key = rep.images
    if key not in cache:
        cache[key] = G.normal_closure([rep])
    return cache[key]


def _is_p_group_order(order: int, p: int) -> bool:
    while order % p == 0:
        order //= p
    return order == 1


def _qualifies(N: PermGroup, kind: str, p: Optional[int]) -> bool:
    if kind == "p-core":
        return _is_p_group_order(N.order, p)
    if kind == "p-prime-core":
        return N.order % p != 0
    if kind == "solvable-radical":
        if N.is_trivial:
            return True
        flags = N._cache.get("solvable")
        if flags is None:
            flags = N.derived_series()[-1].is_trivial
            N._cache["solvable"] = flags
        return flags
    raise RegulaError(f"unknown core kind {kind!r}; one of {CORE_KINDS}")


def _order_admissible(order: int, kind: str, p: Optional[int]) -> bool:
    if kind == "p-core":
        return _is_p_group_order(order, p)
    if kind == "p-prime-core":
        return order % p != 0
    return True


def _rep_admissible(G: PermGroup, rep, kind: str, p: Optional[int]) -> bool:
    """Cheap necessary condition: rep and rep * rep^g lie in the closure,
    so their orders must already look like the target kind."""
    from .perm_core import _conj, _mult, _order_of

    if not _order_admissible(rep.order(), kind, p):
        return False
    if kind == "solvable-radical":
        return True
    x = rep.images
    xinv = rep.inverse().images
    for g, ginv in G._gen_pairs:
        xg = _conj(x, g, ginv)
        if not _order_admissible(_order_of(_mult(x, xg)), kind, p):
            return False
        if not _order_admissible(_order_of(_mult(xinv, xg)), kind, p):
            return False
    return True


def core(G: PermGroup, kind: str, p: Optional[int] = None,
         certify: bool = False) -> PermGroup:
    """Largest normal subgroup of the given kind.

    kind 'p-core' is the largest normal p-subgroup, 'p-prime-core' the
    largest normal subgroup of order coprime to p, 'solvable-radical'
    the largest normal solvable subgroup.  ``certify`` additionally
    checks normality, the defining property, and that the corresponding
    core of the quotient is trivial (doubling the cost).
    """
    if kind in ("p-core", "p-prime-core"):
        if p is None or not is_prime(p):
            raise RegulaError(f"kind {kind!r} needs a prime p")
    elif kind != "solvable-radical":
        raise RegulaError(f"unknown core kind {kind!r}; one of {CORE_KINDS}")
    key = ("core", kind, p)
    if key in G._cache:
        result = G._cache[key]
    else:
        table = conjugacy_classes(G)
        join = PermGroup([], degree=G.degree)
        for cls in table.classes:
            if join.order == G.order:
                break
            if cls.element_order == 1:
                continue
            # reps already inside the running join contribute nothing
            if join.contains(cls.representative):
                continue
            if not _rep_admissible(G, cls.representative, kind, p):
                continue
            N = _closure_of_rep(G, cls.representative)
            if _qualifies(N, kind, p):
                join = join._grown_by(N._gen_tuples)
        result = join
        G._cache[key] = result
    if certify:
        certify_core(G, result, kind, p)
    return result


def certify_core(G: PermGroup, N: PermGroup, kind: str, p: Optional[int] = None) -> None:
    """Raise unless N is normal, has the defining property, and is maximal
    with it (the same core of G/N is trivial)."""
    if not N.is_normal_in(G):
        raise RegulaError("core output is not normal")
    if not _qualifies(N, kind, p):
        raise RegulaError("core output lacks the defining property")
    if N.is_trivial:
        Q = G
    else:
        Q = G.quotient(N, index_cap=G.order)
    again = core(Q, kind, p)
    if not again.is_trivial:
        raise RegulaError("core is not maximal: the quotient has a nontrivial core")


def fitting(G: PermGroup, certify: bool = False) -> PermGroup:
    """Largest normal nilpotent subgroup: the join of the p-cores."""
    key = ("fitting",)
    if key in G._cache:
        F = G._cache[key]
    else:
        gens = []
        for p in prime_factors(G.order) or []:
            gens.extend(core(G, "p-core", p).generators)
        F = PermGroup(gens, degree=G.degree)
        G._cache[key] = F
    if certify:
        if not F.is_normal_in(G):
            raise RegulaError("Fitting subgroup is not normal")
        if not F.is_trivial and not F.lower_central_series()[-1].is_trivial:
            raise RegulaError("Fitting subgroup is not nilpotent")
        for p in prime_factors(G.order):
            if not F.contains_subgroup(core(G, "p-core", p)):
                raise RegulaError("Fitting subgroup misses a p-core")
    return F


def structure_summary(G: PermGroup) -> dict:
    """Orders of the cores, the Fitting subgroup and the derived length."""
    primes = prime_factors(G.order)
    return {
        "order": G.order,
        "degree": G.degree,
        "p_cores": {str(p): core(G, "p-core", p).order for p in primes},
        "solvable_radical": core(G, "solvable-radical").order,
        "fitting": fitting(G).order,
        "derived_length": G.derived_length(),
    }
