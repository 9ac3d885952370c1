import pytest

import oracles
from regula import PermGroup, Permutation, RegulaError
from regula.classes import conjugacy_classes
from regula.constructors import (
    affine_semilinear,
    alternating,
    cyclic,
    dihedral,
    symmetric,
    wreath,
)
from regula.numtheory import prime_factors
from regula.radicals import certify_core, core, fitting, structure_summary


def oracle_core(G, kind, p=None):
    """Join of qualifying single-element normal closures, fully set-based."""
    gens = [g.images for g in G.generators]
    elems = oracles.closure(gens) or {tuple(range(G.degree))}
    classes = oracles.conj_classes(elems, gens)
    member = set()
    for cls in classes:
        rep = min(cls)
        if oracles.order_of(rep) == 1:
            continue
        closure = oracles.normal_closure_set(None, rep, gens)
        n = len(closure)
        if kind == "p-core":
            ok = oracles.is_p_group_order(n, p)
        elif kind == "p-prime-core":
            ok = n % p != 0
        elif kind == "solvable-radical":
            ok = oracles.solvable_set(closure)
        elif kind == "fitting":
            ok = oracles.nilpotent_set(closure)
        else:
            raise ValueError(kind)
        if ok:
            member |= closure
    if not member:
        return 1
    return len(oracles.closure(sorted(member)))


SMALL_CORPUS = [
    ("S(4)", symmetric(4)),
    ("S(5)", symmetric(5)),
    ("A(4)", alternating(4)),
    ("A(5)", alternating(5)),
    ("D(4)", dihedral(4)),
    ("D(6)", dihedral(6)),
    ("C(12)", cyclic(12)),
    ("AGL1(5)", affine_semilinear(5, 1, False)),
    ("AGammaL1(4)", affine_semilinear(2, 2, True)),
    ("wr(C2,S3)", wreath(cyclic(2), symmetric(3))),
]


class TestCoreExamples:
    def test_s4_two_core(self):
        assert core(symmetric(4), "p-core", 2, certify=True).order == 4

    def test_s5_radical_trivial(self):
        assert core(symmetric(5), "solvable-radical", certify=True).is_trivial

    def test_agl15(self):
        G = affine_semilinear(5, 1, False)
        assert core(G, "p-core", 5, certify=True).order == 5
        assert core(G, "solvable-radical", certify=True).order == 20

    def test_p_prime_core(self):
        G = affine_semilinear(5, 1, False)
        assert core(G, "p-prime-core", 2, certify=True).order == 5
        assert core(symmetric(4), "p-prime-core", 3, certify=True).order == 4

    def test_requires_prime(self):
        with pytest.raises(RegulaError):
            core(symmetric(4), "p-core")
        with pytest.raises(RegulaError):
            core(symmetric(4), "p-core", 6)
        with pytest.raises(RegulaError):
            core(symmetric(4), "nilradical")


class TestFittingExamples:
    def test_s4(self):
        assert fitting(symmetric(4), certify=True).order == 4

    def test_a5_trivial(self):
        assert fitting(alternating(5), certify=True).is_trivial

    def test_c12_whole(self):
        assert fitting(cyclic(12), certify=True).order == 12


class TestOracleEquivalence:
    @pytest.mark.parametrize("name,G", SMALL_CORPUS, ids=[n for n, _ in SMALL_CORPUS])
    def test_cores_match_brute_force(self, name, G):
        for p in prime_factors(G.order):
            assert core(G, "p-core", p).order == oracle_core(G, "p-core", p)
            assert core(G, "p-prime-core", p).order == oracle_core(G, "p-prime-core", p)
        assert core(G, "solvable-radical").order == oracle_core(G, "solvable-radical")

    @pytest.mark.parametrize("name,G", SMALL_CORPUS, ids=[n for n, _ in SMALL_CORPUS])
    def test_fitting_matches_brute_force(self, name, G):
        assert fitting(G).order == oracle_core(G, "fitting")


class TestMaximality:
    @pytest.mark.parametrize("name,G", SMALL_CORPUS, ids=[n for n, _ in SMALL_CORPUS])
    def test_quotient_cores_trivial(self, name, G):
        for p in prime_factors(G.order):
            certify_core(G, core(G, "p-core", p), "p-core", p)
        certify_core(G, core(G, "solvable-radical"), "solvable-radical")

    def test_fitting_contains_p_cores(self):
        for name, G in SMALL_CORPUS:
            F = fitting(G)
            for p in prime_factors(G.order):
                assert F.contains_subgroup(core(G, "p-core", p))


class TestSummary:
    def test_s4_summary(self):
        s = structure_summary(symmetric(4))
        assert s["order"] == 24
        assert s["p_cores"] == {"2": 4, "3": 1}
        assert s["solvable_radical"] == 24
        assert s["fitting"] == 4
        assert s["derived_length"] == 3

    def test_a5_summary(self):
        s = structure_summary(alternating(5))
        assert s["solvable_radical"] == 1
        assert s["fitting"] == 1
        assert s["derived_length"] is None
