import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolcert.errors import AmbientMismatchError, CapExceededError, ParseError
from boolcert.oracle import encode_graph
from boolcert.ring import evaluate, parse
from boolcert.symmetry import (
    Permutation,
    PolySystem,
    apply,
    check_subgroup,
    compose,
    enumerate_group,
    invert,
    permuted_system,
    stabilizer,
)

from conftest import cube, polys, system, variety

SWAP01 = Permutation((1, 0))


def perms(n):
    return st.permutations(list(range(n))).map(lambda p: Permutation(tuple(p)))


class TestPermutation:
    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))

    def test_serialization(self):
        s = Permutation((2, 0, 1))
        assert str(s) == "[2,0,1]"
        assert Permutation.parse("[2, 0, 1]") == s
        with pytest.raises(ParseError):
            Permutation.parse("[1,1]")

    def test_compose_invert(self):
        s = Permutation((2, 0, 3, 1))
        assert compose(s, invert(s)).is_identity()
        assert compose(invert(s), s).is_identity()
        assert compose(SWAP01, SWAP01).is_identity()
        assert compose(s, Permutation((1, 0, 2, 3))).images == (0, 2, 3, 1)

    def test_size_mismatch(self):
        with pytest.raises(AmbientMismatchError):
            compose(SWAP01, Permutation.identity(3))
        with pytest.raises(AmbientMismatchError):
            apply(SWAP01, parse("x0", 3))

    def test_cayley_table_closed(self):
        group = enumerate_group(3)
        products = {compose(s, t) for s in group for t in group}
        assert products == set(group) and len(group) == 6


class TestEnumerate:
    def test_small(self):
        assert enumerate_group(1) == [Permutation((0,))]
        assert len(enumerate_group(3)) == 6

    def test_s8(self):
        g = enumerate_group(8)
        assert len(g) == 40320 == len(set(g))
        assert [p.images for p in g] == sorted(p.images for p in g)

    def test_cap(self):
        with pytest.raises(CapExceededError, match="cap 8"):
            enumerate_group(9)


class TestApply:
    def test_examples(self):
        f = parse("x0*x1 - 3*x2 + i", 3)
        assert apply(Permutation.identity(3), f) == f
        assert apply(SWAP01, parse("x0 - x1", 2)) == parse("x1 - x0", 2)

    @given(st.data())
    def test_left_action_law(self, data):
        s, t = data.draw(perms(4)), data.draw(perms(4))
        f = data.draw(polys(4))
        assert apply(compose(s, t), f) == apply(s, apply(t, f))

    @given(st.data())
    def test_evaluation_substitutes_permuted_point(self, data):
        s = data.draw(perms(4))
        f = data.draw(polys(4))
        for b in cube(4):
            assert evaluate(apply(s, f), b) == evaluate(f, s.act_on_point(b))


class TestPermutedSystem:
    def test_examples(self):
        F = system(2, "x0 - x1", "x0*x1")
        assert permuted_system(F, Permutation.identity(2)) == F
        G = permuted_system(system(2, "x0 - x1"), SWAP01)
        assert G.polynomials == [parse("x1 - x0", 2)] and G.names == ["f0"]

    @given(st.data())
    def test_involution_twice_is_identity(self, data):
        n = 4
        i, j = data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, n - 1))
        if i == j:
            return
        tau = Permutation.transposition(n, i, j)
        F = PolySystem.of(n, data.draw(st.lists(polys(n), min_size=1, max_size=3)))
        assert permuted_system(permuted_system(F, tau), tau) == F


class TestStabilizer:
    def test_triangle(self):
        F = system(3, "x0*x1", "x1*x2", "x0*x2")
        stab, d = stabilizer(F)
        assert len(stab) == 6 and d.c == 0

    def test_difference(self):
        stab, d = stabilizer(system(2, "x0 - x1"))
        assert stab == [Permutation.identity(2)]
        assert d.members == (SWAP01,) and d.c == 1

    def test_path(self):
        stab, d = stabilizer(system(3, "x0*x1", "x1*x2"))
        assert stab == [Permutation.identity(3), Permutation((2, 1, 0))]
        assert d.c == 4

    def test_names_ignored_and_set_semantics(self):
        # duplicate members collapse; names play no role
        F = PolySystem(2, (("a", parse("x0", 2)), ("b", parse("x0", 2)), ("c", parse("x1", 2))))
        stab, d = stabilizer(F)
        assert len(stab) == 2

    def test_scalar_multiples_are_different(self):
        stab, _ = stabilizer(system(2, "x0 - x1"))
        assert len(stab) == 1  # x1 - x0 = -(x0 - x1) does not count

    def test_brute_force_agrees(self, rng):
        from conftest import random_poly

        for _ in range(40):
            n = rng.randint(1, 4)
            F = PolySystem.of(n, [random_poly(rng, n, 3) for _ in range(rng.randint(1, 3))])
            stab, d = stabilizer(F)
            target = set(F.polynomials)
            expected = [s for s in enumerate_group(n) if {apply(s, f) for f in F.polynomials} == target]
            assert stab == expected
            assert len(stab) + d.c == math.factorial(n)
            assert not set(stab) & set(d.members)

    def test_subgroup_and_equivariance(self, rng):
        from conftest import random_poly

        for _ in range(40):
            n = rng.randint(1, 4)
            F = PolySystem.of(n, [random_poly(rng, n, 3) for _ in range(rng.randint(1, 3))])
            stab, _ = stabilizer(F)
            check_subgroup(stab, n)
            Z = variety(F)
            for s in stab:
                for b in Z:
                    assert s.act_on_point(b) in Z

    def test_contains_graph_automorphisms(self):
        edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
        F = encode_graph(edges, 4)
        stab, _ = stabilizer(F)
        edge_set = {frozenset(e) for e in edges}
        aut = [
            s for s in enumerate_group(4)
            if {frozenset((s(i), s(j))) for i, j in edges} == edge_set
        ]
        assert set(aut) <= set(stab) and len(aut) == 8

    def test_cap(self):
        F = system(9, "x0")
        with pytest.raises(CapExceededError):
            stabilizer(F)

    def test_workers_do_not_change_result(self):
        F = system(7, "x0*x1 + x2", "x3 - x4*x5*x6")
        assert stabilizer(F, workers=2) == stabilizer(F)

    def test_check_subgroup_rejects(self):
        from boolcert.errors import CertificateError

        with pytest.raises(CertificateError):
            check_subgroup([Permutation.identity(3), Permutation((1, 2, 0))], 3)


def test_group_cap_has_hard_ceiling():
    from boolcert.errors import CapExceededError
    from boolcert.ring import parse
    from boolcert.symmetry import PolySystem

    with pytest.raises(CapExceededError):
        stabilizer(PolySystem.of(2, [parse("x0", 2)]), cap=11)
