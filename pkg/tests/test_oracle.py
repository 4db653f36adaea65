import random

import pytest

from boolcert.algebra import Mode
from boolcert.errors import CapExceededError
from boolcert.oracle import (
    AuditClass,
    audit,
    audit_random,
    brute_force,
    encode_graph,
    random_system,
)
from boolcert.ring import MultilinearPoly
from boolcert.symmetry import enumerate_group, permuted_system, stabilizer

from conftest import cube, random_poly, system, variety


class TestBruteForce:
    def test_product_minus_one(self):
        for n in range(1, 6):
            f = MultilinearPoly.monomial(n, range(n)) - 1
            F = system(n, str(f))
            assert brute_force(F).points == ((1,) * n,)

    def test_nonzero_constant(self):
        assert brute_force(system(3, "1")).count == 0

    def test_two_points(self):
        assert brute_force(system(2, "x0 + x1 - 1")).points == ((0, 1), (1, 0))

    def test_matches_direct_enumeration(self, rng):
        for _ in range(40):
            n = rng.randint(1, 5)
            F = system(n, *[str(random_poly(rng, n, 4)) for _ in range(rng.randint(1, 3))])
            r = brute_force(F)
            assert list(r.points) == sorted(variety(F))
            assert r.count == len(r.points)

    def test_cap(self):
        F = system(5, "x0")
        with pytest.raises(CapExceededError):
            brute_force(F, cap=4)
        with pytest.raises(CapExceededError):
            brute_force(F, cap=21)

    def test_workers(self):
        F = system(13, "x0*x1 - x12", "x3 + x4 - 1")
        assert brute_force(F, workers=2).points == brute_force(F).points

    def test_permuted_varieties_same_size(self, rng):
        for _ in range(10):
            n = rng.randint(1, 4)
            F = system(n, *[str(random_poly(rng, n, 3)) for _ in range(2)])
            base = brute_force(F).count
            for s in enumerate_group(n):
                assert brute_force(permuted_system(F, s)).count == base


class TestGraphs:
    def test_triangle(self):
        F = encode_graph([(0, 1), (1, 2), (0, 2)], 3)
        assert set(map(str, F.polynomials)) == {"x0*x1", "x1*x2", "x0*x2"}
        assert set(brute_force(F).points) == {p for p in cube(3) if sum(p) <= 1}

    def test_path_with_size(self):
        F = encode_graph([(0, 1), (1, 2)], 3, size=2)
        assert brute_force(F).points == ((1, 0, 1),)

    def test_empty_graph(self):
        assert brute_force(encode_graph([], 3)).count == 8

    def test_invalid_edge(self):
        with pytest.raises(ValueError):
            encode_graph([(0, 3)], 3)

    def test_stabilizer_orders(self):
        stab, d = stabilizer(encode_graph([(0, 1), (1, 2), (0, 2)], 3))
        assert len(stab) == 6 and d.c == 0
        stab, d = stabilizer(encode_graph([(0, 1), (1, 2)], 3))
        assert len(stab) == 2 and d.c == 4


class TestAudit:
    def test_contradiction_sound(self):
        r = audit(system(1, "x0", "x0 - 1"))
        assert r.classification is AuditClass.SOUND and r.oracle.count == 0

    def test_symmetric_nonempty_sound(self):
        r = audit(encode_graph([(0, 1), (1, 2), (0, 2)], 3))
        assert r.verdict.c == 0 and r.classification is AuditClass.SOUND

    def test_raw_unsound_is_reported(self):
        r = audit(system(2, "3*x0 - 2*x1", "x0*x1 + 2*x1"), Mode.RAW)
        assert r.classification is AuditClass.UNSOUND

    def test_generator_is_deterministic(self):
        a = [str(random_system(random.Random(4)).polys) for _ in range(3)]
        assert len(set(a)) == 1

    def test_random_quotient_audit(self):
        classes = [r.classification for r in audit_random(100, seed=9)]
        assert AuditClass.UNSOUND not in classes
        assert classes.count(AuditClass.SOUND) > 80
