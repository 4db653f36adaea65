"""Acceptance suite: one test per criterion, each timed against its budget.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per
criterion.
"""

import io
import itertools
import json
import math
import os
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

from boolcert.algebra import Mode, PlainPoly, eliminate_univariate
from boolcert.certificate import VerdictTag, build_matrix
from boolcert.cli import SCHEMAS, load_schema, run
from boolcert.oracle import AuditClass, audit_random, brute_force, encode_graph, random_system
from boolcert.ring import ZERO, GaussianRational, MultilinearPoly, evaluate, format_poly, parse
from boolcert.saturation import build_g, term_bound
from boolcert.symmetry import Permutation, PolySystem, apply, compose, enumerate_group, stabilizer
from boolcert.sysfile import format_system, parse_system, read_system
from conftest import cube, random_poly, variety

CORPUS = Path(__file__).parent / "corpus"


@contextmanager
def criterion(number, title, limit):
    start = time.perf_counter()
    notes = []
    try:
        yield notes
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        print(f"\n[criterion {number}] FAIL  {title}  ({elapsed:.2f}s / {limit}s): {exc}")
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < limit
    extra = ("  " + "; ".join(notes)) if notes else ""
    print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s / {limit}s){extra}")
    assert ok, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"


def systems(seed, count, max_vars=4):
    rng = random.Random(seed)
    return [random_system(rng, max_vars=max_vars) for _ in range(count)]


# --------------------------------------------------------------------------


def _plain_eval(p, point):
    total = ZERO
    for e, c in p.terms.items():
        if all(point[j] or not a for j, a in enumerate(e)):
            total = total + c
    return total


def _random_plain(rng, n, max_terms):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[tuple(rng.choice((0, 0, 1, 2, 3)) for _ in range(n))] = rng.choice(
            [1, -1, 2, GaussianRational(0, 1), GaussianRational("1/3", -2)]
        )
    return PlainPoly(n, terms)


def test_criterion_1_ring():
    rng = random.Random(1001)
    with criterion(1, "ring axioms and reduction/evaluation commutation", 10) as notes:
        checked = 0
        for _ in range(1000):
            n = rng.randint(0, 6)
            f, g, h = (random_poly(rng, n, 20) for _ in range(3))
            zero, one = MultilinearPoly.zero(n), MultilinearPoly.constant(n, 1)
            assert f + g == g + f and f * g == g * f
            assert (f + g) + h == f + (g + h)
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h
            assert f + zero == f and f * one == f and f * zero == zero
            assert f + (-f) == zero and f - g == f + (-g)
            for j in range(n):
                x = MultilinearPoly.variable(n, j)
                assert x * x == x
            fg, fpg = f * g, f + g
            for b in cube(n):
                fb, gb = evaluate(f, b), evaluate(g, b)
                assert evaluate(fg, b) == fb * gb
                assert evaluate(fpg, b) == fb + gb
            p, q = _random_plain(rng, n, 6), _random_plain(rng, n, 6)
            assert (p * q).reduce() == p.reduce() * q.reduce()
            assert (p + q).reduce() == p.reduce() + q.reduce()
            for b in cube(n):
                assert evaluate(p.reduce(), b) == _plain_eval(p, b)
            checked += 1
        notes.append(f"{checked} triples")


def test_criterion_2_action_law():
    rng = random.Random(1002)
    group = enumerate_group(4)
    assert len(group) == 24
    fs = [random_poly(rng, 4, 12) for _ in range(50)]
    with criterion(2, "apply(compose(s,t), f) = apply(s, apply(t, f)) over Sigma_4", 10) as notes:
        images = {(s, id(f)): apply(s, f) for s in group for f in fs}
        count = 0
        for f in fs:
            for s, t in itertools.product(group, repeat=2):
                lhs = apply(compose(s, t), f)
                rhs = apply(s, images[(t, id(f))])
                assert lhs == rhs, (s, t, f)
                count += 1
        notes.append(f"{count} identities")


def test_criterion_3_stabilizer():
    with criterion(3, "stabilizer subgroup, order split, Z(F) closure, graph encodings", 5) as notes:
        cases = systems(1003, 150) + [
            encode_graph([(0, 1), (1, 2), (0, 2)], 3),
            encode_graph([(0, 1), (1, 2)], 3),
            encode_graph([(0, 1), (1, 2), (2, 3)], 4, size=2),
        ]
        for f_sys in cases:
            n = f_sys.ambient_n
            stab, destab = stabilizer(f_sys)
            members = set(stab)
            assert Permutation.identity(n) in members
            for s, t in itertools.product(stab, repeat=2):
                assert compose(s, t) in members
            assert len(stab) + destab.c == math.factorial(n)
            assert members.isdisjoint(destab.members)
            zf = variety(f_sys)
            for s in stab:
                assert {s.act_on_point(b) for b in zf} == zf
        _, tri = stabilizer(encode_graph([(0, 1), (1, 2), (0, 2)], 3))
        assert tri.stab_order == 6 and tri.c == 0
        _, path = stabilizer(encode_graph([(0, 1), (1, 2)], 3))
        assert path.stab_order == 2 and path.c == 4
        notes.append(f"{len(cases)} systems; triangle |Stab|=6; path |Stab|=2, c=4")


def test_criterion_4_symmetrized_products():
    with criterion(4, "symmetrized product vanishing and term bound", 60) as notes:
        worst = 0.0
        for f_sys in systems(1004, 200):
            _, destab = stabilizer(f_sys)
            sat = build_g(f_sys, destab)
            for f, g in zip(f_sys.polynomials, sat.g_polys):
                g.check_invariants()
                bound = term_bound(f.term_count, destab.c)
                assert g.term_count <= bound
                worst = max(worst, g.term_count / bound)
                for b in cube(f_sys.ambient_n):
                    if destab.c:
                        any_zero = any(not evaluate(f, s.act_on_point(b)) for s in destab.members)
                    else:
                        any_zero = not evaluate(f, b)
                    assert (not evaluate(g, b)) == any_zero
        notes.append(f"largest terms/bound ratio {worst:.3f}")


def test_criterion_5_elimination():
    with criterion(5, "cofactor identities, root set = projection of Z(G), p=1 iff Z(G) empty", 120) as notes:
        units = raw_found = 0
        for f_sys in systems(1005, 200):
            n = f_sys.ambient_n
            _, destab = stabilizer(f_sys)
            sat = build_g(f_sys, destab)
            var = 0 if n == 1 else random.Random(n * 7 + f_sys.K).randrange(n)
            res = eliminate_univariate(sat, var=var, mode=Mode.QUOTIENT)
            total = MultilinearPoly.zero(n)
            for h, g in zip(res.cofactors, sat.g_polys):
                total = total + h * g
            assert res.verified and total == res.p.to_multilinear(n)
            zg = variety(sat.as_system())
            roots = {int(GaussianRational.coerce(b).re) for b in res.beta}
            assert all(GaussianRational.coerce(b).is_boolean() for b in res.beta)
            assert roots == {b[var] for b in zg}
            assert res.p.is_one() == (not zg)
            units += res.p.is_one()
            raw = eliminate_univariate(sat, var=var, mode=Mode.RAW)
            if raw.p is not None:
                plain_total = PlainPoly(n)
                for h, g in zip(raw.cofactors, sat.g_polys):
                    plain_total = plain_total + h * PlainPoly.from_multilinear(g)
                assert plain_total == raw.p.to_plain(n)
                raw_found += 1
        notes.append(f"{units} unit ideals; {raw_found} RAW results re-verified")


def test_criterion_6_zero_columns():
    with criterion(6, "zero column iff permuted point solves F, all beta", 120) as notes:
        checked = skipped = 0
        for f_sys in systems(1006, 200):
            _, destab = stabilizer(f_sys)
            if destab.c == 0:
                skipped += 1
                continue
            matrix = build_matrix(f_sys, destab)
            zf = variety(f_sys)
            for beta in cube(f_sys.ambient_n):
                cols = set(matrix.zero_columns(beta))
                expected = {j for j, s in enumerate(destab.members) if s.act_on_point(beta) in zf}
                assert cols == expected
            checked += 1
        notes.append(f"{checked} systems checked, {skipped} with c=0 have no matrix")


def test_criterion_7_end_to_end():
    with criterion(7, "end-to-end QUOTIENT audit, 500 systems", 300) as notes:
        tally = {tag: 0 for tag in VerdictTag}
        gap_empty = 0
        for rep in audit_random(500, 20261014, Mode.QUOTIENT):
            f_sys, verdict = rep.system, rep.verdict
            assert f_sys.ambient_n <= 4 and f_sys.K <= 3
            assert all(f.term_count <= 3 for f in f_sys.polynomials)
            assert rep.classification is not AuditClass.UNSOUND, rep.to_json()
            zf = variety(f_sys)
            if verdict.tag is VerdictTag.SOLUTION_FOUND:
                assert tuple(verdict.witness) in zf
            elif verdict.tag is VerdictTag.NO_SOLUTION_CERTIFIED:
                assert not zf
            else:
                gap_empty += not zf
            tally[verdict.tag] += 1
        inconclusive = tally[VerdictTag.INCONCLUSIVE]
        notes.append(
            f"SOLUTION_FOUND {tally[VerdictTag.SOLUTION_FOUND]}, "
            f"NO_SOLUTION_CERTIFIED {tally[VerdictTag.NO_SOLUTION_CERTIFIED]}, "
            f"INCONCLUSIVE {inconclusive} ({inconclusive / 5:.1f}%, {gap_empty} with empty Z(F)), UNSOUND 0"
        )


def test_criterion_8_performance():
    with criterion(8, "brute force at N=16 and a full Sigma_8 scan", 65) as notes:
        n = 16
        f = parse("x0*x1 - x2*x3 + x15", n)
        start = time.perf_counter()
        report = brute_force(PolySystem.of(n, [f]))
        brute_time = time.perf_counter() - start
        assert report.count == sum(1 for b in itertools.product((0, 1), repeat=4) for z in (0, 1)
                                   if b[0] * b[1] - b[2] * b[3] + z == 0) * 2 ** 11
        assert brute_time < 5, f"brute force took {brute_time:.2f}s"
        g_sys = PolySystem.of(8, [parse("x0*x1 + x2*x3 - x4", 8), parse("x5 + x6*x7 - 1", 8)])
        start = time.perf_counter()
        stab, destab = stabilizer(g_sys)
        stab_time = time.perf_counter() - start
        assert len(stab) + destab.c == math.factorial(8)
        assert stab_time < 60, f"stabilizer took {stab_time:.2f}s"
        notes.append(f"brute {brute_time:.2f}s (< 5s); Sigma_8 scan {stab_time:.2f}s (< 60s), |Stab|={len(stab)}")


def _validator(name):
    registry = Registry().with_resources(
        (f"{s}.schema.json", Resource.from_contents(load_schema(s))) for s in SCHEMAS
    )
    return jsonschema.Draft202012Validator(load_schema(name), registry=registry)


def _cli(*argv):
    out = io.StringIO()
    code = run([str(a) for a in argv], out=out)
    return code, out.getvalue()


def test_criterion_9_interfaces():
    with criterion(9, "corpus round-trip, schema validation, byte-identical reruns", 120) as notes:
        files = sorted(CORPUS.glob("*.txt"))
        assert len(files) == 50
        validators = {name: _validator(name) for name in SCHEMAS}
        first = {}
        for path in files:
            f_sys = read_system(path)
            text = format_system(f_sys)
            again = parse_system(text)
            assert again == f_sys and format_system(again) == text
            for f in f_sys.polynomials:
                assert parse(format_poly(f), f_sys.ambient_n) == f
            for cmd, schema in [
                ("parse", "parse"), ("stab", "stab"), ("saturate", "saturate"),
                ("eliminate", "elimination"), ("certify", "verdict"), ("brute", "brute"),
            ]:
                code, out = _cli(cmd, path, "--json")
                assert code == 0, (cmd, path)
                validators[schema].validate(json.loads(out))
                first[(cmd, path)] = out
            code, out = _cli("check", path)
            assert code == 0
            validators["audit"].validate(json.loads(out))
        for (cmd, path), out in first.items():
            assert _cli(cmd, path, "--json")[1] == out
        code, jsonl = _cli("check", "--random", "100", "--seed", "9")
        assert code == 0
        for line in jsonl.splitlines():
            validators["audit"].validate(json.loads(line))
        outputs = set()
        for hashseed in ("0", "1", "12345"):
            env = dict(os.environ, PYTHONHASHSEED=hashseed)
            proc = subprocess.run(
                [sys.executable, "-m", "boolcert", "check", "--random", "100", "--seed", "9"],
                capture_output=True, env=env, check=False,
            )
            assert proc.returncode == 0, proc.stderr
            outputs.add(proc.stdout)
        assert outputs == {jsonl.encode()}
        notes.append(f"{len(files)} files x 7 commands validated; reruns identical under 3 hash seeds")
