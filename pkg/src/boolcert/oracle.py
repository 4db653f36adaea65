"""Ground truth by exhaustive evaluation on the Boolean cube, plus test-system generators."""

from __future__ import annotations

import enum
import itertools
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .algebra import Mode
from .certificate import Verdict, VerdictTag, certify
from .errors import CapExceededError, CertificateError
from .ring import GaussianRational, MultilinearPoly, evaluate
from .symmetry import PolySystem

DEFAULT_CUBE_CAP = 16
HARD_CUBE_CAP = 20


@dataclass(frozen=True)
class VarietyReport:
    points: tuple
    count: int
    elapsed: float

    def to_json(self, timing: bool = False) -> dict:
        out = {"count": self.count, "points": [list(p) for p in self.points]}
        if timing:
            out["elapsed"] = self.elapsed
        return out


def _mask_point(mask: int, n: int) -> tuple:
    # lexicographic order on tuples puts x0 in the most significant place
    return tuple((mask >> (n - 1 - j)) & 1 for j in range(n))


def _scan(args):
    lo, hi, n, polys = args
    tables = [[(_lex_mask(m, n), c) for m, c in f.mask_items()] for f in polys]
    hits = []
    for idx in range(lo, hi):
        for table in tables:
            acc = 0
            for m, c in table:
                if m & idx == m:
                    acc = c + acc
            if acc:
                break
        else:
            hits.append(idx)
    return hits


def _lex_mask(mask: int, n: int) -> int:
    # re-index bits so that integer order of masks is lexicographic point order
    out = 0
    for j in range(n):
        if mask >> j & 1:
            out |= 1 << (n - 1 - j)
    return out


def brute_force(f_sys: PolySystem, cap: int = DEFAULT_CUBE_CAP, workers: int = 1) -> VarietyReport:
    """All points of {0,1}^N where every polynomial of the system vanishes."""
    n = f_sys.ambient_n
    if cap > HARD_CUBE_CAP:
        raise CapExceededError("cube cap", cap, HARD_CUBE_CAP)
    if n > cap:
        raise CapExceededError("cube", f"2^{n}", f"2^{cap}")
    start = time.perf_counter()
    polys = f_sys.polynomials
    total = 1 << n
    if workers > 1 and total >= 1 << 12:
        size = math.ceil(total / workers)
        ranges = [(lo, min(lo + size, total), n, polys) for lo in range(0, total, size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = [h for part in pool.map(_scan, ranges) for h in part]
    else:
        hits = _scan((0, total, n, polys))
    points = tuple(_mask_point(h, n) for h in hits)
    for p in points:
        if not all(not evaluate(f, p) for f in polys):
            raise CertificateError(f"oracle point {p} does not re-verify")
    if n <= 8:
        found = set(points)
        for p in itertools.product((0, 1), repeat=n):
            if p not in found and all(not evaluate(f, p) for f in polys):
                raise CertificateError(f"oracle omitted solution {p}")
    return VarietyReport(points, len(points), time.perf_counter() - start)


def project(points, var: int) -> set:
    return {p[var] for p in points}


# --------------------------------------------------------------------------
# generators


def encode_graph(edges, n_vertices: int, size: int | None = None) -> PolySystem:
    """x_i * x_j for every edge, plus sum(x) - size when a size is given."""
    polys = []
    seen = set()
    for e in edges:
        i, j = e
        if not (0 <= i < n_vertices and 0 <= j < n_vertices) or i == j:
            raise ValueError(f"invalid edge {e} for {n_vertices} vertices")
        key = (min(i, j), max(i, j))
        if key in seen:
            continue
        seen.add(key)
        polys.append((f"e{key[0]}_{key[1]}", MultilinearPoly.monomial(n_vertices, key)))
    if size is not None:
        total = MultilinearPoly(n_vertices, {(j,): 1 for j in range(n_vertices)})
        polys.append(("size", total - size))
    if not polys:
        polys.append(("zero", MultilinearPoly.zero(n_vertices)))
    return PolySystem(n_vertices, tuple(polys))


_COEFFS = [1, -1, 2, -2, 3, GaussianRational(0, 1), GaussianRational(1, 1), GaussianRational(1, 2)]


def random_poly(rng: random.Random, n: int, max_terms: int = 3) -> MultilinearPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = frozenset(j for j in range(n) if rng.random() < 0.5)
        terms[mono] = rng.choice(_COEFFS)
    f = MultilinearPoly(n, terms)
    return f if not f.is_zero() else MultilinearPoly.variable(n, 0)


def random_system(
    rng: random.Random, max_vars: int = 4, max_polys: int = 3, max_terms: int = 3
) -> PolySystem:
    """A small random system drawn from ``rng``; deterministic given its state.

    About half the systems get a planted solution: each constant term is
    shifted so that every member vanishes at one random point.  Some systems
    also receive the x0 <-> x1 image of their first member so that they carry
    symmetry.  Neither step pushes a system past ``max_polys`` members or a
    member past ``max_terms`` terms.
    """
    n = rng.randint(1, max_vars)
    k = rng.randint(1, max_polys)
    polys = [random_poly(rng, n, max_terms) for _ in range(k)]
    if rng.random() < 0.5:
        point = rng.getrandbits(n)
        planted = []
        for f in polys:
            g = f - f.eval_mask(point)
            planted.append(g if not g.is_zero() and g.term_count <= max_terms else f)
        polys = planted
    if n >= 2 and rng.random() < 0.15 and len(polys) < max_polys:
        from .symmetry import Permutation, apply

        polys.append(apply(Permutation.transposition(n, 0, 1), polys[0]))
    return PolySystem.of(n, polys)


# --------------------------------------------------------------------------
# audit


class AuditClass(str, enum.Enum):
    SOUND = "SOUND"
    PAPER_GAP = "PAPER_GAP"
    UNSOUND = "UNSOUND"


@dataclass
class AuditReport:
    system: PolySystem
    verdict: Verdict
    oracle: VarietyReport
    classification: AuditClass
    detail: str
    seed: int | None = None
    index: int | None = None

    def to_json(self) -> dict:
        out = {
            "classification": self.classification.value,
            "detail": self.detail,
            "vars": self.system.ambient_n,
            "system": {name: str(f) for name, f in self.system.polys},
            "oracle_count": self.oracle.count,
            "verdict": self.verdict.to_json(),
        }
        if self.seed is not None:
            out["seed"] = self.seed
        if self.index is not None:
            out["index"] = self.index
        return out


def classify(f_sys: PolySystem, verdict: Verdict, oracle: VarietyReport) -> tuple:
    empty = oracle.count == 0
    tag = verdict.tag
    if tag is VerdictTag.NO_SOLUTION_CERTIFIED:
        if empty:
            return AuditClass.SOUND, "both report Z(F) empty"
        return AuditClass.UNSOUND, f"certified empty but oracle finds {oracle.count} points"
    if tag is VerdictTag.SOLUTION_FOUND:
        if verdict.witness is not None and f_sys.vanishes_at(verdict.witness):
            return AuditClass.SOUND, "witness re-verifies"
        return AuditClass.UNSOUND, "witness does not satisfy F"
    if empty:
        return AuditClass.PAPER_GAP, "inconclusive; Z(F) is empty but no certificate fired"
    return AuditClass.PAPER_GAP, "inconclusive; Z(F) is nonempty but no candidate column vanished"


def audit(f_sys: PolySystem, mode: Mode | str = Mode.QUOTIENT, **kwargs) -> AuditReport:
    """Certify ``f_sys`` and compare the verdict with the cube oracle.

    Keyword arguments other than ``seed`` and ``index`` (recorded in the
    report) are passed on to ``certify``.
    """
    seed = kwargs.pop("seed", None)
    index = kwargs.pop("index", None)
    cube_cap = kwargs.get("cube_cap", DEFAULT_CUBE_CAP)
    verdict = certify(f_sys, mode, **kwargs)
    oracle = brute_force(f_sys, cap=cube_cap)
    cls, detail = classify(f_sys, verdict, oracle)
    return AuditReport(f_sys, verdict, oracle, cls, detail, seed, index)


def audit_random(count: int, seed: int, mode: Mode | str = Mode.QUOTIENT, gen=None, **kwargs):
    """Yield audit reports for ``count`` systems drawn from a seeded generator.

    ``gen`` holds keyword arguments for ``random_system``; the rest go to ``audit``.
    """
    rng = random.Random(seed)
    for index in range(count):
        f_sys = random_system(rng, **(gen or {}))
        yield audit(f_sys, mode, seed=seed, index=index, **kwargs)
