"""Decision layer: non-Boolean-root test, permuted-copy matrix and zero columns."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .algebra import DEFAULT_QUOTIENT_CAP, EliminationResult, Mode, UnknownFactor, eliminate_univariate
from .errors import CertificateError, EmptyDestabilizerError
from .ring import GaussianRational
from .saturation import build_g
from .symmetry import DEFAULT_GROUP_CAP, DestabilizerSet, PolySystem, apply, stabilizer

DEFAULT_BETA_BUDGET = 10 ** 4
DEFAULT_CUBE_CAP = 16


class VerdictTag(str, enum.Enum):
    NO_SOLUTION_CERTIFIED = "NO_SOLUTION_CERTIFIED"
    SOLUTION_FOUND = "SOLUTION_FOUND"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class NecessaryCheck:
    passed: bool
    index: int | None = None
    value: object = None
    evidence: str = ""

    def __bool__(self):
        return self.passed


def necessary_check(beta) -> NecessaryCheck:
    """Fail iff some root lies outside {0, 1}; an empty root list is the unit ideal."""
    beta = list(beta)
    if not beta:
        return NecessaryCheck(False, None, None, "unit ideal: Z(G) empty")
    for t, b in enumerate(beta):
        if isinstance(b, UnknownFactor):
            return NecessaryCheck(
                False, t, b, f"beta[{t}] is a factor {b} with no root in Q(i), so not in F2"
            )
        if not GaussianRational.coerce(b).is_boolean():
            return NecessaryCheck(False, t, b, f"beta[{t}] = {b} is not in F2")
    return NecessaryCheck(True, evidence="all roots lie in {0, 1}")


@dataclass(frozen=True)
class CertificateMatrix:
    """K x c matrix whose entry (k, j) is apply(destab[j], f_k)."""

    source: PolySystem
    destab: DestabilizerSet
    entries: tuple  # rows of MultilinearPoly

    @property
    def shape(self) -> tuple:
        return (len(self.entries), self.destab.c)

    def evaluated(self, beta) -> list[list[GaussianRational]]:
        mask = _point_mask(beta)
        return [[m.eval_mask(mask) for m in row] for row in self.entries]

    def zero_columns(self, beta) -> list[int]:
        mask = _point_mask(beta)
        cols = []
        for j in range(self.destab.c):
            if all(not row[j].eval_mask(mask) for row in self.entries):
                cols.append(j)
        return cols


def _point_mask(point) -> int:
    mask = 0
    for j, v in enumerate(point):
        v = GaussianRational.coerce(v)
        if not v.is_boolean():
            raise ValueError(f"point coordinate {v} is not Boolean")
        if v:
            mask |= 1 << j
    return mask


def build_matrix(f_sys: PolySystem, destab: DestabilizerSet) -> CertificateMatrix:
    if destab.c == 0:
        raise EmptyDestabilizerError(
            "every permutation fixes the system, so the zero-column test is vacuous; "
            "decide it by direct evaluation or the cube oracle"
        )
    rows = tuple(tuple(apply(sigma, f) for sigma in destab.members) for f in f_sys.polynomials)
    return CertificateMatrix(f_sys, destab, rows)


def zero_column_check(m: CertificateMatrix, beta) -> tuple | None:
    """Witness from the first vanishing column at beta, re-verified against F."""
    beta = tuple(int(GaussianRational.coerce(b).re) for b in beta)
    cols = m.zero_columns(beta)
    if not cols:
        return None
    sigma = m.destab.members[cols[0]]
    witness = sigma.act_on_point(beta)
    if not m.source.vanishes_at(witness):
        raise CertificateError(f"zero column {sigma} at {beta} gives non-solution {witness}")
    return witness


def candidate_points(beta, n: int, budget: int = DEFAULT_BETA_BUDGET, strategy: str = "multiset"):
    """Boolean points assembled from the root multiset, lexicographic, at most ``budget``.

    With fewer than n roots the multiset is padded by every mix of 0s and 1s;
    with more, every length-n sub-multiset is used.  ``strategy="cube"`` ignores
    the roots and walks the whole cube.
    """
    zeros = sum(1 for b in beta if not isinstance(b, UnknownFactor) and b == 0)
    ones = sum(1 for b in beta if not isinstance(b, UnknownFactor) and b == 1)
    total = zeros + ones
    out = []
    for point in itertools.product((0, 1), repeat=n):
        if len(out) >= budget:
            break
        o = sum(point)
        z = n - o
        if strategy == "cube":
            ok = True
        elif strategy != "multiset":
            raise ValueError(f"unknown beta strategy {strategy!r}")
        elif total < n:
            ok = z >= zeros and o >= ones
        else:
            ok = z <= zeros and o <= ones
        if ok:
            out.append(point)
    return out


@dataclass
class Verdict:
    tag: VerdictTag
    witness: tuple | None
    mode: Mode
    c: int
    stab_order: int
    p: list | None
    beta_candidates_tried: int
    evidence: list = field(default_factory=list)
    elimination: EliminationResult | None = None

    def to_json(self) -> dict:
        return {
            "tag": self.tag.value,
            "witness": None if self.witness is None else list(self.witness),
            "mode": self.mode.value,
            "c": self.c,
            "stab_order": self.stab_order,
            "p": self.p,
            "beta_candidates_tried": self.beta_candidates_tried,
            "evidence": list(self.evidence),
        }


def certify(
    f_sys: PolySystem,
    mode: Mode | str = Mode.QUOTIENT,
    beta_strategy: str = "multiset",
    *,
    elim_var: int = 0,
    raw_degree_cap: int | None = None,
    beta_budget: int = DEFAULT_BETA_BUDGET,
    group_cap: int = DEFAULT_GROUP_CAP,
    quotient_cap: int = DEFAULT_QUOTIENT_CAP,
    cube_cap: int = DEFAULT_CUBE_CAP,
    c0_threshold: int | None = None,
    workers: int = 1,
) -> Verdict:
    """Run stabilizer, saturation, elimination, root test and zero-column search.

    Emptiness is claimed only from the root test (p = 1 or a non-Boolean
    root); a fruitless zero-column search yields INCONCLUSIVE.
    """
    mode = Mode(mode)
    n = f_sys.ambient_n
    evidence: list[str] = []
    _, destab = stabilizer(f_sys, cap=group_cap, workers=workers)
    if c0_threshold is not None and destab.c > c0_threshold:
        evidence.append(f"warning: c = {destab.c} exceeds threshold c0 = {c0_threshold}")
    sat = build_g(f_sys, destab)
    elim = eliminate_univariate(
        sat, var=elim_var, mode=mode, raw_degree_cap=raw_degree_cap, quotient_cap=quotient_cap
    )

    def verdict(tag, witness=None, tried=0):
        return Verdict(
            tag, witness, mode, destab.c, destab.stab_order,
            None if elim.p is None else elim.p.coeff_strings(), tried, evidence, elim,
        )

    if elim.p is None:
        evidence.append(
            f"no univariate polynomial in x{elim_var} up to degree {elim.raw_degree_cap}; "
            "root test skipped"
        )
        beta = []
        strategy = "cube"
    else:
        evidence.append(f"p(x{elim_var}) = {elim.p}")
        nc = necessary_check(elim.beta)
        if not nc:
            evidence.append(nc.evidence + ": no solution")
            return verdict(VerdictTag.NO_SOLUTION_CERTIFIED)
        evidence.append(nc.evidence)
        beta = list(elim.beta)
        strategy = beta_strategy

    points = candidate_points(beta, n, beta_budget, strategy)

    if destab.c == 0:
        evidence.append("c = 0: zero-column test is vacuous, evaluating F directly")
        for tried, point in enumerate(points, 1):
            if f_sys.vanishes_at(point):
                evidence.append(f"F vanishes at candidate {list(point)}")
                return verdict(VerdictTag.SOLUTION_FOUND, tuple(point), tried)
        if n <= cube_cap:
            from .oracle import brute_force

            report = brute_force(f_sys, cap=cube_cap)
            if report.count == 0:
                evidence.append("cube oracle: Z(F) is empty")
                return verdict(VerdictTag.NO_SOLUTION_CERTIFIED, None, len(points))
            evidence.append(f"cube oracle: {report.count} solutions")
            return verdict(VerdictTag.SOLUTION_FOUND, report.points[0], len(points))
        evidence.append(f"N = {n} exceeds cube cap {cube_cap}; no candidate vanished")
        return verdict(VerdictTag.INCONCLUSIVE, None, len(points))

    matrix = build_matrix(f_sys, destab)
    for tried, point in enumerate(points, 1):
        witness = zero_column_check(matrix, point)
        if witness is not None:
            evidence.append(f"zero column at beta = {list(point)} gives witness {list(witness)}")
            return verdict(VerdictTag.SOLUTION_FOUND, witness, tried)
    evidence.append(
        f"no zero column among {len(points)} candidate points; "
        "the root test is necessary, not sufficient"
    )
    return verdict(VerdictTag.INCONCLUSIVE, None, len(points))
