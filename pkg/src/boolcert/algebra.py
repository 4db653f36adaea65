"""Univariate elimination with cofactor certificates.

Two readings of "the ideal generated by G" are supported:

* ``Mode.QUOTIENT``: the ideal of G inside the Boolean quotient ring.  The
  quotient is a 2^N dimensional vector space, so the ideal is the row space of
  the matrix of all monomial multiples m*g, and its univariate part is found
  by echelon elimination with the univariate columns ordered last.
* ``Mode.RAW``: the ideal of the multilinear representatives as ordinary
  polynomials, without the field equations x^2 - x.  Searched with a bounded
  total-degree multiplier (Macaulay-style) matrix.

Every pivot row remembers which multiples it is made of, so the cofactors h_k
with sum(h_k * g_k) == p come out of the same elimination and are re-verified
by expansion before a result is returned.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field

from .errors import AmbientMismatchError, CapExceededError, CertificateError
from .ring import ONE, ZERO, GaussianRational, MultilinearPoly, cube_values, from_cube_values, mask_to_indices
from .symmetry import PolySystem

DEFAULT_QUOTIENT_CAP = 16


class Mode(str, enum.Enum):
    QUOTIENT = "quotient"
    RAW = "raw"


# --------------------------------------------------------------------------
# polynomial types that only exist here


@dataclass(frozen=True)
class UnivariatePoly:
    """Polynomial in the single variable x_var; ``coeffs`` ascending, no trailing zeros."""

    var: int
    coeffs: tuple

    def __post_init__(self):
        cs = [GaussianRational.coerce(c) for c in self.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_one(self) -> bool:
        return self.coeffs == (ONE,)

    def monic(self) -> "UnivariatePoly":
        lead = self.coeffs[-1]
        return UnivariatePoly(self.var, tuple(c / lead for c in self.coeffs))

    def __call__(self, x) -> GaussianRational:
        x = GaussianRational.coerce(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_multilinear(self, ambient_n: int) -> MultilinearPoly:
        """Image in the quotient ring, where every positive power of x is x."""
        const = self.coeffs[0] if self.coeffs else ZERO
        lin = ZERO
        for c in self.coeffs[1:]:
            lin = lin + c
        return MultilinearPoly(ambient_n, {(): const, (self.var,): lin})

    def to_plain(self, ambient_n: int) -> "PlainPoly":
        terms = {}
        for j, c in enumerate(self.coeffs):
            if c:
                e = [0] * ambient_n
                e[self.var] = j
                terms[tuple(e)] = c
        return PlainPoly(ambient_n, terms)

    def coeff_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self):
        n = max(self.var + 1, 1)
        return str(self.to_plain(n))


class PlainPoly:
    """Ordinary sparse polynomial keyed by exponent tuples (no Boolean reduction)."""

    __slots__ = ("ambient_n", "terms")

    def __init__(self, ambient_n: int, terms: dict | None = None):
        self.ambient_n = ambient_n
        self.terms = {e: GaussianRational.coerce(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def from_multilinear(cls, f: MultilinearPoly) -> "PlainPoly":
        n = f.ambient_n
        out = {}
        for m, c in f.mask_items():
            out[tuple((m >> j) & 1 for j in range(n))] = c
        return cls(n, out)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __add__(self, other: "PlainPoly") -> "PlainPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, ZERO) + c
        return PlainPoly(self.ambient_n, out)

    def __mul__(self, other: "PlainPoly") -> "PlainPoly":
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return PlainPoly(self.ambient_n, out)

    def __eq__(self, other):
        if not isinstance(other, PlainPoly):
            return NotImplemented
        return self.ambient_n == other.ambient_n and self.terms == other.terms

    def __hash__(self):
        return hash((self.ambient_n, frozenset(self.terms.items())))

    def reduce(self) -> MultilinearPoly:
        # distinct exponent vectors can share a square-free support
        out: dict = {}
        for e, c in self.terms.items():
            mono = tuple(j for j, a in enumerate(e) if a)
            out[mono] = out.get(mono, ZERO) + c
        return MultilinearPoly(self.ambient_n, out)

    def __str__(self):
        if not self.terms:
            return "0"

        def key(e):
            return (-sum(e), [-a for a in e])

        out = []
        for e in sorted(self.terms, key=key):
            c = self.terms[e]
            mono = "*".join(
                f"x{j}" if a == 1 else f"x{j}^{a}" for j, a in enumerate(e) if a
            )
            for part, imaginary in ((c.re, False), (c.im, True)):
                if part == 0:
                    continue
                mag = abs(part)
                mag_s = ("i" if mag == 1 else f"{mag}i") if imaginary else str(mag)
                body = mag_s if not mono else (mono if mag_s == "1" else f"{mag_s}*{mono}")
                out.append((part < 0, body))
        head = ("-" if out[0][0] else "") + out[0][1]
        return " ".join([head] + [("- " if neg else "+ ") + b for neg, b in out[1:]])

    __repr__ = __str__


# --------------------------------------------------------------------------
# exact sparse echelon form with provenance


def _axpy(target: dict, factor: GaussianRational, src: dict) -> None:
    """target -= factor * src, in place, dropping cancelled entries."""
    for k, v in src.items():
        cur = target.get(k)
        nv = -(factor * v) if cur is None else cur - factor * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class _Echelon:
    """Rows with distinct leading columns under a fixed column order.

    ``rank`` maps a column key to its position; smaller is earlier.  Stored
    rows are scaled so their leading coefficient is 1.
    """

    def __init__(self, rank):
        self.rank = rank
        self.pivots: dict = {}

    def insert(self, vec: dict, prov: dict) -> bool:
        vec = dict(vec)
        prov = dict(prov)
        rank = self.rank
        while vec:
            lead = min(vec, key=rank)
            row = self.pivots.get(lead)
            if row is None:
                inv = ONE / vec[lead]
                self.pivots[lead] = (
                    {k: v * inv for k, v in vec.items()},
                    {k: v * inv for k, v in prov.items()},
                )
                return True
            factor = vec[lead]
            _axpy(vec, factor, row[0])
            _axpy(prov, factor, row[1])
        return False

    def __len__(self):
        return len(self.pivots)


# --------------------------------------------------------------------------
# ideal basis in the quotient


def _generators(g) -> list[MultilinearPoly]:
    if hasattr(g, "g_polys"):
        return list(g.g_polys)
    if isinstance(g, PolySystem):
        return g.polynomials
    return list(g)


def _quotient_rank(n: int, var: int | None):
    order = sorted(range(1 << n), key=lambda m: (-m.bit_count(), sorted(mask_to_indices(m))))
    if var is not None:
        order.remove(1 << var)
        order.remove(0)
        order += [1 << var, 0]
    table = {m: i for i, m in enumerate(order)}
    return table.__getitem__


@dataclass
class IdealBasis:
    """Echelon spanning set of the ideal generated by G in the quotient ring.

    ``rows`` pairs each basis polynomial with its provenance: a mapping
    ``(multiplier_mask, k) -> coefficient`` such that the polynomial equals
    the sum of coefficient * x^multiplier * g_k.
    """

    ambient_n: int
    generators: list
    rows: list = field(default_factory=list)
    pivots: list = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def polys(self) -> list[MultilinearPoly]:
        return [poly for poly, _ in self.rows]

    def cofactors(self, prov: dict) -> list[MultilinearPoly]:
        n = self.ambient_n
        acc: list[dict] = [dict() for _ in self.generators]
        for (m, k), c in prov.items():
            acc[k][m] = acc[k].get(m, ZERO) + c
        return [MultilinearPoly._from_masks(n, {m: c for m, c in d.items() if c}) for d in acc]


def _quotient_echelon(gens, n, var, cap):
    if n > cap:
        raise CapExceededError("quotient", f"2^{n}", f"2^{cap}")
    for g in gens:
        if g.ambient_n != n:
            raise AmbientMismatchError("generators live in different rings")
    ech = _Echelon(_quotient_rank(n, var))
    full = 1 << n
    for k, g in enumerate(gens):
        if g.is_zero():
            continue
        items = list(g.mask_items())
        seen = set()
        for m in range(full):
            if len(ech) == full:
                break
            vec: dict = {}
            for t, c in items:
                u = m | t
                vec[u] = vec.get(u, ZERO) + c
            vec = {u: c for u, c in vec.items() if c}
            key = frozenset(vec.items())
            if not vec or key in seen:
                continue
            seen.add(key)
            ech.insert(vec, {(m, k): ONE})
    return ech


def ideal_basis(g, elim_var: int | None = None, cap: int = DEFAULT_QUOTIENT_CAP) -> IdealBasis:
    """Echelon basis of the ideal's image in the 2^N dimensional quotient.

    With ``elim_var`` set, the columns for x_var and 1 are ordered last, so
    the rows leading there span the ideal's univariate part.
    """
    gens = _generators(g)
    if not gens:
        raise ValueError("no generators")
    n = gens[0].ambient_n
    ech = _quotient_echelon(gens, n, elim_var, cap)
    basis = IdealBasis(n, gens)
    for lead in sorted(ech.pivots, key=ech.rank):
        vec, prov = ech.pivots[lead]
        basis.rows.append((MultilinearPoly._from_masks(n, dict(vec)), prov))
        basis.pivots.append(mask_to_indices(lead))
    return basis


# --------------------------------------------------------------------------
# roots over Q(i)


@dataclass(frozen=True)
class UnknownFactor:
    """A factor of p with no root in Q(i) (or none found within the search budget)."""

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        return "UNKNOWN_FACTOR(" + str(UnivariatePoly(0, self.coeffs)) + ")"


UNKNOWN_FACTOR = UnknownFactor


def _deflate(coeffs: list, r: GaussianRational) -> list:
    """Divide by (x - r), assuming r is a root.  Ascending coefficients."""
    n = len(coeffs) - 1
    out = [ZERO] * n
    acc = ZERO
    for j in range(n, 0, -1):
        acc = acc * r + coeffs[j]
        out[j - 1] = acc
    return out


def _eval(coeffs, r):
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * r + c
    return acc


def _gaussian_divisors(a: int, b: int, max_norm: int):
    """All Gaussian integers dividing a + b*i, or None if the norm is too large."""
    norm = a * a + b * b
    if norm > max_norm:
        return None
    divs = set()
    for d in range(1, math.isqrt(norm) + 1):
        if norm % d:
            continue
        for dd in {d, norm // d}:
            for x in range(math.isqrt(dd) + 1):
                y2 = dd - x * x
                y = math.isqrt(y2)
                if y * y != y2:
                    continue
                for sx, sy in ((x, y), (-x, y), (x, -y), (-x, -y)):
                    # (a+bi)/(sx+sy i) = (a+bi)(sx-sy i)/dd
                    re_ = a * sx + b * sy
                    im_ = b * sx - a * sy
                    if re_ % dd == 0 and im_ % dd == 0:
                        divs.add((sx, sy))
    return divs


def _gaussian_integer_coeffs(coeffs):
    lcm = 1
    for c in coeffs:
        lcm = lcm * c._d // math.gcd(lcm, c._d)
    return [(c._a * (lcm // c._d), c._b * (lcm // c._d)) for c in coeffs]


def _rational_root(coeffs, max_norm):
    """A root in Q(i), or None when there is none (or the search is over budget)."""
    ints = _gaussian_integer_coeffs(coeffs)
    num_divs = _gaussian_divisors(*ints[0], max_norm)
    den_divs = _gaussian_divisors(*ints[-1], max_norm)
    if num_divs is None or den_divs is None:
        return None
    tried = set()
    for u in sorted(num_divs):
        for w in sorted(den_divs):
            r = GaussianRational(u[0], u[1]) / GaussianRational(w[0], w[1])
            if r in tried:
                continue
            tried.add(r)
            if not _eval(coeffs, r):
                return r
    return None


def roots_of(p: UnivariatePoly, max_norm: int = 10 ** 12) -> list:
    """Roots of p in Q(i) with multiplicity.

    0 and 1 are extracted first, then linear factors, then a Gaussian
    rational-root search.  Whatever is left without a root in Q(i) is
    reported as a trailing ``UnknownFactor``; it has no root in {0, 1}.
    """
    coeffs = list(p.coeffs)
    if len(coeffs) <= 1:
        return []
    roots: list = []
    while len(coeffs) > 1 and not coeffs[0]:
        roots.append(ZERO)
        coeffs = coeffs[1:]
    while len(coeffs) > 1 and not _eval(coeffs, ONE):
        roots.append(ONE)
        coeffs = _deflate(coeffs, ONE)
    others = []
    while len(coeffs) > 1:
        if len(coeffs) == 2:
            others.append(-coeffs[0] / coeffs[1])
            break
        r = _rational_root(coeffs, max_norm)
        if r is None:
            return roots + others + [UnknownFactor(tuple(coeffs))]
        while len(coeffs) > 1 and not _eval(coeffs, r):
            others.append(r)
            coeffs = _deflate(coeffs, r)
    return roots + others


# --------------------------------------------------------------------------
# elimination


@dataclass(frozen=True)
class EliminationResult:
    """A univariate p in the ideal, its roots and the cofactors proving membership.

    ``p`` is None when RAW mode finds nothing up to its degree cap.  In
    QUOTIENT mode a trivial univariate part yields p = x(x - 1) with zero
    cofactors (``trivial`` is set): that p lies in the ideal only through the
    field equation, and its roots are both Boolean values.
    """

    mode: Mode
    var: int
    p: UnivariatePoly | None
    beta: tuple
    cofactors: tuple
    raw_degree_cap: int | None = None
    trivial: bool = False
    verified: bool = False

    @property
    def is_unit(self) -> bool:
        return self.p is not None and self.p.is_one()

    def to_json(self) -> dict:
        return {
            "mode": self.mode.value,
            "var": self.var,
            "p": None if self.p is None else self.p.coeff_strings(),
            "p_text": None if self.p is None else str(self.p),
            "beta": [str(b) for b in self.beta],
            "cofactors": [str(h) for h in self.cofactors],
            "raw_degree_cap": self.raw_degree_cap,
            "trivial": self.trivial,
            "verified": self.verified,
        }


def _check_var(var, n):
    if not 0 <= var < n:
        raise ValueError(f"elimination variable x{var} not in a ring of {n} variables")


# generators with larger coefficients are replaced by their support indicator
SUPPORT_SWITCH_BITS = 64


def _coeff_bits(f: MultilinearPoly) -> int:
    return max(
        (max(c._a.bit_length(), c._b.bit_length(), c._d.bit_length()) for _, c in f.mask_items()),
        default=0,
    )


def _support_generators(gens, n):
    """Generators e_k and multipliers u_k with e_k = u_k * g_k spanning the same ideal.

    The quotient ring is the ring of functions on the cube, so g_k and its
    0/1 support indicator generate the same ideal.  A generator whose
    coefficients exceed SUPPORT_SWITCH_BITS is swapped for that indicator,
    with u_k its pointwise inverse, which keeps the elimination from
    carrying thousand-digit numbers.  Other generators are kept (u_k = 1).
    Cofactors found for e_k times u_k are cofactors for g_k.
    """
    support, inverse = [], []
    for g in gens:
        if _coeff_bits(g) <= SUPPORT_SWITCH_BITS:
            support.append(g)
            inverse.append(MultilinearPoly.constant(n, 1))
            continue
        vals = cube_values(g)
        support.append(from_cube_values(n, [ONE if v else ZERO for v in vals]))
        inverse.append(from_cube_values(n, [ONE / v if v else ZERO for v in vals]))
    return support, inverse


def _eliminate_quotient(gens, n, var, cap):
    if n > cap:
        raise CapExceededError("quotient", f"2^{n}", f"2^{cap}")
    support, inverse = _support_generators(gens, n)
    ech = _quotient_echelon(support, n, var, cap)
    cofactor_basis = IdealBasis(n, support)
    const_row = ech.pivots.get(0)
    lin_row = ech.pivots.get(1 << var)
    trivial = False
    if const_row is not None:
        p = UnivariatePoly(var, (ONE,))
        prov = const_row[1]
    elif lin_row is not None:
        vec, prov = lin_row
        shift = vec.get(0, ZERO)
        if shift not in (ZERO, -ONE):
            # x*(x + s) = (1 + s) x would put 1 in the ideal
            raise CertificateError(f"univariate row x{var} + {shift} in an ideal without 1")
        p = UnivariatePoly(var, (shift, ONE))
    else:
        p = UnivariatePoly(var, (ZERO, -ONE, ONE))
        prov = {}
        trivial = True
    cofactors = [h * u for h, u in zip(cofactor_basis.cofactors(prov), inverse)]
    total = MultilinearPoly.zero(n)
    for h, g in zip(cofactors, gens):
        total = total + h * g
    if total != p.to_multilinear(n):
        raise CertificateError("cofactor identity fails to re-expand to p mod I")
    return EliminationResult(
        Mode.QUOTIENT, var, p, tuple(roots_of(p)), tuple(cofactors),
        trivial=trivial, verified=True,
    )


def _exponents_up_to(n: int, degree: int):
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(n), d):
            e = [0] * n
            for j in combo:
                e[j] += 1
            yield tuple(e)


def _eliminate_raw(gens, n, var, cap_d):
    plain = [PlainPoly.from_multilinear(g) for g in gens]

    def is_uni(e):
        return all(a == 0 for j, a in enumerate(e) if j != var)

    def rank(e):
        if is_uni(e):
            return (1, -e[var], e)
        return (0, -sum(e), e)

    ech = _Echelon(rank)
    for k, g in enumerate(plain):
        dg = g.degree()
        if dg < 0 or dg > cap_d:
            continue
        for mult in _exponents_up_to(n, cap_d - dg):
            vec = {tuple(a + b for a, b in zip(mult, e)): c for e, c in g.terms.items()}
            ech.insert(vec, {(mult, k): ONE})
    uni = [e for e in ech.pivots if is_uni(e)]
    if not uni:
        return EliminationResult(Mode.RAW, var, None, (), (), raw_degree_cap=cap_d, verified=True)
    lead = min(uni, key=lambda e: e[var])
    vec, prov = ech.pivots[lead]
    coeffs = [ZERO] * (lead[var] + 1)
    for e, c in vec.items():
        coeffs[e[var]] = c
    p = UnivariatePoly(var, tuple(coeffs)).monic()
    hs = [dict() for _ in gens]
    for (mult, k), c in prov.items():
        hs[k][mult] = hs[k].get(mult, ZERO) + c
    cofactors = [PlainPoly(n, h) for h in hs]
    total = PlainPoly(n)
    for h, g in zip(cofactors, plain):
        total = total + h * g
    if total != p.to_plain(n):
        raise CertificateError("cofactor identity fails to re-expand to p")
    return EliminationResult(
        Mode.RAW, var, p, tuple(roots_of(p)), tuple(cofactors),
        raw_degree_cap=cap_d, verified=True,
    )


def eliminate_univariate(
    g,
    var: int = 0,
    mode: Mode | str = Mode.QUOTIENT,
    raw_degree_cap: int | None = None,
    quotient_cap: int = DEFAULT_QUOTIENT_CAP,
) -> EliminationResult:
    """Find the monic minimal-degree p(x_var) in the ideal generated by ``g``.

    ``g`` may be a SaturatedSystem, a PolySystem or a list of polynomials.
    """
    mode = Mode(mode)
    gens = _generators(g)
    if not gens:
        raise ValueError("no generators")
    n = gens[0].ambient_n
    _check_var(var, n)
    if mode is Mode.QUOTIENT:
        return _eliminate_quotient(gens, n, var, quotient_cap)
    cap_d = n if raw_degree_cap is None else raw_degree_cap
    if cap_d < 0:
        raise ValueError("raw degree cap must be non-negative")
    return _eliminate_raw(gens, n, var, cap_d)
