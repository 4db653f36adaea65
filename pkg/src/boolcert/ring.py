"""Exact arithmetic in the Boolean quotient ring Q(i)[x0..x_{N-1}] / (x_j^2 - x_j).

Monomials are square-free, so a monomial is just the set of variables it
contains.  Internally that set is an int bitmask (bit j set <=> x_j present);
multiplying monomials is bitwise OR, which is exactly reduction by the
Boolean ideal.  The public API speaks in index sets (frozensets).
"""

from __future__ import annotations

import math
import re as _re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .errors import AmbientMismatchError, ParseError, VariableIndexError

__all__ = [
    "GaussianRational",
    "MultilinearPoly",
    "ZERO",
    "ONE",
    "I",
    "add",
    "mul",
    "evaluate",
    "parse",
    "format_poly",
    "mask_to_indices",
    "indices_to_mask",
]


class GaussianRational:
    """An element (a + b*i) / d of Q(i), kept normalized.

    The representation satisfies d > 0 and gcd(a, b, d) == 1, which makes it
    unique, so equality and hashing are structural.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _raw(cls, a, b, d):
        # caller guarantees nothing; normalize here
        if d < 0:
            a, b, d = -a, -b, -d
        if d != 1:
            g = math.gcd(a, b, d)
            if g != 1:
                a //= g
                b //= g
                d //= g
        obj = object.__new__(cls)
        obj._a, obj._b, obj._d = a, b, d
        return obj

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, int):
            obj = object.__new__(cls)
            obj._a, obj._b, obj._d = value, 0, 1
            return obj
        if isinstance(value, Rational):
            return cls(value)
        if isinstance(value, complex):
            raise TypeError("floating complex values are not exact; use GaussianRational")
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def is_boolean(self) -> bool:
        """True for exactly 0 and 1."""
        return self._b == 0 and self._d == 1 and self._a in (0, 1)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    # arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return GaussianRational._raw(self._a + other._a, self._b + other._b, d1)
        return GaussianRational._raw(
            self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(GaussianRational)
        obj._a, obj._b, obj._d = -self._a, -self._b, self._d
        return obj

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        if b1 == 0 and b2 == 0:
            return GaussianRational._raw(a1 * a2, 0, self._d * other._d)
        return GaussianRational._raw(
            a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, self._d * other._d
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a2, b2 = other._a, other._b
        n = a2 * a2 + b2 * b2
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        # (a1 + b1 i)/d1 * d2 (a2 - b2 i) / n
        a1, b1 = self._a, self._b
        return GaussianRational._raw(
            (a1 * a2 + b1 * b2) * other._d,
            (b1 * a2 - a1 * b2) * other._d,
            self._d * n,
        )

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (ONE / self) ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Rational)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        return NotImplemented

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __repr__(self):
        return f"GaussianRational({str(self)!r})"

    def __str__(self):
        re_, im_ = self.re, self.im
        if im_ == 0:
            return str(re_)
        if im_ == 1:
            im_s = "i"
        elif im_ == -1:
            im_s = "-i"
        else:
            im_s = f"{im_}i"
        if re_ == 0:
            return im_s
        return f"{re_}{im_s}" if im_s.startswith("-") else f"{re_}+{im_s}"

    _STR_RE = _re.compile(
        r"""^\s*(?:
            (?P<im_only>[+-]?(?:\d+(?:/\d+)?)?)i
          | (?P<re>[+-]?\d+(?:/\d+)?)(?:(?P<im>[+-](?:\d+(?:/\d+)?)?)i)?
        )\s*$""",
        _re.VERBOSE,
    )

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Inverse of ``str``: accepts "3/2", "i", "-1/3i", "1+2i", "1/2-i"."""
        m = cls._STR_RE.match(text)
        if not m:
            raise ParseError(f"not a Gaussian rational: {text!r}")

        def part(s):
            if s in ("", "+"):
                return Fraction(1)
            if s == "-":
                return Fraction(-1)
            return Fraction(s)

        try:
            if m.group("im_only") is not None:
                return cls(0, part(m.group("im_only")))
            im = m.group("im")
            return cls(Fraction(m.group("re")), part(im) if im is not None else 0)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {text!r}") from None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def mask_to_indices(mask: int) -> frozenset:
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return frozenset(out)


def indices_to_mask(indices: Iterable[int]) -> int:
    m = 0
    for j in indices:
        m |= 1 << j
    return m


class MultilinearPoly:
    """A polynomial in N Boolean variables with Gaussian-rational coefficients.

    Immutable.  ``terms`` maps a monomial (frozenset of variable indices) to
    its nonzero coefficient.  Repeated indices in constructor input collapse,
    which is the x^2 = x rule.
    """

    __slots__ = ("ambient_n", "_terms", "_hash")

    def __init__(self, ambient_n: int, terms: Mapping | None = None):
        if ambient_n < 0:
            raise ValueError("ambient_n must be non-negative")
        self.ambient_n = ambient_n
        out: dict[int, GaussianRational] = {}
        for mono, coef in (terms or {}).items():
            m = indices_to_mask(mono)
            if m >> ambient_n:
                bad = max(mask_to_indices(m))
                raise VariableIndexError(bad, ambient_n)
            coef = GaussianRational.coerce(coef)
            prev = out.get(m)
            out[m] = coef if prev is None else prev + coef
        self._terms = {m: c for m, c in out.items() if c}
        self._hash = None

    @classmethod
    def _from_masks(cls, ambient_n: int, terms: dict) -> "MultilinearPoly":
        # trusted: masks in range, coefficients nonzero GaussianRationals
        obj = object.__new__(cls)
        obj.ambient_n = ambient_n
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, ambient_n: int) -> "MultilinearPoly":
        return cls._from_masks(ambient_n, {})

    @classmethod
    def constant(cls, ambient_n: int, value) -> "MultilinearPoly":
        value = GaussianRational.coerce(value)
        return cls._from_masks(ambient_n, {0: value} if value else {})

    @classmethod
    def variable(cls, ambient_n: int, j: int) -> "MultilinearPoly":
        if not 0 <= j < ambient_n:
            raise VariableIndexError(j, ambient_n)
        return cls._from_masks(ambient_n, {1 << j: ONE})

    @classmethod
    def monomial(cls, ambient_n: int, indices: Iterable[int], coef=1) -> "MultilinearPoly":
        return cls(ambient_n, {frozenset(indices): coef})

    # accessors -----------------------------------------------------------

    @property
    def terms(self) -> dict:
        return {mask_to_indices(m): c for m, c in self._terms.items()}

    def mask_items(self):
        """(bitmask, coefficient) pairs; the internal monomial encoding."""
        return self._terms.items()

    def coefficient(self, indices: Iterable[int]) -> GaussianRational:
        return self._terms.get(indices_to_mask(indices), ZERO)

    @property
    def term_count(self) -> int:
        return len(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(m.bit_count() for m in self._terms)

    def support(self) -> int:
        """Bitmask of variables that occur in some term."""
        s = 0
        for m in self._terms:
            s |= m
        return s

    def check_invariants(self) -> None:
        """Audit walk: raise AssertionError on any representation defect."""
        for m, c in self._terms.items():
            assert isinstance(c, GaussianRational), c
            assert c, "stored zero coefficient"
            assert m >= 0 and not (m >> self.ambient_n), "index out of range"

    # ring operations -----------------------------------------------------

    def _coerce_other(self, other) -> "MultilinearPoly":
        if isinstance(other, MultilinearPoly):
            if other.ambient_n != self.ambient_n:
                raise AmbientMismatchError(
                    f"ambient mismatch: {self.ambient_n} vs {other.ambient_n}"
                )
            return other
        return MultilinearPoly.constant(self.ambient_n, other)

    def __add__(self, other):
        try:
            other = self._coerce_other(other)
        except TypeError:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            prev = out.get(m)
            if prev is None:
                out[m] = c
            else:
                s = prev + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return MultilinearPoly._from_masks(self.ambient_n, out)

    __radd__ = __add__

    def __neg__(self):
        return MultilinearPoly._from_masks(
            self.ambient_n, {m: -c for m, c in self._terms.items()}
        )

    def __sub__(self, other):
        try:
            other = self._coerce_other(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce_other(other)
        except TypeError:
            return NotImplemented
        out: dict[int, GaussianRational] = {}
        get = out.get
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 | m2
                p = c1 * c2
                prev = get(m)
                out[m] = p if prev is None else prev + p
        return MultilinearPoly._from_masks(
            self.ambient_n, {m: c for m, c in out.items() if c}
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = MultilinearPoly.constant(self.ambient_n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "MultilinearPoly":
        c = GaussianRational.coerce(c)
        if not c:
            return MultilinearPoly.zero(self.ambient_n)
        return MultilinearPoly._from_masks(
            self.ambient_n, {m: c * v for m, v in self._terms.items()}
        )

    def __eq__(self, other):
        if isinstance(other, MultilinearPoly):
            return self.ambient_n == other.ambient_n and self._terms == other._terms
        if isinstance(other, (int, Rational, GaussianRational)):
            return self == MultilinearPoly.constant(self.ambient_n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient_n, frozenset(self._terms.items())))
        return self._hash

    # evaluation ----------------------------------------------------------

    def eval_mask(self, point_mask: int) -> GaussianRational:
        """Value at the Boolean point whose 1-coordinates are ``point_mask``."""
        acc = ZERO
        for m, c in self._terms.items():
            if m & point_mask == m:
                acc = acc + c
        return acc

    def vanishes_at_mask(self, point_mask: int) -> bool:
        return not self.eval_mask(point_mask)

    def __call__(self, *point):
        if len(point) == 1 and not isinstance(point[0], (int, Rational, GaussianRational)):
            point = tuple(point[0])
        return evaluate(self, point)

    # text ----------------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultilinearPoly({self.ambient_n}, {format_poly(self)!r})"

    def __reduce__(self):
        return (_rebuild, (self.ambient_n, tuple((m, str(c)) for m, c in self._terms.items())))


def _rebuild(ambient_n, items):
    return MultilinearPoly._from_masks(
        ambient_n, {m: GaussianRational.parse(c) for m, c in items}
    )


def add(f: MultilinearPoly, g: MultilinearPoly) -> MultilinearPoly:
    return f + f._coerce_other(g)


def mul(f: MultilinearPoly, g: MultilinearPoly) -> MultilinearPoly:
    """Product reduced by the Boolean ideal (monomial product = index union)."""
    return f * g


def evaluate(f: MultilinearPoly, point: Sequence) -> GaussianRational:
    if len(point) != f.ambient_n:
        raise AmbientMismatchError(
            f"point has length {len(point)}, polynomial has {f.ambient_n} variables"
        )
    vals = [GaussianRational.coerce(v) for v in point]
    if all(v.is_boolean() for v in vals):
        mask = 0
        for j, v in enumerate(vals):
            if v:
                mask |= 1 << j
        return f.eval_mask(mask)
    acc = ZERO
    for m, c in f.mask_items():
        t = c
        j = 0
        while m:
            if m & 1:
                t = t * vals[j]
            m >>= 1
            j += 1
        acc = acc + t
    return acc


def cube_values(f: MultilinearPoly) -> list:
    """Values of f at every Boolean point, indexed by point mask.

    The quotient ring is the ring of functions on {0,1}^N, and this subset-sum
    (zeta) transform is the isomorphism; ``from_cube_values`` inverts it.
    """
    n = f.ambient_n
    vals = [ZERO] * (1 << n)
    for m, c in f.mask_items():
        vals[m] = c
    for j in range(n):
        bit = 1 << j
        for b in range(1 << n):
            if b & bit:
                vals[b] = vals[b] + vals[b ^ bit]
    return vals


def from_cube_values(ambient_n: int, vals: Sequence) -> MultilinearPoly:
    """The multilinear polynomial with the given point values (Moebius transform)."""
    if len(vals) != 1 << ambient_n:
        raise AmbientMismatchError(f"{len(vals)} values for a cube of dimension {ambient_n}")
    coeffs = [GaussianRational.coerce(v) for v in vals]
    for j in range(ambient_n):
        bit = 1 << j
        for b in range(1 << ambient_n):
            if b & bit:
                coeffs[b] = coeffs[b] - coeffs[b ^ bit]
    return MultilinearPoly._from_masks(ambient_n, {m: c for m, c in enumerate(coeffs) if c})


# text format ---------------------------------------------------------------


def _order_key(mask: int):
    idx = sorted(mask_to_indices(mask))
    return (-len(idx), idx)


def _abs_coeff_text(x: Fraction, imaginary: bool) -> str:
    x = abs(x)
    if imaginary:
        return "i" if x == 1 else f"{x}i"
    return str(x)


def format_poly(f: MultilinearPoly) -> str:
    """Canonical text: descending degree, lexicographic index tuples within a degree.

    A coefficient with both real and imaginary parts is written as two terms
    over the same monomial (the grammar's coefficients are pure), which the
    parser sums back together.
    """
    pieces = []
    for m in sorted(f._terms, key=_order_key):
        c = f._terms[m]
        mono = "*".join(f"x{j}" for j in sorted(mask_to_indices(m)))
        for part, imaginary in ((c.re, False), (c.im, True)):
            if part == 0:
                continue
            mag = _abs_coeff_text(part, imaginary)
            if not mono:
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append((part < 0, body))
    if not pieces:
        return "0"
    neg0, body0 = pieces[0]
    out = ["-" + body0 if neg0 else body0]
    for neg, body in pieces[1:]:
        out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


class _Parser:
    """Recursive descent over the polynomial grammar.

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := coeff ('*' varpow)* | varpow ('*' varpow)*
    coeff  := rational | rational 'i' | 'i'
    varpow := 'x' index ('^' posint)?
    """

    def __init__(self, text: str, ambient_n: int):
        self.text = text
        self.n = ambient_n
        self.pos = 0

    def error(self, msg, pos=None):
        raise ParseError(msg, self.pos if pos is None else pos)

    def skip(self):
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def digits(self):
        self.skip()
        start = self.pos
        t = self.text
        while self.pos < len(t) and t[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected digits")
        return int(t[start:self.pos]), start

    def parse(self) -> MultilinearPoly:
        out: dict[int, GaussianRational] = {}
        sign = 1
        ch = self.peek()
        if ch in "+-" and ch:
            sign = -1 if ch == "-" else 1
            self.pos += 1
        while True:
            mask, coef = self.term()
            coef = coef if sign > 0 else -coef
            prev = out.get(mask)
            out[mask] = coef if prev is None else prev + coef
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                self.error(f"unexpected character {ch!r}")
            sign = -1 if ch == "-" else 1
            self.pos += 1
        return MultilinearPoly._from_masks(self.n, {m: c for m, c in out.items() if c})

    def term(self):
        ch = self.peek()
        mask = 0
        if ch == "x":
            mask |= self.varpow()
        elif ch.isdigit() or ch == "i":
            coef = self.coeff()
            while self.peek() == "*":
                self.pos += 1
                mask |= self.varpow()
            return mask, coef
        else:
            self.error("expected a term" if ch else "unexpected end of input")
        while self.peek() == "*":
            self.pos += 1
            mask |= self.varpow()
        return mask, ONE

    def coeff(self):
        if self.peek() == "i":
            self.pos += 1
            return I
        num, _ = self.digits()
        den = 1
        if self.peek() == "/":
            self.pos += 1
            den, at = self.digits()
            if den == 0:
                self.error("zero denominator", at)
        value = Fraction(num, den)
        if self.peek() == "i":
            self.pos += 1
            return GaussianRational(0, value)
        return GaussianRational(value)

    def varpow(self):
        if self.peek() != "x":
            self.error("expected variable 'x<index>'")
        start = self.pos
        self.pos += 1
        if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
            self.error("expected variable index after 'x'")
        idx, _ = self.digits()
        if idx >= self.n:
            raise VariableIndexError(idx, self.n, start)
        if self.peek() == "^":
            self.pos += 1
            e, at = self.digits()
            if e == 0:
                self.error("exponent must be positive", at)
        return 1 << idx


def parse(text: str, ambient_n: int) -> MultilinearPoly:
    """Parse ``text`` into its reduced multilinear form (x0^2 becomes x0)."""
    return _Parser(text, ambient_n).parse()
