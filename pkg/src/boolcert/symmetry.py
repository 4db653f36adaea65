"""Variable permutations, permuted systems and the set stabilizer of a system."""

from __future__ import annotations

import itertools
import json
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AmbientMismatchError, CapExceededError, CertificateError, ParseError
from .ring import MultilinearPoly

DEFAULT_GROUP_CAP = 8
HARD_GROUP_CAP = 10  # 10! = 3.6M permutations is the most a full scan will attempt


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``range(n)``; ``images[i]`` is sigma(i)."""

    images: tuple

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {list(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(n))
        images[i], images[j] = images[j], images[i]
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Read the one-line image form ``[2,0,1]``."""
        try:
            images = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad permutation text {text!r}", exc.pos) from None
        if not isinstance(images, list) or not all(isinstance(v, int) for v in images):
            raise ParseError(f"bad permutation text {text!r}")
        try:
            return cls(tuple(images))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def inverse(self) -> "Permutation":
        return invert(self)

    def map_mask(self, mask: int) -> int:
        return _map_mask(self.images, mask)

    def act_on_point(self, point: Sequence) -> tuple:
        """The permuted coordinates ``b o sigma``: entry i is ``point[sigma(i)]``."""
        if len(point) != self.n:
            raise AmbientMismatchError(f"point of length {len(point)} vs permutation of {self.n}")
        return tuple(point[v] for v in self.images)

    def __str__(self):
        return "[" + ",".join(str(v) for v in self.images) + "]"


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """(sigma o tau)(i) = sigma(tau(i))."""
    if sigma.n != tau.n:
        raise AmbientMismatchError(f"cannot compose permutations of {sigma.n} and {tau.n}")
    s = sigma.images
    return Permutation(tuple(s[t] for t in tau.images))


def invert(sigma: Permutation) -> Permutation:
    inv = [0] * sigma.n
    for i, v in enumerate(sigma.images):
        inv[v] = i
    return Permutation(tuple(inv))


def apply(sigma: Permutation, f: MultilinearPoly) -> MultilinearPoly:
    """Rename variables: each monomial's index set S becomes sigma(S).

    This is a left action: apply(sigma * tau, f) == apply(sigma, apply(tau, f)).
    Evaluating the result at b equals evaluating f at ``sigma.act_on_point(b)``.
    """
    if sigma.n != f.ambient_n:
        raise AmbientMismatchError(
            f"permutation on {sigma.n} points applied to polynomial in {f.ambient_n} variables"
        )
    mm = sigma.map_mask
    return MultilinearPoly._from_masks(f.ambient_n, {mm(m): c for m, c in f.mask_items()})


def enumerate_group(n: int, cap: int = DEFAULT_GROUP_CAP) -> list[Permutation]:
    """All n! permutations in lexicographic order of their image tuples."""
    if n > cap:
        raise CapExceededError("group", f"Sigma_{n} (n={n})", cap)
    return [Permutation(p) for p in itertools.permutations(range(n))]


@dataclass(frozen=True)
class PolySystem:
    """An ordered, named family of polynomials over a common ring."""

    ambient_n: int
    polys: tuple  # of (name, MultilinearPoly)

    def __post_init__(self):
        polys = tuple((str(name), f) for name, f in self.polys)
        object.__setattr__(self, "polys", polys)
        if not polys:
            raise ValueError("a system needs at least one polynomial")
        names = [name for name, _ in polys]
        if len(set(names)) != len(names):
            raise ValueError("polynomial names must be unique")
        for name, f in polys:
            if f.ambient_n != self.ambient_n:
                raise AmbientMismatchError(
                    f"{name} lives in {f.ambient_n} variables, system has {self.ambient_n}"
                )

    @classmethod
    def of(cls, ambient_n: int, polys: Iterable[MultilinearPoly], prefix: str = "f") -> "PolySystem":
        return cls(ambient_n, tuple((f"{prefix}{k}", f) for k, f in enumerate(polys)))

    @property
    def K(self) -> int:
        return len(self.polys)

    @property
    def n_terms(self) -> int:
        """The largest term count among the members."""
        return max(f.term_count for _, f in self.polys)

    @property
    def names(self) -> list[str]:
        return [name for name, _ in self.polys]

    @property
    def polynomials(self) -> list[MultilinearPoly]:
        return [f for _, f in self.polys]

    def as_set(self) -> frozenset:
        return frozenset(f for _, f in self.polys)

    def vanishes_at_mask(self, point_mask: int) -> bool:
        return all(not f.eval_mask(point_mask) for _, f in self.polys)

    def vanishes_at(self, point: Sequence) -> bool:
        return all(not f(point) for _, f in self.polys)


@dataclass(frozen=True)
class DestabilizerSet:
    """The permutations that move the system, in enumeration order."""

    members: tuple
    stab_order: int
    ambient_n: int

    @property
    def c(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


def permuted_system(f_sys: PolySystem, sigma: Permutation) -> PolySystem:
    if sigma.n != f_sys.ambient_n:
        raise AmbientMismatchError(
            f"permutation on {sigma.n} points vs system in {f_sys.ambient_n} variables"
        )
    return PolySystem(f_sys.ambient_n, tuple((name, apply(sigma, f)) for name, f in f_sys.polys))


def _map_mask(images: tuple, mask: int) -> int:
    out = 0
    j = 0
    while mask:
        if mask & 1:
            out |= 1 << images[j]
        mask >>= 1
        j += 1
    return out


def _fixes(images: tuple, pairs: list, target: frozenset) -> bool:
    # apply is injective, so image set == target iff every image lies in target
    for n, items in pairs:
        img = MultilinearPoly._from_masks(n, {_map_mask(images, m): c for m, c in items})
        if img not in target:
            return False
    return True


def _scan_chunk(args):
    chunk, polys = args
    target = frozenset(polys)
    pairs = [(f.ambient_n, list(f.mask_items())) for f in polys]
    return [_fixes(images, pairs, target) for images in chunk]


def stabilizer(
    f_sys: PolySystem, cap: int = DEFAULT_GROUP_CAP, workers: int = 1, verify: bool = True
) -> tuple[list[Permutation], DestabilizerSet]:
    """Split Sigma_N into the set stabilizer of F and its complement.

    A permutation stabilizes F when the set of permuted polynomials equals the
    set of original ones, compared exactly (names and order are ignored, and
    scalar multiples count as different polynomials).
    """
    n = f_sys.ambient_n
    if cap > HARD_GROUP_CAP:
        raise CapExceededError("group cap", cap, HARD_GROUP_CAP)
    if n > cap:
        raise CapExceededError("group", f"Sigma_{n} (n={n})", cap)
    polys = list(f_sys.as_set())
    perms = list(itertools.permutations(range(n)))
    if workers > 1 and len(perms) > 1000:
        size = math.ceil(len(perms) / workers)
        chunks = [(perms[i:i + size], polys) for i in range(0, len(perms), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flags = [flag for part in pool.map(_scan_chunk, chunks) for flag in part]
    else:
        flags = _scan_chunk((perms, polys))
    stab, destab = [], []
    for images, fixed in zip(perms, flags):
        (stab if fixed else destab).append(Permutation(images))
    if len(stab) + len(destab) != math.factorial(n):
        raise CertificateError("stabilizer partition does not cover Sigma_N")
    if verify:
        check_subgroup(stab, n)
    return stab, DestabilizerSet(tuple(destab), len(stab), n)


# pairwise closure is quadratic; above this order a seeded sample is checked
_FULL_CLOSURE_LIMIT = 720


def check_subgroup(members: Sequence[Permutation], n: int, samples: int = 20000) -> None:
    """Raise CertificateError unless ``members`` is a subgroup of Sigma_n."""
    group = set(members)
    if Permutation.identity(n) not in group:
        raise CertificateError("stabilizer does not contain the identity")
    if math.factorial(n) % len(group):
        raise CertificateError("stabilizer order does not divide n!")
    for s in members:
        if invert(s) not in group:
            raise CertificateError(f"stabilizer not closed under inverse at {s}")
    if len(members) <= _FULL_CLOSURE_LIMIT:
        pairs = itertools.product(members, repeat=2)
    else:
        rng = random.Random(len(members))
        pairs = ((rng.choice(members), rng.choice(members)) for _ in range(samples))
    for s, t in pairs:
        if compose(s, t) not in group:
            raise CertificateError(f"stabilizer not closed under composition at {s}, {t}")
