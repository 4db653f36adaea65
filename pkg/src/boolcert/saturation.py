"""Products of all moved copies of each polynomial, and the system they form."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

from .errors import AmbientMismatchError, CertificateError
from .ring import ONE, ZERO, MultilinearPoly, cube_values, from_cube_values
from .symmetry import DestabilizerSet, PolySystem, stabilizer


def symmetrized_product(f: MultilinearPoly, destab: DestabilizerSet) -> MultilinearPoly:
    """Product of ``apply(sigma, f)`` over the destabilizer, reduced mod x^2 - x.

    An empty destabilizer returns ``f`` itself rather than the empty product 1;
    the unit would erase the polynomial from the system.

    The product is formed pointwise on the cube: g(b) is the product of
    f(sigma . b) over sigma in D, so only the multiplicity of each image point
    matters.  This gives the same polynomial as multiplying the c copies out,
    at a cost that does not grow with the copies' coefficient sizes.
    """
    if destab.ambient_n != f.ambient_n:
        raise AmbientMismatchError(
            f"destabilizer on {destab.ambient_n} points vs polynomial in {f.ambient_n} variables"
        )
    if not destab.members:
        return f
    n = f.ambient_n
    vals = cube_values(f)
    out = []
    for counts in _image_counts(destab):
        acc = ONE
        for point, k in counts.items():
            v = vals[point]
            if not v:
                acc = ZERO
                break
            acc = acc * v ** k
        out.append(acc)
    return from_cube_values(n, out)


def _point_image(images: tuple, b: int) -> int:
    # (sigma . b)_i = b_{sigma(i)}
    out = 0
    for i, si in enumerate(images):
        if b >> si & 1:
            out |= 1 << i
    return out


def _image_counts(destab: DestabilizerSet) -> list:
    """For each point mask b, how many sigma in D send b to each image point."""
    n = destab.ambient_n
    size = 1 << n
    complement_ok = destab.c + destab.stab_order == math.factorial(n)
    if destab.c <= destab.stab_order or not complement_ok:
        counts = [Counter() for _ in range(size)]
        for sigma in destab.members:
            for b in range(size):
                counts[b][_point_image(sigma.images, b)] += 1
        return counts
    # D is the larger side: count over all of Sigma_N and subtract the stabilizer.
    # Sigma_N sends b to every point of the same weight w exactly w!(n-w)! times.
    by_weight = {}
    for p in range(size):
        by_weight.setdefault(p.bit_count(), []).append(p)
    counts = []
    for b in range(size):
        w = b.bit_count()
        full = math.factorial(w) * math.factorial(n - w)
        counts.append(Counter({p: full for p in by_weight[w]}))
    moved = {sigma.images for sigma in destab.members}
    for images in itertools.permutations(range(n)):
        if images in moved:
            continue
        for b in range(size):
            c = counts[b]
            p = _point_image(images, b)
            c[p] -= 1
            if not c[p]:
                del c[p]
    return counts


def term_bound(n_terms: int, c: int) -> int:
    """Largest term count a product of c copies of an n_terms polynomial may have."""
    return n_terms if c == 0 else n_terms ** c


def _bound_text(n_terms: int, c: int) -> str:
    # decimal while short, otherwise the power itself
    if c == 0 or n_terms <= 1 or c * math.log10(n_terms) < 40:
        return str(term_bound(n_terms, c))
    return f"{n_terms}^{c}"


@dataclass(frozen=True)
class SaturatedSystem:
    source: PolySystem
    destab: DestabilizerSet
    g_polys: tuple

    @property
    def ambient_n(self) -> int:
        return self.source.ambient_n

    @property
    def c(self) -> int:
        return self.destab.c

    @property
    def term_counts(self) -> list[int]:
        return [g.term_count for g in self.g_polys]

    @property
    def bounds(self) -> list[int]:
        return [term_bound(f.term_count, self.c) for f in self.source.polynomials]

    def as_system(self) -> PolySystem:
        return PolySystem(
            self.ambient_n,
            tuple((f"{name}_sat", g) for name, g in zip(self.source.names, self.g_polys)),
        )

    def summary(self) -> dict:
        return {
            "c": self.c,
            "stab_order": self.destab.stab_order,
            "term_counts": self.term_counts,
            "term_bounds": [
                _bound_text(f.term_count, self.c) for f in self.source.polynomials
            ],
            "bound_ok": all(t <= b for t, b in zip(self.term_counts, self.bounds)),
            "square_free": True,
        }


def build_g(f_sys: PolySystem, destab: DestabilizerSet) -> SaturatedSystem:
    g_polys = []
    for name, f in f_sys.polys:
        g = symmetrized_product(f, destab)
        g.check_invariants()
        bound = term_bound(f.term_count, destab.c)
        if g.term_count > bound:
            raise CertificateError(
                f"{name}: product has {g.term_count} terms, exceeding the bound {bound}"
            )
        g_polys.append(g)
    return SaturatedSystem(f_sys, destab, tuple(g_polys))


def saturate(f_sys: PolySystem, group_cap: int = 8, workers: int = 1) -> SaturatedSystem:
    _, destab = stabilizer(f_sys, cap=group_cap, workers=workers)
    return build_g(f_sys, destab)
