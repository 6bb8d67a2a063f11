"""Stiefel-Whitney calculus, sphere bundles and Thom spaces over F2.

Bases are spaces whose mod 2 cohomology ring is truncated polynomial on one
generator (``BaseSpace``), or unit sphere bundles over those
(``SphereBundleSpace``).  For a sphere bundle only the image of ``p^*`` carries
a ring structure; it is again a truncated polynomial ring, ``H^*(B)/(e)``,
and the shifted classes coming from ``ker(e)`` are tracked additively.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Union

from .algebra import (
    GradedF2Module,
    RingElement,
    TruncPolyRing,
    shift,
)

EQUIVALENT = "equivalent"
UNDETERMINED = "undetermined"


class IncompatibleBundlesError(ValueError):
    """Bundles (or a bundle and a space) live over different bases."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same class disagree."""


@dataclass(frozen=True)
class BaseSpace:
    name: str
    ring: TruncPolyRing

    @property
    def dimension(self) -> int:
        return self.ring.top_degree

    @property
    def cohomology(self) -> GradedF2Module:
        return self.ring.module()

    def euler_characteristic(self) -> int:
        return self.cohomology.euler_characteristic()


@dataclass(frozen=True)
class BundleDescriptor:
    """A real vector bundle, remembered by rank and total Stiefel-Whitney class."""

    base: Union[BaseSpace, "SphereBundleSpace"]
    rank: int
    total_sw: RingElement
    name: str = ""
    tangent: bool = False

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if self.total_sw.ring != self.base.ring:
            raise IncompatibleBundlesError("total SW class is not in the base ring")
        if not self.total_sw.coeffs[0]:
            raise ValueError("w_0 must be 1")
        r = self.total_sw.ring.generator_degree
        for k in self.total_sw.support():
            if k * r > self.rank:
                raise ValueError(f"w_{k * r} != 0 for a rank {self.rank} bundle")

    def w(self, i: int) -> RingElement:
        return self.total_sw.component_in_degree(i)

    @property
    def euler_class(self) -> RingElement:
        """Top SW class, i.e. the mod 2 Euler class."""
        return self.w(self.rank)

    def __str__(self):
        return self.name or f"rank {self.rank} bundle over {self.base.name}"


@dataclass(frozen=True)
class SphereBundleSpace:
    """Unit sphere bundle ``p: S(source) -> base``."""

    base: BaseSpace
    source_bundle: BundleDescriptor
    euler_class: RingElement
    cohomology: GradedF2Module
    ring: TruncPolyRing  # image of p^*, = H^*(base)/(e)

    @property
    def name(self) -> str:
        return f"S({self.source_bundle.name or 'xi'})"

    @property
    def dimension(self) -> int:
        return self.base.dimension + self.source_bundle.rank - 1

    def euler_characteristic(self) -> int:
        return self.cohomology.euler_characteristic()

    def pull(self, a: RingElement) -> RingElement:
        """``p^*`` on base classes."""
        if a.ring != self.base.ring:
            raise IncompatibleBundlesError("class does not live on the base")
        return self.ring.element(a.coeffs)


# -- constructors -------------------------------------------------------------


def trivial(base, k: int = 1) -> BundleDescriptor:
    return BundleDescriptor(base, k, base.ring.one(), name=f"eps^{k}" if k != 1 else "eps")


def whitney_sum(a: BundleDescriptor, b: BundleDescriptor) -> BundleDescriptor:
    if a.base != b.base:
        raise IncompatibleBundlesError(f"cannot add bundles over {a.base.name} and {b.base.name}")
    name = " + ".join(x.name for x in (a, b) if x.name and x.rank)
    return BundleDescriptor(a.base, a.rank + b.rank, a.total_sw * b.total_sw, name=name)


def multiple(b: BundleDescriptor, q: int) -> BundleDescriptor:
    """``q``-fold Whitney sum; ``q = 0`` gives the rank 0 bundle."""
    if q < 0:
        raise ValueError("q must be non-negative")
    if q == 0:
        return BundleDescriptor(b.base, 0, b.base.ring.one(), name="0")
    out = b
    for _ in range(q - 1):
        out = whitney_sum(out, b)
    name = b.name if q == 1 or not b.name else f"{q}{b.name}"
    return BundleDescriptor(out.base, out.rank, out.total_sw, name=name)


def sq_on_base(i: int, k: int, ring: TruncPolyRing) -> RingElement:
    """``Sq^i(x^k)``.

    The only nonzero operations on the generator are ``Sq^0 x = x`` and
    ``Sq^r x = x^2`` (the other targets are zero groups), so by Cartan
    ``Sq(x^k) = x^k (1 + x)^k``.
    """
    r = ring.generator_degree
    if i < 0 or i % r:
        return ring.zero()
    j = i // r
    return ring.monomial(k + j) if comb(k, j) % 2 else ring.zero()


def wu_total_sw(ring: TruncPolyRing) -> RingElement:
    """Total SW class of a closed manifold with this cohomology ring, via Wu.

    The Wu class ``v`` is fixed by ``Sq^i(y) = v_i y`` for ``|y| = dim - i``;
    then ``w = Sq(v)``.  Independent of any closed formula for ``w``.
    """
    h = ring.height
    v = ring.zero()
    for j in range(h):
        # the only class of degree dim - j*r is x^(h-1-j)
        if sq_on_base(j * ring.generator_degree, h - 1 - j, ring):
            v = v + ring.monomial(j)
    w = ring.zero()
    for j in v.support():
        for i in range(0, ring.top_degree + 1, ring.generator_degree):
            w = w + sq_on_base(i, j, ring)
    return w


def tangent_bundle(base: BaseSpace, total_sw: RingElement) -> BundleDescriptor:
    """Tangent bundle with catalog SW class, checked two independent ways.

    (i) the top class must equal chi(base) mod 2 times the top class of the base;
    (ii) it must agree with the Wu formula.
    """
    tau = BundleDescriptor(base, base.dimension, total_sw, name="tau", tangent=True)
    chi_top = base.ring.monomial(base.ring.height - 1) if base.euler_characteristic() % 2 else base.ring.zero()
    if tau.euler_class != chi_top:
        raise ConsistencyError(
            f"w_top(tau {base.name}) = {tau.euler_class}, but chi = {base.euler_characteristic()}"
        )
    wu = wu_total_sw(base.ring)
    if wu != total_sw:
        raise ConsistencyError(f"w(tau {base.name}) = {total_sw}, Wu formula gives {wu}")
    return tau


# -- Stiefel-Whitney vanishing ------------------------------------------------


@dataclass(frozen=True)
class SWDetermination:
    forced: bool
    rank: int
    unforced_degrees: tuple[int, ...]
    total_sw: RingElement | None = None


def sw_by_degree_vanishing(bundle_rank: int, base_module: GradedF2Module, ring: TruncPolyRing | None = None) -> SWDetermination:
    """Decide whether ``w(xi) = 1`` is forced for a rank ``bundle_rank`` bundle.

    ``w_j`` vanishes for ``j > rank`` by rank and for ``j <= rank`` whenever
    ``H^j(base) = 0``.  Degrees where neither applies are reported.
    """
    bad = tuple(j for j in range(1, bundle_rank + 1) if base_module.dim(j))
    forced = not bad
    return SWDetermination(forced, bundle_rank, bad, ring.one() if (forced and ring is not None) else None)


# -- Gysin --------------------------------------------------------------------


def _euler_multiplication(base: BaseSpace, e: RingElement):
    """Kernel monomials (by exponent) and image monomials of ``. e`` on H^*(base)."""
    ring = base.ring
    kernel, image = [], set()
    for k in range(ring.height):
        prod = ring.monomial(k) * e
        if prod:
            # one class per degree, so a nonzero product is a monomial
            (j,) = prod.support()
            image.add(j)
        else:
            kernel.append(k)
    cokernel = [k for k in range(ring.height) if k not in image]
    return kernel, cokernel


def gysin_sphere(source: BundleDescriptor) -> SphereBundleSpace:
    """Mod 2 cohomology of the unit sphere bundle from the Gysin sequence.

    ``H^k(S) = coker(e)^k + ker(e)^(k - rank + 1)``.
    """
    base = source.base
    if not isinstance(base, BaseSpace):
        raise TypeError("only sphere bundles over a BaseSpace are supported")
    ring = base.ring
    e = source.euler_class
    if source.tangent:
        chi_top = ring.monomial(ring.height - 1) if base.euler_characteristic() % 2 else ring.zero()
        if e != chi_top:
            raise ConsistencyError(f"Euler class {e} disagrees with chi = {base.euler_characteristic()}")
    kernel, cokernel = _euler_multiplication(base, e)
    r, n = ring.generator_degree, source.rank
    labels: dict[int, list[str]] = {}
    for k in cokernel:
        labels.setdefault(k * r, []).append("p*" + ring.monomial_name(k))
    for k in kernel:
        labels.setdefault(k * r + n - 1, []).append(ring.monomial_name(k) + "*s")
    # ideal (e) is spanned by x^j, j >= min(image); the quotient is truncated again
    height = min((k for k in range(ring.height) if k not in cokernel), default=ring.height)
    pull_ring = TruncPolyRing(r, height, ring.var)
    return SphereBundleSpace(base, source, e, GradedF2Module.from_labels(labels), pull_ring)


def gysin_accounting(S: SphereBundleSpace) -> dict[int, tuple[int, int]]:
    """Exactness bookkeeping for the Gysin sequence, degree by degree.

    Returns ``k -> (lhs, rhs)`` with
    ``lhs = dim H^k(S) + dim im(e)^k + dim im(e)^(k+1)`` and
    ``rhs = dim H^k(B) + dim H^(k-n+1)(B)``, images indexed by target degree.
    These agree iff the sequence is exact at every spot.
    """
    base, n = S.base, S.source_bundle.rank
    B = base.cohomology
    e = S.euler_class
    im: dict[int, int] = {}
    for d in B.degrees():
        k = d // base.ring.generator_degree
        if base.ring.monomial(k) * e:
            im[d + n] = im.get(d + n, 0) + 1
    top = S.dimension + 1
    out = {}
    for k in range(-1, top + 1):
        lhs = S.cohomology.dim(k) + im.get(k, 0) + im.get(k + 1, 0)
        rhs = B.dim(k) + B.dim(k - n + 1)
        out[k] = (lhs, rhs)
    return out


def pullback(b: BundleDescriptor, S: SphereBundleSpace) -> BundleDescriptor:
    if b.base != S.base:
        raise IncompatibleBundlesError(f"{b} does not live over {S.base.name}")
    name = f"p*({b.name})" if b.name else ""
    return BundleDescriptor(S, b.rank, S.pull(b.total_sw), name=name)


# -- Thom spaces --------------------------------------------------------------


@dataclass(frozen=True)
class ThomModule:
    """Reduced mod 2 cohomology of ``Th(bundle)`` with ``Sq^i(u) = w_i u``."""

    bundle: BundleDescriptor
    module: GradedF2Module
    sq_on_u: tuple[tuple[int, RingElement], ...]

    @property
    def thom_class_degree(self) -> int:
        return self.bundle.rank

    def sq(self, i: int, k: int) -> RingElement:
        """``Sq^i(x^k u)`` as the coefficient of ``u``, by the Cartan formula.

        Only defined on classes pulled back from the ring of the base.
        """
        ring = self.bundle.base.ring
        w = dict(self.sq_on_u)
        out = ring.zero()
        for a in range(i + 1):
            wb = w.get(i - a)
            if wb is None:
                continue
            out = out + sq_on_base(a, k, ring) * wb
        return out

    def sq_table(self) -> dict[tuple[int, int], RingElement]:
        ring = self.bundle.base.ring
        top = ring.top_degree + self.bundle.rank
        return {(i, k): self.sq(i, k) for k in range(ring.height) for i in range(1, top + 1)}


def thom(b: BundleDescriptor) -> ThomModule:
    base_mod = b.base.cohomology
    labels = {d: tuple(f"{l}*u" if l != "1" and l != "p*1" else "u" for l in base_mod.basis(d)) for d in base_mod.degrees()}
    module = shift(GradedF2Module(base_mod.dims, labels), b.rank)
    r = b.total_sw.ring.generator_degree
    sq = tuple((k * r, b.total_sw.component(k)) for k in b.total_sw.support())
    return ThomModule(b, module, sq)


def cofiber_module(xi1: BundleDescriptor, xi2: BundleDescriptor) -> GradedF2Module:
    """Cohomology of the cofiber of ``Th(xi1) -> Th(xi1 + xi2)``.

    In cohomology the map is multiplication by ``e = w_top(xi2)`` under the Thom
    isomorphisms, so the cofiber sees ``ker(e)`` (source degree ``d``) in degree
    ``d + rank1 + rank2`` and ``coker(e)`` (target degree ``d``) in degree
    ``d + rank1 + 1``.
    """
    if xi1.base != xi2.base:
        raise IncompatibleBundlesError("cofiber needs bundles over a common base")
    base = xi1.base
    if not isinstance(base, BaseSpace):
        raise TypeError("cofiber_module needs a BaseSpace")
    ring = base.ring
    kernel, cokernel = _euler_multiplication(base, xi2.euler_class)
    r = ring.generator_degree
    n1, n2 = xi1.rank, xi2.rank
    labels: dict[int, list[str]] = {}
    for k in cokernel:
        labels.setdefault(k * r + n1 + 1, []).append(f"d({ring.monomial_name(k)}*u1)")
    for k in kernel:
        labels.setdefault(k * r + n1 + n2, []).append(f"{ring.monomial_name(k)}*u12")
    return GradedF2Module.from_labels(labels)


def steenrod_equiv_criterion(a: BundleDescriptor, b: BundleDescriptor) -> str:
    """Sufficient test for ``H^*(Th a) = H^*(Th b)`` as Steenrod modules.

    Equal rank and equal total SW class give matching ``Sq^i(u)``, hence
    isomorphic modules.  Otherwise nothing is concluded.
    """
    if a.base != b.base:
        raise IncompatibleBundlesError("criterion needs a common base")
    if a.rank == b.rank and a.total_sw == b.total_sw:
        return EQUIVALENT
    return UNDETERMINED


__all__ = [
    "BaseSpace",
    "BundleDescriptor",
    "SphereBundleSpace",
    "ThomModule",
    "SWDetermination",
    "IncompatibleBundlesError",
    "ConsistencyError",
    "EQUIVALENT",
    "UNDETERMINED",
    "trivial",
    "whitney_sum",
    "multiple",
    "sq_on_base",
    "wu_total_sw",
    "tangent_bundle",
    "sw_by_degree_vanishing",
    "gysin_sphere",
    "gysin_accounting",
    "pullback",
    "thom",
    "cofiber_module",
    "steenrod_equiv_criterion",
]
