"""Rank one symmetric spaces and the Morse-theoretic splitting of their free loop spaces.

Each catalog entry records the isotropy data ``H subset K1, K2`` of a simple
closed geodesic; from it come the conjugate point schedule, the Morse index of
the m-fold geodesic, the negative bundle over ``S(tau)`` and the cohomology of
each wedge summand.  The second description (cofibers of ``Th(q tau) ->
Th((q+1) tau)``) is assembled independently for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .algebra import GradedF2Module, TruncPolyRing, binom_expand, direct_sum, poincare, shift
from .bundles import (
    EQUIVALENT,
    BaseSpace,
    BundleDescriptor,
    SphereBundleSpace,
    cofiber_module,
    gysin_sphere,
    multiple,
    pullback,
    steenrod_equiv_criterion,
    sw_by_degree_vanishing,
    tangent_bundle,
    thom,
    trivial,
    whitney_sum,
)

SPACES = ("CPn", "HPn", "OP2")
K1, K2 = "K1", "K2"


class WindowIncompleteError(ValueError):
    def __init__(self, required: int, what: str = "max_winding"):
        super().__init__(f"window incomplete: need {what} >= {required}")
        self.required = required


class DescriptionMismatchError(RuntimeError):
    pass


def dim_unitary(k: int) -> int:
    return k * k


def dim_symplectic(k: int) -> int:
    return k * (2 * k + 1)


def dim_spin(k: int) -> int:
    return k * (k - 1) // 2


@dataclass(frozen=True)
class SymmetricSpaceEntry:
    name: str
    n: int
    r: int
    dim_H: int
    dim_K1: int
    dim_K2: int
    base: BaseSpace = field(compare=False)
    tau: BundleDescriptor = field(compare=False)
    eta: BundleDescriptor = field(compare=False)

    @property
    def dim_M(self) -> int:
        return self.r * self.n

    @property
    def w1_rank(self) -> int:
        return self.dim_K1 - self.dim_H

    @property
    def w2_rank(self) -> int:
        return self.dim_K2 - self.dim_H

    @property
    def space_id(self) -> str:
        return {"CPn": "cpn", "HPn": "hpn", "OP2": "op2"}[self.name]

    @property
    def label(self) -> str:
        return "OP2" if self.name == "OP2" else f"{self.name[:2]}{self.n}"

    @cached_property
    def sphere_bundle(self) -> SphereBundleSpace:
        return gysin_sphere(self.tau)

    def eta_multiplicity(self, m: int) -> int:
        # CPn: the single trivial line of the negative bundle; otherwise m copies of eta
        return 1 if self.name == "CPn" else m

    def desuspension(self, m: int) -> int:
        return 0 if self.name == "CPn" else m - 1


def catalog(name: str, n: int = 2) -> SymmetricSpaceEntry:
    """Catalog entry for ``CPn``, ``HPn`` (``n >= 2``) or ``OP2``."""
    if name not in SPACES:
        raise ValueError(f"unknown space {name!r}; expected one of {SPACES}")
    if name == "OP2":
        if n != 2:
            raise ValueError("OP2 only exists for n = 2")
    elif n < 2:
        raise ValueError("theorems require n >= 2")

    if name == "CPn":
        ring = TruncPolyRing(2, n + 1)
        w_tau = binom_expand(n + 1, ring)
        dim_H, dim_K1, dim_K2 = dim_unitary(n - 1), dim_unitary(n - 1) + dim_unitary(1), dim_unitary(n)
    elif name == "HPn":
        ring = TruncPolyRing(4, n + 1, "u")
        w_tau = binom_expand(n + 1, ring)
        sp1 = dim_symplectic(1)
        dim_H = dim_symplectic(n - 1) + sp1
        dim_K1, dim_K2 = dim_H + sp1, dim_symplectic(n) + sp1
    else:
        ring = TruncPolyRing(8, 3)
        w_tau = ring.element([1, 1, 1])
        # K2/H is the unit tangent sphere S^15
        dim_K2, dim_K1 = dim_spin(9), dim_spin(8)
        dim_H = dim_K2 - (ring.top_degree - 1)
        if dim_H != dim_spin(7):
            raise AssertionError("dim H should be dim Spin(7)")

    base = BaseSpace(f"{name[:2]}{n}" if name != "OP2" else "OP2", ring)
    tau = tangent_bundle(base, w_tau)
    w1 = dim_K1 - dim_H
    if name == "CPn":
        eta = trivial(base, 1)
    else:
        det = sw_by_degree_vanishing(w1, base.cohomology, ring)
        if not det.forced:
            raise AssertionError(f"w(eta) not forced by degrees {det.unforced_degrees}")
        eta = BundleDescriptor(base, w1, det.total_sw, name="eta")
    entry = SymmetricSpaceEntry(name, n, ring.generator_degree, dim_H, dim_K1, dim_K2, base, tau, eta)
    if entry.w2_rank != entry.dim_M - 1:
        raise AssertionError("K2/H must be the unit tangent sphere")
    return entry


def conjugate_schedule(m: int) -> list[str]:
    """Isotropy labels of the interior conjugate points of the m-fold geodesic."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return [K1 if i % 2 else K2 for i in range(1, 2 * m)]


def morse_index(entry: SymmetricSpaceEntry, m: int) -> int:
    """Sum of ``dim K_i/H`` over the conjugate point schedule."""
    dims = {K1: entry.w1_rank, K2: entry.w2_rank}
    return sum(dims[label] for label in conjugate_schedule(m))


def energy_ratio(m: int) -> int:
    """Energy of the m-fold geodesic in units of the simple one."""
    return m * m


def negative_bundle(entry: SymmetricSpaceEntry, m: int) -> tuple[BundleDescriptor, int]:
    """Negative bundle over ``S(tau)`` of the m-fold stratum and its desuspension."""
    if m < 1:
        raise ValueError("m must be >= 1")
    S = entry.sphere_bundle
    on_base = whitney_sum(multiple(entry.tau, m - 1), multiple(entry.eta, entry.eta_multiplicity(m)))
    xi = pullback(on_base, S)
    desusp = entry.desuspension(m)
    if xi.rank - desusp != morse_index(entry, m):
        raise AssertionError(f"rank - desuspension != index for m={m}")
    return xi, desusp


@dataclass(frozen=True)
class CriticalStratum:
    m: int
    energy_ratio: int
    conjugate_labels: tuple[str, ...]
    index: int
    negative_bundle: BundleDescriptor
    desuspension: int
    summand: GradedF2Module

    @property
    def rank(self) -> int:
        return self.negative_bundle.rank


def stratum(entry: SymmetricSpaceEntry, m: int) -> CriticalStratum:
    xi, desusp = negative_bundle(entry, m)
    summand = shift(thom(xi).module, -desusp)
    return CriticalStratum(
        m, energy_ratio(m), tuple(conjugate_schedule(m)), morse_index(entry, m), xi, desusp, summand
    )


def required_winding(entry: SymmetricSpaceEntry, max_degree: int) -> int:
    """Largest m whose stratum meets ``[0, max_degree]`` (0 if none does)."""
    if morse_index(entry, 1) < 1:
        raise AssertionError("nonconstant local minimum: index of the simple geodesic is 0")
    m = 0
    while morse_index(entry, m + 1) <= max_degree:
        m += 1
    return m


@dataclass(frozen=True)
class SplittingDescription:
    space: SymmetricSpaceEntry
    constant_summand: GradedF2Module
    strata: tuple[CriticalStratum, ...]
    max_degree: int

    @property
    def window(self) -> tuple[int, int]:
        return (0, self.max_degree)

    @property
    def module(self) -> GradedF2Module:
        return direct_sum([self.constant_summand, *(s.summand for s in self.strata)])

    def poincare(self):
        # infinitely many summands: nothing is exact beyond the window
        p = poincare(self.module, self.max_degree)
        return type(p)(p.max_degree, p.coeffs, False)


def assemble_splitting(entry: SymmetricSpaceEntry, max_winding: int | None, max_degree: int, workers: int = 1) -> SplittingDescription:
    """Wedge decomposition of the loop space cohomology, truncated to a window."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    needed = required_winding(entry, max_degree)
    if max_winding is None:
        max_winding = needed
    elif max_winding < needed:
        raise WindowIncompleteError(needed)
    ms = range(1, max_winding + 1)
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(workers) as pool:
            strata = list(pool.map(lambda m: stratum(entry, m), ms))
    else:
        strata = [stratum(entry, m) for m in ms]
    strata.sort(key=lambda s: s.m)
    return SplittingDescription(entry, entry.base.cohomology, tuple(strata), max_degree)


# -- the cofiber description ---------------------------------------------------


def cofiber_term(entry: SymmetricSpaceEntry, q: int) -> GradedF2Module:
    """``C_q`` suspended by ``(r-2)(q+1)``."""
    tau = entry.tau
    return shift(cofiber_module(multiple(tau, q), tau), (entry.r - 2) * (q + 1))


def thom_form_bundle(entry: SymmetricSpaceEntry, m: int) -> BundleDescriptor:
    """``p^*((m-1) tau + m eps^(r-1))`` over ``S(tau)``."""
    S = entry.sphere_bundle
    on_base = whitney_sum(multiple(entry.tau, m - 1), trivial(entry.base, m * (entry.r - 1)))
    return pullback(on_base, S)


def thom_form_term(entry: SymmetricSpaceEntry, m: int) -> GradedF2Module:
    return shift(thom(thom_form_bundle(entry, m)).module, -(m - 1))


def _terms_until(make, start: int, max_degree: int, limit: int | None, what: str):
    """Collect ``make(start), make(start+1), ...`` while they meet the window.

    Bottom degrees must increase strictly, which makes stopping safe.
    """
    terms = []
    k, last_bottom = start, None
    while True:
        t = make(k)
        bottom = t.bottom_degree
        if last_bottom is not None and bottom <= last_bottom:
            raise AssertionError("bottom degrees of the terms must increase strictly")
        if bottom > max_degree:
            break
        terms.append(t)
        last_bottom = bottom
        k += 1
    needed = k - 1
    if limit is not None:
        if limit < needed:
            raise WindowIncompleteError(needed, what)
        terms.extend(make(j) for j in range(k, limit + 1))
    return terms


def bo_thom_form(entry: SymmetricSpaceEntry, max_degree: int, max_m: int | None = None) -> GradedF2Module:
    terms = _terms_until(lambda m: thom_form_term(entry, m), 1, max_degree, max_m, "max_m")
    return direct_sum([entry.base.cohomology, *terms])


def bo_description(entry: SymmetricSpaceEntry, max_q: int | None, max_degree: int) -> GradedF2Module:
    """Cofiber description ``H^*(X) + sum_q Sigma^((r-2)(q+1)) C_q``.

    The rewritten form via Thom spaces over ``S(tau)`` is built as well and the
    two must agree degree by degree on the window.
    """
    terms = _terms_until(lambda q: cofiber_term(entry, q), 0, max_degree, max_q, "max_q")
    cof = direct_sum([entry.base.cohomology, *terms])
    rewritten = bo_thom_form(entry, max_degree)
    if poincare(cof, max_degree).coeffs != poincare(rewritten, max_degree).coeffs:
        raise DescriptionMismatchError(f"cofiber and Thom forms differ for {entry.label}")
    return cof


def stable_criterion(entry: SymmetricSpaceEntry, m: int) -> str:
    """Steenrod criterion between the m-th negative bundle and the Thom-form bundle.

    Both are compared after adding trivial lines so that the desuspensions agree.
    """
    xi, desusp = negative_bundle(entry, m)
    other = thom_form_bundle(entry, m)
    pad = (m - 1) - desusp
    if pad:
        xi = whitney_sum(xi, trivial(xi.base, pad))
    return steenrod_equiv_criterion(xi, other)


def eta_pullback_criterion(entry: SymmetricSpaceEntry, m: int) -> str:
    """``p^*(m eta)`` against ``eps^(m w1)`` over ``S(tau)``."""
    S = entry.sphere_bundle
    a = pullback(multiple(entry.eta, m), S)
    b = trivial(S, m * entry.w1_rank)
    return steenrod_equiv_criterion(a, b)


__all__ = [
    "SPACES",
    "K1",
    "K2",
    "EQUIVALENT",
    "SymmetricSpaceEntry",
    "CriticalStratum",
    "SplittingDescription",
    "WindowIncompleteError",
    "DescriptionMismatchError",
    "catalog",
    "conjugate_schedule",
    "morse_index",
    "energy_ratio",
    "negative_bundle",
    "stratum",
    "required_winding",
    "assemble_splitting",
    "cofiber_term",
    "thom_form_bundle",
    "thom_form_term",
    "bo_thom_form",
    "bo_description",
    "stable_criterion",
    "eta_pullback_criterion",
]
