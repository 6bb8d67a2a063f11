"""Graded linear algebra over F2.

Graded modules are finite tables ``degree -> dimension`` (degrees in Z), truncated
polynomial rings are ``F2[x]/(x^h)`` with ``|x| = r``, and Poincare series are
explicit finite windows of coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class GradedF2Module:
    """A finite dimensional Z-graded F2 vector space.

    ``dims`` maps degree to (strictly positive) dimension; ``labels``, when
    present, names a basis in each degree.
    """

    dims: Mapping[int, int] = field(default_factory=dict)
    labels: Mapping[int, tuple[str, ...]] | None = None

    def __post_init__(self):
        dims = {}
        for d, k in self.dims.items():
            if k < 0:
                raise ValueError(f"negative dimension {k} in degree {d}")
            if k:
                dims[int(d)] = int(k)
        object.__setattr__(self, "dims", dict(sorted(dims.items())))
        if self.labels is not None:
            labels = {int(d): tuple(ls) for d, ls in self.labels.items() if ls}
            if {d: len(ls) for d, ls in labels.items()} != self.dims:
                raise ValueError("label counts must match dimensions degree by degree")
            object.__setattr__(self, "labels", dict(sorted(labels.items())))

    @classmethod
    def from_labels(cls, labels: Mapping[int, Sequence[str]]) -> GradedF2Module:
        return cls({d: len(ls) for d, ls in labels.items()}, labels)

    def dim(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    def degrees(self) -> list[int]:
        return list(self.dims)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    @property
    def is_zero(self) -> bool:
        return not self.dims

    @property
    def bottom_degree(self) -> int | None:
        return min(self.dims) if self.dims else None

    @property
    def top_degree(self) -> int | None:
        return max(self.dims) if self.dims else None

    def euler_characteristic(self) -> int:
        return sum((-1) ** (d % 2) * k for d, k in self.dims.items())

    def basis(self, degree: int) -> tuple[str, ...]:
        if self.labels is None:
            return tuple(f"b{degree}_{i}" for i in range(self.dim(degree)))
        return self.labels.get(degree, ())

    def __repr__(self):
        return f"GradedF2Module({self.dims})"


def shift(M: GradedF2Module, s: int) -> GradedF2Module:
    """Suspend ``M`` by ``s`` (negative ``s`` desuspends)."""
    dims = {d + s: k for d, k in M.dims.items()}
    labels = None if M.labels is None else {d + s: ls for d, ls in M.labels.items()}
    return GradedF2Module(dims, labels)


def direct_sum(Ms: Iterable[GradedF2Module]) -> GradedF2Module:
    Ms = list(Ms)
    dims: dict[int, int] = {}
    for M in Ms:
        for d, k in M.dims.items():
            dims[d] = dims.get(d, 0) + k
    labels = None
    if Ms and all(M.labels is not None for M in Ms):
        labels = {}
        for M in Ms:
            for d, ls in M.labels.items():
                labels[d] = labels.get(d, ()) + tuple(ls)
    return GradedF2Module(dims, labels)


@dataclass(frozen=True)
class PoincareSeries:
    """Coefficients of ``sum_d dim(H^d) t^d`` for ``0 <= d <= max_degree``."""

    max_degree: int
    coeffs: tuple[int, ...]
    exact_beyond_window: bool = True

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError("window must be [0, D] with D >= 0")
        if len(self.coeffs) != self.max_degree + 1:
            raise ValueError("need one coefficient per degree in the window")

    @property
    def window(self) -> tuple[int, int]:
        return (0, self.max_degree)

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d]

    def __add__(self, other: PoincareSeries) -> PoincareSeries:
        if self.max_degree != other.max_degree:
            raise ValueError("windows differ")
        return PoincareSeries(
            self.max_degree,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
            self.exact_beyond_window and other.exact_beyond_window,
        )

    def sparse(self) -> list[list[int]]:
        return [[d, c] for d, c in enumerate(self.coeffs) if c]

    def __str__(self):
        terms = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if d == 0 else ("t" if d == 1 else f"t^{d}")
            terms.append(mono if c == 1 else f"{c}{mono}" if d else str(c))
        return " + ".join(terms) or "0"


def poincare(M: GradedF2Module, max_degree: int) -> PoincareSeries:
    """Poincare series of ``M`` on the window ``[0, max_degree]``.

    Raises if ``M`` has classes in negative degrees, since those would
    otherwise be dropped silently.
    """
    if max_degree < 0:
        raise ValueError("window must be [0, D] with D >= 0")
    if M.bottom_degree is not None and M.bottom_degree < 0:
        raise ValueError(f"module has classes in negative degree {M.bottom_degree}")
    coeffs = tuple(M.dim(d) for d in range(max_degree + 1))
    top = M.top_degree
    return PoincareSeries(max_degree, coeffs, top is None or top <= max_degree)


# -- truncated polynomial rings ----------------------------------------------


@dataclass(frozen=True)
class TruncPolyRing:
    """``F2[x]/(x^height)`` with ``|x| = generator_degree``."""

    generator_degree: int
    height: int
    var: str = "x"

    def __post_init__(self):
        if self.generator_degree < 1 or self.height < 1:
            raise ValueError("need r >= 1 and h >= 1")

    @property
    def top_degree(self) -> int:
        return self.generator_degree * (self.height - 1)

    def element(self, coeffs: Iterable[int]) -> RingElement:
        coeffs = [c % 2 for c in coeffs][: self.height]
        coeffs += [0] * (self.height - len(coeffs))
        return RingElement(self, tuple(coeffs))

    def zero(self) -> RingElement:
        return self.element([])

    def one(self) -> RingElement:
        return self.element([1])

    def monomial(self, k: int) -> RingElement:
        if k >= self.height:
            return self.zero()
        return self.element([0] * k + [1])

    def gen(self) -> RingElement:
        return self.monomial(1)

    def monomial_name(self, k: int) -> str:
        return "1" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")

    def module(self, prefix: str = "") -> GradedF2Module:
        """Additive structure: one class ``x^k`` in each degree ``k*r``."""
        r = self.generator_degree
        return GradedF2Module.from_labels(
            {k * r: [prefix + self.monomial_name(k)] for k in range(self.height)}
        )


@dataclass(frozen=True)
class RingElement:
    ring: TruncPolyRing
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ring.height:
            raise ValueError("coefficient vector must have length h")
        if any(c not in (0, 1) for c in self.coeffs):
            raise ValueError("coefficients must be bits")

    def _check(self, other: RingElement):
        if not isinstance(other, RingElement) or other.ring != self.ring:
            raise TypeError("elements of different rings")

    def __add__(self, other: RingElement) -> RingElement:
        self._check(other)
        return RingElement(self.ring, tuple(a ^ b for a, b in zip(self.coeffs, other.coeffs)))

    __sub__ = __add__

    def __mul__(self, other: RingElement) -> RingElement:
        self._check(other)
        h = self.ring.height
        out = [0] * h
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: h - i]):
                out[i + j] ^= b
        return RingElement(self.ring, tuple(out))

    def __pow__(self, k: int) -> RingElement:
        result = self.ring.one()
        for _ in range(k):
            result = result * self
        return result

    def __bool__(self):
        return any(self.coeffs)

    def component(self, k: int) -> RingElement:
        """Homogeneous part in degree ``k*r`` (as an element)."""
        if k >= self.ring.height:
            return self.ring.zero()
        return self.ring.monomial(k) if self.coeffs[k] else self.ring.zero()

    def component_in_degree(self, degree: int) -> RingElement:
        r = self.ring.generator_degree
        if degree < 0 or degree % r:
            return self.ring.zero()
        return self.component(degree // r)

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coeffs) if c]

    def is_one(self) -> bool:
        return self == self.ring.one()

    def __str__(self):
        terms = [self.ring.monomial_name(k) for k in self.support()]
        return " + ".join(terms) or "0"


def binom_expand(k: int, ring: TruncPolyRing) -> RingElement:
    """``(1 + x)^k`` in ``ring``; coefficient ``j`` is ``C(k, j) mod 2``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    # Lucas: C(k, j) is odd iff the binary digits of j are a subset of those of k
    return ring.element([1 if (k & j) == j else 0 for j in range(ring.height)])
