"""Torus characters of U(n), Sp(n), Spin(n) and their products.

A character is a Laurent polynomial in the torus variables.  Exponents are stored
doubled so that the half-integral weights of spin representations stay integral.
Real representations are compared through their complexifications.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Mapping

FAMILIES = ("U", "Sp", "Spin")
REP_NAMES = (
    "standard",
    "trivial",
    "adjoint_sp1",
    "vector_spin",
    "spinor_spin9",
    "half_spinor_plus",
    "half_spinor_minus",
)


class WeylInvarianceError(ValueError):
    """A character is not invariant under the Weyl group it claims."""


def torus_rank(family: str, n: int) -> int:
    if family in ("U", "Sp"):
        return n
    if family == "Spin":
        return n // 2
    raise ValueError(f"unknown group family {family!r}")


@dataclass(frozen=True)
class Group:
    """A product of classical groups, e.g. ``Group((("Sp", 1), ("Sp", 1)))``."""

    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for fam, n in self.factors:
            if fam not in FAMILIES or n < 1:
                raise ValueError(f"bad factor {fam}({n})")

    @property
    def rank(self) -> int:
        return sum(torus_rank(f, n) for f, n in self.factors)

    def __mul__(self, other: Group) -> Group:
        return Group(self.factors + other.factors)

    def __str__(self):
        return " x ".join(f"{f}({n})" for f, n in self.factors)

    def weyl_generators(self):
        """Generators of the Weyl group acting on exponent vectors."""
        gens = []
        offset = 0
        for fam, n in self.factors:
            k = torus_rank(fam, n)
            idx = list(range(offset, offset + k))
            for a, b in zip(idx, idx[1:]):
                gens.append(("swap", a, b))
            if k and (fam == "Sp" or (fam == "Spin" and n % 2)):
                gens.append(("flip", idx[0]))
            elif fam == "Spin" and k >= 2:
                gens.append(("flip2", idx[0], idx[1]))
            offset += k
        return gens


def U(n: int) -> Group:
    return Group((("U", n),))


def Sp(n: int) -> Group:
    return Group((("Sp", n),))


def Spin(n: int) -> Group:
    return Group((("Spin", n),))


def _act(gen, e: tuple[int, ...]) -> tuple[int, ...]:
    e = list(e)
    if gen[0] == "swap":
        _, a, b = gen
        e[a], e[b] = e[b], e[a]
    elif gen[0] == "flip":
        e[gen[1]] = -e[gen[1]]
    else:
        _, a, b = gen
        e[a], e[b] = -e[a], -e[b]
    return tuple(e)


@dataclass(frozen=True)
class Character:
    group: Group
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        terms = {}
        for e, c in self.terms.items():
            if len(e) != self.group.rank:
                raise ValueError(f"exponent {e} has wrong length for {self.group}")
            if c < 0:
                raise ValueError("multiplicities must be non-negative")
            if c:
                terms[tuple(e)] = c
        object.__setattr__(self, "terms", dict(sorted(terms.items())))

    @property
    def dim(self) -> int:
        return sum(self.terms.values())

    def __add__(self, other: Character) -> Character:
        if other.group != self.group:
            raise ValueError(f"cannot add characters of {self.group} and {other.group}")
        return Character(self.group, Counter(self.terms) + Counter(other.terms))

    def __rmul__(self, k: int) -> Character:
        return Character(self.group, {e: k * c for e, c in self.terms.items()})

    def outer(self, other: Character) -> Character:
        """External tensor product, a character of the product group."""
        terms: Counter = Counter()
        for e, c in self.terms.items():
            for f, d in other.terms.items():
                terms[e + f] += c * d
        return Character(self.group * other.group, terms)

    def difference(self, other: Character) -> dict[tuple[int, ...], int]:
        keys = set(self.terms) | set(other.terms)
        diff = {e: self.terms.get(e, 0) - other.terms.get(e, 0) for e in keys}
        return {e: d for e, d in sorted(diff.items()) if d}

    def is_weyl_invariant(self) -> bool:
        for gen in self.group.weyl_generators():
            for e, c in self.terms.items():
                if self.terms.get(_act(gen, e), 0) != c:
                    return False
        return True

    def __str__(self):
        def mono(e):
            parts = []
            for i, a in enumerate(e):
                if a:
                    p = f"{a // 2}" if a % 2 == 0 else f"{a}/2"
                    parts.append(f"t{i + 1}^{p}")
            return "*".join(parts) or "1"

        return " + ".join((f"{c}*" if c > 1 else "") + mono(e) for e, c in self.terms.items()) or "0"


def trivial_character(group: Group, k: int = 1) -> Character:
    return Character(group, {(0,) * group.rank: k})


def _unit(rank: int, i: int, a: int) -> tuple[int, ...]:
    e = [0] * rank
    e[i] = a
    return tuple(e)


def _spinor_weights(k: int, parity: int | None):
    """Sign vectors ``(+-1/2, ...)`` doubled; ``parity`` filters on the number of minus signs."""
    for signs in product((1, -1), repeat=k):
        if parity is None or signs.count(-1) % 2 == parity:
            yield signs


def named_character(family: str, n: int, rep_name: str) -> Character:
    """Complexified character of a named real representation."""
    if rep_name not in REP_NAMES:
        raise ValueError(f"unknown representation {rep_name!r}")
    G = Group(((family, n),))
    k = G.rank
    if rep_name == "trivial":
        return trivial_character(G)
    if rep_name == "standard":
        if family not in ("U", "Sp"):
            raise ValueError("standard is defined for U(n) and Sp(n); use vector_spin")
        # U(n): C^n as a real 2n-dim rep; Sp(n): H^n as complex 2n-dim
        terms: Counter = Counter()
        for i in range(k):
            terms[_unit(k, i, 2)] += 1
            terms[_unit(k, i, -2)] += 1
        return Character(G, terms)
    if rep_name == "adjoint_sp1":
        if (family, n) != ("Sp", 1):
            raise ValueError("adjoint_sp1 needs Sp(1)")
        return Character(G, {(4,): 1, (0,): 1, (-4,): 1})
    if family != "Spin":
        raise ValueError(f"{rep_name} is a Spin representation")
    if rep_name == "vector_spin":
        terms = Counter()
        for i in range(k):
            terms[_unit(k, i, 2)] += 1
            terms[_unit(k, i, -2)] += 1
        if n % 2:
            terms[(0,) * k] += 1
        return Character(G, terms)
    if rep_name == "spinor_spin9":
        if n != 9:
            raise ValueError("spinor_spin9 needs Spin(9)")
        return Character(G, {s: 1 for s in _spinor_weights(k, None)})
    if n != 8:
        raise ValueError("half spinors are provided for Spin(8)")
    parity = 0 if rep_name == "half_spinor_plus" else 1
    return Character(G, {s: 1 for s in _spinor_weights(k, parity)})


@dataclass(frozen=True)
class RestrictionMap:
    """Restriction along a homomorphism of maximal tori ``target -> source``.

    Row ``i`` of ``substitution`` gives the (true, not doubled) exponents in the
    target variables of source variable ``i``.
    """

    source: Group
    target: Group
    substitution: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        if len(self.substitution) != self.source.rank:
            raise ValueError("need one row per source torus variable")
        if any(len(row) != self.target.rank for row in self.substitution):
            raise ValueError("rows must have one entry per target torus variable")


def restrict(c: Character, m: RestrictionMap) -> Character:
    if c.group != m.source:
        raise ValueError(f"character of {c.group} cannot be restricted along a map from {m.source}")
    terms: Counter = Counter()
    for e, mult in c.terms.items():
        f = [0] * m.target.rank
        for a, row in zip(e, m.substitution):
            for j, b in enumerate(row):
                f[j] += a * b
        terms[tuple(f)] += mult
    out = Character(m.target, terms)
    if not out.is_weyl_invariant():
        raise WeylInvarianceError(f"restriction along {m.name or 'map'} broke Weyl invariance")
    return out


@dataclass(frozen=True)
class WitnessCheck:
    """``restrict(witness) == target + slack * trivial``, exactly."""

    name: str
    target: Character
    witness: Character
    map: RestrictionMap
    slack: int = 0

    @property
    def restricted(self) -> Character:
        return restrict(self.witness, self.map)

    @property
    def expected(self) -> Character:
        return self.target + trivial_character(self.target.group, self.slack) if self.slack else self.target

    @property
    def passed(self) -> bool:
        return self.restricted == self.expected

    def detail(self) -> str:
        if self.passed:
            return f"dim {self.witness.dim} = {self.target.dim} + {self.slack}"
        return f"restricted - expected = {self.restricted.difference(self.expected)}"


# -- the isotropy data ---------------------------------------------------------


def _identity_rows(k: int, width: int, offset: int = 0):
    return tuple(tuple(1 if j == i + offset else 0 for j in range(width)) for i in range(k))


def witnesses_cpn(n: int) -> list[WitnessCheck]:
    # H = U(n-1) inside K2 = U(n) as A -> diag(A, 1)
    H, K2 = U(n - 1), U(n)
    res = RestrictionMap(K2, H, _identity_rows(n - 1, n - 1) + ((0,) * (n - 1),), "U(n-1) < U(n)")
    W1 = trivial_character(H)
    W2 = named_character("U", n - 1, "standard") + trivial_character(H)
    return [
        WitnessCheck("W1+W2 extends to U(n)", W1 + W2, named_character("U", n, "standard"), res),
        WitnessCheck("W1 extends to U(n)", W1, trivial_character(K2), res),
    ]


def witnesses_hpn(n: int) -> list[WitnessCheck]:
    # H = Sp(n-1) x Sp(1) inside K2 = Sp(n) x Sp(1) as (A, B) -> (diag(A, B), B);
    # variables of H: z_1..z_{n-1}, w.  K2 acts on H^n by v -> A v B^-1.
    H = Sp(n - 1) * Sp(1)
    K2 = Sp(n) * Sp(1)
    w = (0,) * (n - 1) + (1,)
    rows = _identity_rows(n - 1, n) + (w, w)
    res = RestrictionMap(K2, H, rows, "Sp(n-1)xSp(1) < Sp(n)xSp(1)")
    adj = named_character("Sp", 1, "adjoint_sp1")
    W1 = trivial_character(Sp(n - 1)).outer(adj)
    W2 = named_character("Sp", n - 1, "standard").outer(named_character("Sp", 1, "standard")) + W1
    Hn = named_character("Sp", n, "standard").outer(named_character("Sp", 1, "standard"))
    return [
        WitnessCheck("W1 extends through the Sp(1) projection", W1, trivial_character(Sp(n)).outer(adj), res),
        WitnessCheck("W2+eps extends to H^n", W2 + trivial_character(H), Hn, res),
    ]


def witnesses_op2() -> list[WitnessCheck]:
    # standard inclusion Spin(8) < Spin(9): identity on the common rank 4 torus
    res = RestrictionMap(Spin(9), Spin(8), _identity_rows(4, 4), "Spin(8) < Spin(9)")
    return [
        WitnessCheck(
            "vector rep of Spin(9) restricts to rho8 + eps",
            named_character("Spin", 8, "vector_spin"),
            named_character("Spin", 9, "vector_spin"),
            res,
            slack=1,
        ),
        WitnessCheck(
            "spinor of Spin(9) restricts to both half spinors",
            named_character("Spin", 8, "half_spinor_plus") + named_character("Spin", 8, "half_spinor_minus"),
            named_character("Spin", 9, "spinor_spin9"),
            res,
        ),
    ]


def run_witnesses(space) -> list[WitnessCheck]:
    """Witness checks for a catalog entry (anything with ``name`` and ``n``)."""
    if space.name == "CPn":
        return witnesses_cpn(space.n)
    if space.name == "HPn":
        return witnesses_hpn(space.n)
    if space.name == "OP2":
        return witnesses_op2()
    raise ValueError(f"no witnesses for {space.name}")

