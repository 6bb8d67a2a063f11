"""Exit criteria.  Each test records one PASS/FAIL line, printed at the end of the run."""

import cmath
import json
import random
from itertools import product

from loopsplit.algebra import poincare
from loopsplit.bundles import (
    EQUIVALENT,
    cofiber_module,
    gysin_accounting,
    multiple,
    pullback,
    steenrod_equiv_criterion,
    thom,
    trivial,
    whitney_sum,
)
from loopsplit.loopspace import (
    assemble_splitting,
    bo_description,
    bo_thom_form,
    catalog,
    dim_spin,
    morse_index,
    stratum,
)
from loopsplit.repring import Character, Sp, run_witnesses
from loopsplit.report import to_json, verify_report

SPACES = [("CPn", n) for n in range(2, 6)] + [("HPn", n) for n in range(2, 5)] + [("OP2", 2)]
RESULTS: list[str] = []


def record(num, name, ok, detail=""):
    RESULTS.append(f"criterion {num} {name}: {'PASS' if ok else 'FAIL'}{'  ' + detail if detail else ''}")
    assert ok, detail


def test_1_bottom_cell_law():
    bad, count = [], 0
    for space in SPACES:
        e = catalog(*space)
        m = 1
        while morse_index(e, m) <= 100:
            s = stratum(e, m)
            count += 1
            lam = m * e.w1_rank + (m - 1) * e.w2_rank
            if not (s.summand.bottom_degree == s.index == lam):
                bad.append((e.label, m))
            m += 1
    record(1, "bottom-cell/index law", not bad, f"{count} strata, mismatches {bad}")


def test_2_cofiber_rewriting():
    bad = []
    for space in SPACES:
        e = catalog(*space)
        for q in range(6):
            C = cofiber_module(multiple(e.tau, q), e.tau)
            T = thom(pullback(whitney_sum(multiple(e.tau, q), trivial(e.base)), e.sphere_bundle)).module
            if poincare(C, 400).coeffs != poincare(T, 400).coeffs or not (
                poincare(C, 400).exact_beyond_window and poincare(T, 400).exact_beyond_window
            ):
                bad.append((e.label, q))
    record(2, "cofiber = Thom space over S(tau)", not bad, f"q=0..5 on {len(SPACES)} spaces, mismatches {bad}")


def test_3_cross_description():
    bad = []
    for space in SPACES:
        e = catalog(*space)
        split = poincare(assemble_splitting(e, None, 100).module, 100).coeffs
        cof = poincare(bo_description(e, None, 100), 100).coeffs
        rew = poincare(bo_thom_form(e, 100), 100).coeffs
        if not (split == cof == rew):
            bad.append(e.label)
    certified = []
    for space in [s for s in SPACES if s[0] != "CPn"]:
        e = catalog(*space)
        S = e.sphere_bundle
        for m in range(1, 8):
            a = pullback(multiple(e.eta, m), S)
            b = trivial(S, m * e.w1_rank)
            if steenrod_equiv_criterion(a, b) != EQUIVALENT:
                bad.append((e.label, m))
        certified.append(f"{e.label}:rank {e.w1_rank}")
    record(3, "splitting = cofiber form = rewritten form on [0,100]", not bad, f"eta certified {certified}; failures {bad}")


def test_4_witnesses():
    verdicts = []
    for space in [("CPn", 3), ("HPn", 2), ("OP2", 2)]:
        for w in run_witnesses(catalog(*space)):
            verdicts.append((w.name, w.passed, w.witness.dim, w.target.dim, w.slack))
    dims = {v[0]: v[2:] for v in verdicts}
    ok = (
        len(verdicts) == 6
        and all(v[1] for v in verdicts)
        and dims["vector rep of Spin(9) restricts to rho8 + eps"] == (9, 8, 1)
        and dims["spinor of Spin(9) restricts to both half spinors"] == (16, 16, 0)
    )
    record(4, "representation witnesses", ok, f"{sum(v[1] for v in verdicts)}/6 pass")


def test_5_dimension_sanity():
    op = catalog("OP2")
    ok = dim_spin(9) - dim_spin(7) == 36 - 21 == 15 == op.dim_M - 1 == op.w2_rank
    ok &= op.w1_rank == 28 - 21 == 7
    for space in SPACES:
        e = catalog(*space)
        chi = e.base.euler_characteristic()
        ok &= chi == (3 if e.name == "OP2" else e.n + 1)
        ok &= bool(e.tau.euler_class) == bool(chi % 2)
    record(5, "dimension sanity", ok)


def _evaluate(c, s):
    total = 0
    for e, mult in c.terms.items():
        v = 1
        for x, a in zip(s, e):
            v *= x**a
        total += mult * v
    return total


def test_6_property_suite():
    rng = random.Random(20261015)
    problems = []

    for _ in range(300):
        e = catalog(*rng.choice(SPACES))
        parts = [rng.choice([e.tau, e.eta, trivial(e.base, rng.randint(1, 3))]) for _ in range(rng.randint(1, 4))]
        total = parts[0]
        for p in parts[1:]:
            total = whitney_sum(total, p)
        prod = e.base.ring.one()
        for p in parts:
            prod = prod * p.total_sw
        if total.total_sw != prod or total.rank != sum(p.rank for p in parts):
            problems.append("whitney")

    for name, ns in (("CPn", range(2, 7)), ("HPn", range(2, 7)), ("OP2", [2])):
        for n in ns:
            S = catalog(name, n).sphere_bundle
            if any(lhs != rhs for lhs, rhs in gysin_accounting(S).values()):
                problems.append(f"gysin {name}{n}")
            P = poincare(S.cohomology, S.dimension).coeffs
            if P != P[::-1]:
                problems.append(f"duality {name}{n}")
            if S.euler_characteristic() != 0:
                problems.append(f"chi {name}{n}")

    roots = [cmath.exp(2j * cmath.pi * k / 16) for k in range(16)]
    for _ in range(200):
        a = {(rng.randint(-3, 3), rng.randint(-3, 3)): rng.randint(0, 2) for _ in range(rng.randint(0, 4))}
        b = dict(a) if rng.random() < 0.5 else {k: v for k, v in a.items() if rng.random() < 0.7}
        ca, cb = Character(Sp(1) * Sp(1), a), Character(Sp(1) * Sp(1), b)
        pointwise = all(abs(_evaluate(ca, s) - _evaluate(cb, s)) < 1e-9 for s in product(roots, repeat=2))
        if (ca == cb) != pointwise:
            problems.append("grid")

    for space_id, n in (("cpn", 3), ("hpn", 2), ("op2", 2)):
        one, two = to_json(verify_report(space_id, n, 60)), to_json(verify_report(space_id, n, 60))
        if one != two or json.dumps(json.loads(one), indent=2) + "\n" != one:
            problems.append(f"report {space_id}")
    record(6, "property suite", not problems, f"problems {sorted(set(problems))}")
