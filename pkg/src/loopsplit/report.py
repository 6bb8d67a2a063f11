"""Verification reports: run every cross-check for one catalog space."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from .algebra import poincare
from .bundles import (
    EQUIVALENT,
    cofiber_module,
    gysin_accounting,
    multiple,
    pullback,
    sw_by_degree_vanishing,
    thom,
    trivial,
    whitney_sum,
    wu_total_sw,
)
from .loopspace import (
    SymmetricSpaceEntry,
    assemble_splitting,
    bo_description,
    bo_thom_form,
    catalog,
    conjugate_schedule,
    energy_ratio,
    eta_pullback_criterion,
    morse_index,
    negative_bundle,
    stable_criterion,
)
from .repring import run_witnesses

SPACE_IDS = {"cpn": "CPn", "hpn": "HPn", "op2": "OP2"}
COFIBER_Q_RANGE = range(0, 6)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str

    def as_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


def entry_for(space_id: str, n: int) -> SymmetricSpaceEntry:
    return catalog(SPACE_IDS[space_id], n)


def _run(name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashing check is a failing check
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    return Check(name, bool(ok), detail)


def _sparse(series) -> list[list[int]]:
    return series.sparse()


# -- individual checks ----------------------------------------------------------


def check_bottom_cells(splitting) -> tuple[bool, str]:
    bad = [s.m for s in splitting.strata if s.summand.bottom_degree != s.index]
    if bad:
        return False, f"bottom degree != index for m in {bad}"
    return True, f"{len(splitting.strata)} strata, indices {[s.index for s in splitting.strata]}"


def check_cofiber_rewriting(entry: SymmetricSpaceEntry) -> tuple[bool, str]:
    tau, S = entry.tau, entry.sphere_bundle
    bad = []
    for q in COFIBER_Q_RANGE:
        cof = cofiber_module(multiple(tau, q), tau)
        th = thom(pullback(whitney_sum(multiple(tau, q), trivial(entry.base)), S)).module
        if cof.dims != th.dims:
            bad.append(q)
    if bad:
        return False, f"cofiber and Thom modules differ for q in {bad}"
    return True, f"q = {COFIBER_Q_RANGE.start}..{COFIBER_Q_RANGE.stop - 1}"


def check_steenrod(entry: SymmetricSpaceEntry, ms: range) -> tuple[bool, str]:
    verdicts = {m: (stable_criterion(entry, m), eta_pullback_criterion(entry, m)) for m in ms}
    bad = [m for m, v in verdicts.items() if v != (EQUIVALENT, EQUIVALENT)]
    if bad:
        return False, f"undetermined for m in {bad}"
    return True, f"equal rank and SW class for m = {ms.start}..{ms.stop - 1}"


def check_eta_vanishing(entry: SymmetricSpaceEntry) -> tuple[bool, str]:
    if entry.name == "CPn":
        return entry.eta.total_sw.is_one(), "eta is the trivial line"
    on_base = sw_by_degree_vanishing(entry.w1_rank, entry.base.cohomology)
    on_sphere = sw_by_degree_vanishing(entry.w1_rank, entry.sphere_bundle.cohomology)
    ok = on_base.forced and on_sphere.forced
    return ok, (
        f"rank {entry.w1_rank}: forced over base={on_base.forced}, over S(tau)={on_sphere.forced}"
    )


def check_poincare_duality(entry: SymmetricSpaceEntry) -> tuple[bool, str]:
    S = entry.sphere_bundle
    dims, top = S.cohomology.dims, S.dimension
    ok = all(dims.get(top - d, 0) == k for d, k in dims.items())
    return ok, f"dim S(tau) = {top}"


def check_sphere_euler(entry: SymmetricSpaceEntry) -> tuple[bool, str]:
    chi = entry.sphere_bundle.euler_characteristic()
    return chi == 0, f"chi = {chi}"


def check_gysin(entry: SymmetricSpaceEntry) -> tuple[bool, str]:
    acc = gysin_accounting(entry.sphere_bundle)
    bad = [k for k, (lhs, rhs) in acc.items() if lhs != rhs]
    return not bad, f"degrees {min(acc)}..{max(acc)}" if not bad else f"fails in degrees {bad}"


def check_tangent_classes(entry: SymmetricSpaceEntry) -> tuple[bool, str]:
    ring = entry.base.ring
    chi = entry.base.euler_characteristic()
    top_ok = bool(entry.tau.euler_class) == bool(chi % 2)
    wu_ok = wu_total_sw(ring) == entry.tau.total_sw
    return top_ok and wu_ok, f"w(tau) = {entry.tau.total_sw}, chi = {chi}"


def check_monotone(entry: SymmetricSpaceEntry, ms: range) -> tuple[bool, str]:
    idx = [morse_index(entry, m) for m in ms]
    en = [energy_ratio(m) for m in ms]
    ok = all(a < b for a, b in zip(idx, idx[1:])) and all(a < b for a, b in zip(en, en[1:]))
    return ok, f"index step {entry.w1_rank + entry.w2_rank}"


# -- reports --------------------------------------------------------------------


def stratum_row(entry: SymmetricSpaceEntry, m: int) -> dict:
    xi, desusp = negative_bundle(entry, m)
    return {
        "m": m,
        "energy_ratio": energy_ratio(m),
        "conjugate_labels": "".join("1" if x == "K1" else "2" for x in conjugate_schedule(m)),
        "index": morse_index(entry, m),
        "rank": xi.rank,
        "desuspension": desusp,
        "bundle": str(xi),
    }


def verify_report(space_id: str, n: int, max_degree: int, workers: int = 1) -> dict:
    entry = entry_for(space_id, n)
    D = max_degree
    splitting = assemble_splitting(entry, None, D, workers=workers)
    total_split = poincare(splitting.module, D)
    bo = bo_description(entry, None, D)
    total_bo = poincare(bo, D)
    total_thom = poincare(bo_thom_form(entry, D), D)

    strata = []
    for s in splitting.strata:
        row = stratum_row(entry, s.m)
        row["poincare"] = _sparse(poincare(s.summand, D))
        strata.append(row)

    ms = range(1, max(len(splitting.strata), 3) + 1)
    checks = [
        _run("bottom_cell_law", lambda: check_bottom_cells(splitting)),
        _run("cofiber_rewriting", lambda: check_cofiber_rewriting(entry)),
        _run(
            "cross_description",
            lambda: (
                total_split.coeffs == total_bo.coeffs == total_thom.coeffs,
                f"window [0, {D}]",
            ),
        ),
        _run("steenrod_criterion", lambda: check_steenrod(entry, ms)),
        _run("sw_vanishing_eta", lambda: check_eta_vanishing(entry)),
        _run("poincare_duality_sphere_bundle", lambda: check_poincare_duality(entry)),
        _run("euler_characteristic_sphere_bundle", lambda: check_sphere_euler(entry)),
        _run("gysin_exactness", lambda: check_gysin(entry)),
        _run("tangent_sw_class", lambda: check_tangent_classes(entry)),
        _run("index_energy_monotone", lambda: check_monotone(entry, ms)),
    ]
    for w in run_witnesses(entry):
        checks.append(_run(f"witness: {w.name}", lambda w=w: (w.passed, w.detail())))
    checks.sort(key=lambda c: c.name)

    return {
        "space": space_id,
        "n": entry.n,
        "window": [0, D],
        "strata": strata,
        "total_poincare_splitting": _sparse(total_split),
        "total_poincare_bo": _sparse(total_bo),
        "checks": [c.as_dict() for c in checks],
        "verdict": "PASS" if all(c.passed for c in checks) else "FAIL",
    }


def table_report(space_id: str, n: int, max_winding: int) -> dict:
    entry = entry_for(space_id, n)
    return {
        "space": space_id,
        "n": entry.n,
        "w1_rank": entry.w1_rank,
        "w2_rank": entry.w2_rank,
        "strata": [stratum_row(entry, m) for m in range(1, max_winding + 1)],
    }


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def _series_str(sparse: list[list[int]]) -> str:
    terms = []
    for d, c in sparse:
        mono = "1" if d == 0 else ("t" if d == 1 else f"t^{d}")
        terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) or "0"


def to_text(report: dict) -> str:
    lines = [f"space {report['space']}  n={report['n']}"]
    if "window" in report:
        lines[0] += f"  window {report['window']}"
    else:
        lines[0] += f"  w1={report['w1_rank']}  w2={report['w2_rank']}"
    lines.append(f"{'m':>3} {'E/e':>5} {'index':>6} {'rank':>5} {'desusp':>6}  bundle")
    for s in report["strata"]:
        lines.append(
            f"{s['m']:>3} {s['energy_ratio']:>5} {s['index']:>6} {s['rank']:>5} {s['desuspension']:>6}  {s['bundle']}"
        )
    if "checks" in report:
        lines.append(f"splitting: {_series_str(report['total_poincare_splitting'])}")
        lines.append(f"cofibers:  {_series_str(report['total_poincare_bo'])}")
        for c in report["checks"]:
            lines.append(f"[{'PASS' if c['pass'] else 'FAIL'}] {c['name']}: {c['detail']}")
        lines.append(f"verdict: {report['verdict']}")
    return "\n".join(lines) + "\n"
