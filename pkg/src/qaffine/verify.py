"""Verification suites shared by the command line and the test-suite.

Every check produces a ``CheckResult`` with a short statement of what is
being verified, a status, timing and free-form details.  Orientation scans
can fan out over worker processes; results are always reassembled in the
canonical orientation order so reports do not depend on scheduling.
"""

from __future__ import annotations

import multiprocessing
import os
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .cartan import CartanType
from .denominators import check_double_pole_region, verify_lemma34, verify_thm42
from .quiver import DynkinQuiver, adapted_w0, all_orientations, check_convexity, height_function
from .repetition import (
    ARQuiver,
    boundary_check,
    build_phi,
    check_additivity,
    check_ar_description,
    check_injectives,
    check_nakayama,
    check_phi_roundtrip,
    check_range,
    check_summing_pairs,
)

JOBS_ENV = "QAFFINE_JOBS"

STATEMENTS = {
    "convexity": "adapted reduced words of w0 give convex orders on positive roots",
    "phi_roundtrip": "phi is a bijection between the repetition quiver and positive roots times Z",
    "ar_description": "Gamma_Q vertices are (i,p) with xi_i - 2 m_i <= p <= xi_i of matching parity",
    "nakayama": "phi(i*, xi_i - h) is (gamma_i, 1)",
    "injectives": "the subquiver on the injectives is the reversed quiver",
    "additivity": "dimension vectors are additive along mesh relations",
    "range": "(i, xi_j - d(i,j)) and (i, xi_j - 2 m_j + d(i,j)) are vertices of Gamma_Q",
    "summing_pairs": "summing pairs are joined by a path with p_k > p_l",
    "boundary": "for extremal i the vertex phi^-1(alpha_i,0) lies on the boundary of Gamma_Q",
    "thm42": "Gamma^J from pole orders is the reversed quiver and A^J is the finite Cartan matrix",
    "lemma34": "pole orders between members of J in type D are at most one",
    "double_pole_region": "multiplicity two in the type D denominators occurs exactly on the double-pole region",
}


@dataclass
class CheckResult:
    name: str
    statement: str
    ok: bool
    seconds: float
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "statement": self.statement,
                "status": "pass" if self.ok else "fail",
                "seconds": round(self.seconds, 4), "details": self.details}


def timed(name: str, fn: Callable[[], object], statement: str | None = None) -> CheckResult:
    """Run fn; a truthy return is a pass, a dict return becomes details with key ok."""
    t0 = time.perf_counter()
    try:
        out = fn()
    except Exception as exc:  # a crash is reported as a failing check
        return CheckResult(name, statement or STATEMENTS.get(name, name), False,
                           time.perf_counter() - t0, {"error": f"{type(exc).__name__}: {exc}"})
    dt = time.perf_counter() - t0
    if isinstance(out, dict):
        return CheckResult(name, statement or STATEMENTS.get(name, name), bool(out.get("ok")), dt, out)
    return CheckResult(name, statement or STATEMENTS.get(name, name), bool(out), dt)


def jobs_from_env(default: int = 1) -> int:
    raw = os.environ.get(JOBS_ENV)
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        return default


# ---------------------------------------------------------------------------
# per-orientation workers (module level so they pickle)

def _quiver(payload) -> DynkinQuiver:
    family, rank, arrows = payload
    return DynkinQuiver.from_arrows(CartanType(family, rank), arrows)


def combinatorics_worker(payload) -> dict[str, bool]:
    Q = _quiver(payload)
    xi = height_function(Q)
    phi = build_phi(Q, xi)
    ar = ARQuiver(Q, xi, phi)
    return {
        "convexity": check_convexity(adapted_w0(Q)),
        "phi_roundtrip": check_phi_roundtrip(phi),
        "ar_description": check_ar_description(Q, xi, ar),
        "nakayama": check_nakayama(Q, xi),
        "injectives": check_injectives(ar),
        "additivity": check_additivity(ar),
        "range": check_range(Q, xi, ar),
        "summing_pairs": check_summing_pairs(Q, ar),
        "boundary": boundary_check(Q, xi, phi),
    }


def gammaj_worker(payload) -> dict[str, bool]:
    return {"thm42": verify_thm42(_quiver(payload))}


def j_pole_worker(payload) -> dict[str, bool]:
    rep = verify_lemma34(_quiver(payload))
    return {"lemma34": rep.ok}


WORKERS = {"combinatorics": combinatorics_worker, "thm42": gammaj_worker, "lemma34": j_pole_worker}


def orientation_payloads(t: CartanType, quivers: Iterable[DynkinQuiver] | None = None):
    qs = list(quivers) if quivers is not None else list(all_orientations(t))
    qs.sort(key=lambda Q: Q.sorted_arrows())
    return [(t.family, t.rank, tuple(Q.sorted_arrows())) for Q in qs]


def run_orientation_scan(kind: str, t: CartanType, quivers: Iterable[DynkinQuiver] | None = None, *,
                         jobs: int | None = None, seed: int | None = None) -> list[CheckResult]:
    """Run one suite over orientations and fold it into one result per check name.

    ``seed`` shuffles the dispatch order; the report order is canonical either way.
    """
    worker = WORKERS[kind]
    payloads = orientation_payloads(t, quivers)
    order = list(range(len(payloads)))
    if seed is not None:
        random.Random(seed).shuffle(order)
    jobs = jobs if jobs is not None else jobs_from_env()
    t0 = time.perf_counter()
    dispatched = [payloads[i] for i in order]
    if jobs > 1 and len(dispatched) > 1:
        with multiprocessing.get_context("spawn").Pool(jobs) as pool:
            raw = pool.map(worker, dispatched)
    else:
        raw = [worker(p) for p in dispatched]
    elapsed = time.perf_counter() - t0
    by_payload = {p: r for p, r in zip(dispatched, raw)}
    names = list(raw[0]) if raw else []
    out = []
    for name in names:
        failures = [f"{t}[" + ",".join(f"{a}-{b}" for a, b in p[2]) + "]"
                    for p in payloads if not by_payload[p][name]]
        out.append(CheckResult(f"{name}:{t}", STATEMENTS[name], not failures, elapsed / max(1, len(names)),
                               {"orientations": len(payloads), "failures": failures}))
    return out


def double_pole_results(max_rank: int = 12) -> list[CheckResult]:
    return [timed(f"double_pole_region:D{n}", lambda n=n: check_double_pole_region(n),
                  STATEMENTS["double_pole_region"]) for n in range(4, max_rank + 1)]


def qpoch_results(n: int) -> list[CheckResult]:
    from .qpoch import a_closed, a_recursive, check_ad_identity, equiv, in_range_pairs

    def rec():
        bad = [list(p) for p in in_range_pairs(n) if not equiv(a_recursive(*p, n), a_closed(*p, n))]
        return {"ok": not bad, "pairs": len(in_range_pairs(n)), "failures": bad}

    def ad():
        pairs = [(k, l) for k in range(1, n - 1) for l in range(1, n - 1)]
        bad = [list(p) for p in pairs if not check_ad_identity(*p, n)]
        return {"ok": not bad, "pairs": len(pairs), "failures": bad}

    return [
        timed(f"qpoch_recursive:D{n}", rec,
              "recursive and closed forms of the scalars a_{k,l} agree up to units"),
        timed(f"qpoch_ad:D{n}", ad,
              "a_{k,l}(z) a_{k*,l}((-q)^{2n-2} z) reduces to d_{k,l}(z) / d_{k*,l}(q^{2n-2}/z)"),
    ]


def all_ok(results: Iterable[CheckResult]) -> bool:
    return all(r.ok for r in results)
