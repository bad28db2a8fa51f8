"""Claim verification engine: ordered, optionally parallel point evaluation
with deterministic report assembly, plus the named claim suites.

Parallel execution dispatches contiguous chunks of the ordered point list to
a process pool and reassembles results in input order, so a report's content
is identical for any worker count.  ``stop_on_first`` truncates the ordered
result stream at the first counterexample.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor

from .claims import CLAIMS, Claim, Skip
from .reports import ParamRange, VerificationReport


class UnknownClaim(LookupError):
    pass


class UnknownSuite(LookupError):
    pass


SUITES: dict[str, tuple[str, ...]] = {
    "theorems": (
        "THM-1.1.i", "THM-1.1.ii", "THM-1.2",
        "THM-1.3.a", "THM-1.3.b", "THM-1.3.c", "THM-1.3.d",
        "COR-1.1.ab", "COR-1.1.c", "COR-1.1.d",
    ),
    "lemmas": (
        "LEM-2.1.a", "LEM-2.1.b", "LEM-2.2", "LEM-2.3", "LEM-2.4",
        "LEM-3.1.a", "LEM-3.1.b", "LEM-3.2", "LEM-3.3", "LEM-3.4",
        "LEM-4.1", "LEM-4.2", "LEM-4.3", "LEM-4.4.a", "LEM-4.4.b",
        "LEM-4.5", "LEM-4.6",
    ),
    "identities": (
        "ID-1.8", "ID-2.3", "REM-2.1", "EQ-2.8", "EQ-2.11",
        "EQ-3.partial", "EQ-3.4", "EQ-4.2", "EQ-4.10", "EQ-4.11",
        "EQ-4.12", "EQ-4.13", "REC-w", "REC-W",
    ),
    "conjectures": (
        "CONJ-5.1.a", "CONJ-5.1.b", "REM-5.1", "CONJ-5.2.abc", "CONJ-5.3.ab",
    ),
}
SUITES["all"] = SUITES["theorems"] + SUITES["lemmas"] + SUITES["identities"] + SUITES["conjectures"]

# Claim subsets the congruence/polynomial entry points accept.
CONGRUENCE_CLAIM_IDS = ("THM-1.1.ii", "LEM-2.4", "EQ-2.11", "CONJ-5.1.a",
                        "CONJ-5.1.b", "REM-5.1", "LEM-3.4", "LEM-4.3")
POLYNOMIAL_CLAIM_IDS = ("ID-2.3", "LEM-2.1.a", "LEM-4.5", "LEM-4.6", "REC-w",
                        "EQ-4.13", "CONJ-5.2.abc", "CONJ-5.3.ab", "LEM-2.3")

_TABLE_CAP = 20


def get_claim(claim_id: str) -> Claim:
    claim = CLAIMS.get(claim_id)
    if claim is None:
        raise UnknownClaim(f"unknown claim id {claim_id!r}")
    return claim


def effective_range(claim: Claim, overrides: dict | None = None, *,
                    deep: bool = False) -> ParamRange:
    rng = claim.deep_range if (deep and claim.deep_range is not None) else claim.default_range
    if overrides:
        rng = rng.override(**overrides)
    rng.validate()
    return rng


def _label(claim: Claim, point) -> dict:
    if isinstance(point, dict):
        return point
    if not isinstance(point, tuple):
        point = (point,)
    return dict(zip(claim.param_names, point))


def _range_echo(rng: ParamRange, keys: tuple[str, ...]) -> dict:
    out = {}
    for key in keys:
        value = getattr(rng, key)
        out[key] = list(value) if isinstance(value, tuple) else value
    return out


def _eval_chunk(claim_id: str, rng: ParamRange, lo: int, hi: int) -> list:
    """Evaluate points [lo, hi) of a claim's ordered point list (worker entry)."""
    claim = CLAIMS[claim_id]
    out = []
    for point in list(claim.points(rng))[lo:hi]:
        if isinstance(point, Skip):
            out.append(("skip", point.point, point.reason))
        else:
            kind, *rest = claim.check(point)
            if kind == "ok":
                out.append(("ok", point, rest[0]))
            elif kind == "skip":
                out.append(("skip", point, rest[0]))
            else:
                out.append(("fail", point, rest[0], rest[1]))
    return out


def verify_claim(claim_id: str, overrides: dict | None = None, *,
                 deep: bool = False, stop_on_first: bool = False, jobs: int = 1,
                 executor: ProcessPoolExecutor | None = None) -> VerificationReport:
    """Evaluate one claim over its (possibly overridden) parameter range."""
    claim = get_claim(claim_id)
    rng = effective_range(claim, overrides, deep=deep)
    start = time.perf_counter()

    points = list(claim.points(rng))
    if jobs > 1 and len(points) > 8:
        results = _run_parallel(claim.id, rng, len(points), jobs, executor)
    else:
        results = iter(_eval_chunk(claim.id, rng, 0, len(points)))

    checked = 0
    counterexamples = []
    skipped = []
    table = []
    for res in results:
        if res[0] == "skip":
            skipped.append([_label(claim, res[1]), res[2]])
            continue
        checked += 1
        if res[0] == "ok":
            if res[2] is not None and len(table) < _TABLE_CAP:
                table.append([_label(claim, res[1]), res[2]])
        else:
            counterexamples.append({"params": _label(claim, res[1]),
                                    "lhs": res[2], "rhs": res[3]})
            if stop_on_first:
                break

    elapsed_ms = (time.perf_counter() - start) * 1000.0
    if counterexamples:
        status = "counterexample"
    elif checked > 0:
        status = "verified"
    else:
        status = "skipped"
    params = {
        "range": _range_echo(rng, claim.range_keys),
        "checked": checked,
        "skipped": skipped,
    }
    if claim.notes is not None:
        params["notes"] = claim.notes(rng)
    return VerificationReport(claim=claim.id, params=params, status=status,
                              counterexamples=counterexamples, table=table,
                              elapsed_ms=elapsed_ms)


def _run_parallel(claim_id: str, rng: ParamRange, n_points: int, jobs: int,
                  executor: ProcessPoolExecutor | None):
    chunk = max(1, -(-n_points // (jobs * 4)))
    bounds = [(lo, min(lo + chunk, n_points)) for lo in range(0, n_points, chunk)]
    own = executor is None
    pool = executor or ProcessPoolExecutor(max_workers=jobs)
    try:
        futures = [pool.submit(_eval_chunk, claim_id, rng, lo, hi) for lo, hi in bounds]
        for fut in futures:
            yield from fut.result()
    finally:
        if own:
            pool.shutdown()


def run_suite(suite: str, overrides: dict | None = None,
              per_claim: dict[str, dict] | None = None, *,
              deep: bool = False, stop_on_first: bool = False,
              jobs: int = 1) -> list[VerificationReport]:
    """Run a named suite; reports come back in suite order.

    With ``stop_on_first``, evaluation stops after the first claim that
    produces a counterexample (that claim itself also stops early).
    """
    claim_ids = SUITES.get(suite)
    if not claim_ids:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    reports = []
    try:
        for claim_id in claim_ids:
            merged = dict(overrides or {})
            merged.update((per_claim or {}).get(claim_id, {}))
            report = verify_claim(claim_id, merged or None, deep=deep,
                                  stop_on_first=stop_on_first, jobs=jobs,
                                  executor=executor)
            reports.append(report)
            if stop_on_first and report.status == "counterexample":
                break
    finally:
        if executor is not None:
            executor.shutdown()
    return reports


def verify_congruence_claims(claim_ids=None, overrides: dict | None = None,
                             **kwargs) -> list[VerificationReport]:
    """Run the congruence-style claims (all of them by default)."""
    ids = tuple(claim_ids) if claim_ids is not None else CONGRUENCE_CLAIM_IDS
    for cid in ids:
        if cid not in CONGRUENCE_CLAIM_IDS:
            raise UnknownClaim(f"{cid!r} is not a congruence claim")
    return [verify_claim(cid, overrides, **kwargs) for cid in ids]


def verify_polynomial_claims(claim_ids=None, overrides: dict | None = None,
                             **kwargs) -> list[VerificationReport]:
    """Run the polynomial identity/divisibility/integrality claims."""
    ids = tuple(claim_ids) if claim_ids is not None else POLYNOMIAL_CLAIM_IDS
    for cid in ids:
        if cid not in POLYNOMIAL_CLAIM_IDS:
            raise UnknownClaim(f"{cid!r} is not a polynomial claim")
    return [verify_claim(cid, overrides, **kwargs) for cid in ids]


def verify_sqrt_d_claims(overrides: dict | None = None, **kwargs) -> VerificationReport:
    """Run the square-root-substitution identity over its (b, c, n) grid."""
    return verify_claim("LEM-2.1.b", overrides, **kwargs)
