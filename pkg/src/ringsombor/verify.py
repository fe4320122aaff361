"""Sweep ring families, compare closed forms against brute force, check
structural facts, and serialize deterministic reports.

A sweep never aborts on a mismatch: mismatches are findings, recorded and
carried into the errata report.  Reports are byte-reproducible except for
the generated-at header line and the per-case micros timing field; the
canonical_* helpers strip exactly those so runs can be compared.
"""

from __future__ import annotations

import datetime
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import closed_forms as cf
from .graphs import (
    TOTAL,
    UNIT,
    EdgePartition,
    Graph,
    circulant_graph,
    complement,
    edge_partition_of,
    predicted_degrees,
    total_graph,
    unit_graph,
)
from .radicals import RadicalSum
from .rings import (
    EVEN,
    ODD_P2Q,
    ODD_PQ,
    ODD_PRIME_POWER,
    FiniteRing,
    TruncatedPolyRing,
    ZnRing,
    classify,
    primes_up_to,
    to_local_spec,
)
from .sombor import sombor_bruteforce

DEFAULT_CEILING = 1 << 14

LOCAL = "local"
FAMILIES = (EVEN, ODD_PRIME_POWER, ODD_PQ, ODD_P2Q, LOCAL, "localzn", "localpoly")

CSV_HEADER = "n,ring,kind,family,variant,alpha,beta,gamma,edges,closed_exact,oracle_exact,match,micros"


class CeilingExceededError(ValueError):
    """The ring is too large for explicit graph construction."""


class EmptySweepError(ValueError):
    """The requested family/bound combination contains no cases."""


@dataclass(frozen=True)
class VariantResult:
    variant: str  # unique | printed | corrected
    closed_value: RadicalSum
    closed_partition: EdgePartition | None
    value_match: bool
    partition_match: bool | None

    @property
    def match(self) -> bool:
        if self.partition_match is False:
            return False
        return self.value_match


@dataclass(frozen=True)
class CaseResult:
    ring: str
    n: int
    kind: str
    family: str
    oracle_value: RadicalSum
    oracle_partition: EdgePartition
    variants: tuple[VariantResult, ...]
    micros: int

    @property
    def ok(self) -> bool:
        """True when every unique/corrected variant matched the oracle.
        Printed-variant mismatches are expected findings, not failures."""
        return all(v.match for v in self.variants if v.variant != cf.PRINTED)


def _zn_forms(n: int, fam, kind: str) -> list[tuple[str, RadicalSum, EdgePartition | None]]:
    if fam.kind == EVEN:
        value = cf.so_total_even(n) if kind == TOTAL else cf.so_unit_even(n)
        return [(cf.UNIQUE, value, None)]
    if fam.kind == ODD_PRIME_POWER:
        if kind == TOTAL:
            return [(cf.UNIQUE, cf.so_total_prime_power(fam.p, fam.alpha), None)]
        return [
            (v, cf.so_unit_prime_power(fam.p, fam.alpha, v), None)
            for v in (cf.CORRECTED, cf.PRINTED)
        ]
    if fam.kind == ODD_PQ:
        if kind == TOTAL:
            return [(cf.UNIQUE, cf.so_total_pq(fam.p, fam.q), cf.total_pq_partition(fam.p, fam.q))]
        return [(cf.UNIQUE, cf.so_unit_pq(fam.p, fam.q), cf.unit_pq_partition(fam.p, fam.q))]
    if fam.kind == ODD_P2Q:
        if kind == TOTAL:
            return [(cf.UNIQUE, cf.so_total_p2q(fam.p, fam.q), cf.total_p2q_partition(fam.p, fam.q))]
        return [
            (v, cf.so_unit_p2q(fam.p, fam.q, v), cf.unit_p2q_partition(fam.p, fam.q, v))
            for v in (cf.CORRECTED, cf.PRINTED)
        ]
    return []


def _local_forms(spec, kind: str) -> list[tuple[str, RadicalSum, EdgePartition | None]]:
    if kind == TOTAL:
        return [(cf.UNIQUE, cf.so_total_local(spec), None)]
    if not spec.two_is_unit:
        return [(cf.UNIQUE, cf.so_unit_local(spec, cf.CORRECTED), None)]
    return [(v, cf.so_unit_local(spec, v), None) for v in (cf.CORRECTED, cf.PRINTED)]


def verify_case(
    ring: FiniteRing,
    kind: str,
    *,
    use_local_forms: bool = False,
    ceiling: int = DEFAULT_CEILING,
) -> CaseResult:
    """Build the graph, run the brute-force oracle, evaluate every applicable
    closed-form variant, and record exact-match flags.

    Rings whose family has no closed form come back oracle-only (no
    variants).  use_local_forms switches a local Z_n to the local-ring
    formulas instead of its Z_n family formulas.
    """
    if ring.order > ceiling:
        raise CeilingExceededError(
            f"{ring.name} has {ring.order} elements, above the ceiling {ceiling}"
        )
    start = time.perf_counter()
    g, classes = total_graph(ring) if kind == TOTAL else unit_graph(ring)
    oracle_value = sombor_bruteforce(g)
    oracle_partition = edge_partition_of(g, classes)

    if use_local_forms or isinstance(ring, TruncatedPolyRing):
        spec = to_local_spec(ring)
        family_tag = LOCAL
        forms = _local_forms(spec, kind)
    else:
        fam = classify(ring.order)
        family_tag = fam.kind if fam.in_hypothesis else fam.kind + "_pgtq"
        forms = _zn_forms(ring.order, fam, kind)

    variants = tuple(
        VariantResult(
            variant=v,
            closed_value=value,
            closed_partition=part,
            value_match=(value == oracle_value),
            partition_match=None if part is None else (part == oracle_partition),
        )
        for v, value, part in forms
    )
    micros = int((time.perf_counter() - start) * 1e6)
    return CaseResult(
        ring=ring.name,
        n=ring.order,
        kind=kind,
        family=family_tag,
        oracle_value=oracle_value,
        oracle_partition=oracle_partition,
        variants=variants,
        micros=micros,
    )


# ----------------------------------------------------------------------
# Sweeps

def _family_ring_specs(family: str, max_n: int) -> list[tuple]:
    """Picklable ring descriptors: ('zn', n, use_local) or ('poly', p, k)."""
    specs: list[tuple] = []
    if family == EVEN:
        specs = [("zn", n, False) for n in range(2, max_n + 1, 2)]
    elif family == ODD_PRIME_POWER:
        for p in primes_up_to(max_n):
            if p == 2:
                continue
            n = p
            while n <= max_n:
                specs.append(("zn", n, False))
                n *= p
    elif family == ODD_PQ:
        primes = [p for p in primes_up_to(max_n // 3) if p != 2]
        for i, p in enumerate(primes):
            for q in primes[i + 1 :]:
                if p * q > max_n:
                    break
                specs.append(("zn", p * q, False))
    elif family == ODD_P2Q:
        primes = [p for p in primes_up_to(max_n // 3) if p != 2]
        for p in primes:
            for q in primes:
                if q == p:
                    continue
                if p * p * q <= max_n:
                    specs.append(("zn", p * p * q, False))
    elif family in (LOCAL, "localzn", "localpoly"):
        if family in (LOCAL, "localzn"):
            for p in primes_up_to(max_n):
                n = p
                while n <= max_n:
                    specs.append(("zn", n, True))
                    n *= p
        if family in (LOCAL, "localpoly"):
            for p in primes_up_to(max_n):
                k = 1
                while p**k <= max_n:
                    specs.append(("poly", p, k))
                    k += 1
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return specs


def _ring_from_spec(spec: tuple) -> tuple[FiniteRing, bool]:
    if spec[0] == "zn":
        return ZnRing(spec[1]), spec[2]
    return TruncatedPolyRing(spec[1], spec[2]), True


def _run_case_spec(case_spec: tuple) -> CaseResult:
    ring_spec, kind, ceiling = case_spec
    ring, use_local = _ring_from_spec(ring_spec)
    return verify_case(ring, kind, use_local_forms=use_local, ceiling=ceiling)


@dataclass(frozen=True)
class SweepResult:
    family: str
    max_n: int
    kinds: tuple[str, ...]
    cases: tuple[CaseResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    def summary(self) -> dict:
        rows = sum(len(c.variants) for c in self.cases)
        mismatched_expected = sum(
            1
            for c in self.cases
            for v in c.variants
            if v.variant == cf.PRINTED and not v.match
        )
        failed = sum(
            1
            for c in self.cases
            for v in c.variants
            if v.variant != cf.PRINTED and not v.match
        )
        extension = {}
        for c in self.cases:
            if c.family.endswith("_pgtq"):
                extension[f"{c.ring}:{c.kind}"] = all(
                    v.match for v in c.variants if v.variant != cf.PRINTED
                )
        return {
            "family": self.family,
            "max_n": self.max_n,
            "kinds": list(self.kinds),
            "cases": len(self.cases),
            "variant_rows": rows,
            "failed_rows": failed,
            "printed_mismatch_rows": mismatched_expected,
            "out_of_hypothesis_outcomes": extension,
        }


def sweep(
    family: str,
    max_n: int,
    kinds=(TOTAL,),
    *,
    workers: int = 1,
    ceiling: int = DEFAULT_CEILING,
) -> SweepResult:
    """Verify every in-family ring of order <= max_n, for each graph kind.

    Case execution order is irrelevant: results are sorted by (n, ring,
    kind) before aggregation, so any worker count yields the same report.
    """
    for kind in kinds:
        if kind not in (TOTAL, UNIT):
            raise ValueError(f"unknown graph kind {kind!r}")
    ring_specs = _family_ring_specs(family, max_n)
    case_specs = [(rs, kind, ceiling) for rs in ring_specs for kind in kinds]
    if not case_specs:
        raise EmptySweepError(f"no {family} cases with n <= {max_n}")
    if workers <= 1:
        results = [_run_case_spec(cs) for cs in case_specs]
    else:
        chunk = max(1, len(case_specs) // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_case_spec, case_specs, chunksize=chunk))
    results.sort(key=lambda c: (c.n, c.ring, c.kind))
    return SweepResult(family, max_n, tuple(kinds), tuple(results))


# ----------------------------------------------------------------------
# Structural checks

@dataclass(frozen=True)
class StructureResult:
    ring: str
    n: int
    is_local: bool
    zdiv_complete: bool
    degrees_ok: bool
    duality_ok: bool

    @property
    def consistent(self) -> bool:
        """Degrees and duality hold, and the zero-divisor clique appears
        exactly for local rings."""
        return self.degrees_ok and self.duality_ok and self.zdiv_complete == self.is_local


def _degrees_match(g: Graph, classes, ring: FiniteRing, kind: str) -> bool:
    d_zero, d_unit = predicted_degrees(ring, kind)
    um = classes.unit_mask
    return all(
        d == (d_unit if (um >> v) & 1 else d_zero) for v, d in enumerate(g.degrees)
    )


def check_structure(ring: FiniteRing, *, ceiling: int = DEFAULT_CEILING) -> StructureResult:
    """Three facts about a ring's graphs: is the zero-divisor-induced
    subgraph of the total graph complete, do both degree predictions hold,
    and is the unit graph exactly the complement of the total graph."""
    if ring.order > ceiling:
        raise CeilingExceededError(
            f"{ring.name} has {ring.order} elements, above the ceiling {ceiling}"
        )
    tg, classes = total_graph(ring)
    ug, _ = unit_graph(ring)
    duality = complement(tg) == ug
    degrees = _degrees_match(tg, classes, ring, TOTAL) and _degrees_match(
        ug, classes, ring, UNIT
    )
    zm = classes.zero_mask
    zdiv_complete = True
    rest = zm
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        if tg.rows[v] & zm != zm ^ low:
            zdiv_complete = False
            break
    return StructureResult(
        ring=ring.name,
        n=ring.order,
        is_local=ring.is_local,
        zdiv_complete=zdiv_complete,
        degrees_ok=degrees,
        duality_ok=duality,
    )


def structure_sweep(max_n: int, *, ceiling: int = DEFAULT_CEILING) -> list[StructureResult]:
    """check_structure for every Z_n with 2 <= n <= max_n."""
    if max_n < 2:
        raise EmptySweepError(f"no rings with n <= {max_n}")
    return [check_structure(ZnRing(n), ceiling=ceiling) for n in range(2, max_n + 1)]


# ----------------------------------------------------------------------
# Complement identity

@dataclass(frozen=True)
class IdentityCase:
    n: int
    k: int
    residual_zero: bool
    circulant_checked: bool
    circulant_match: bool | None

    @property
    def ok(self) -> bool:
        return self.residual_zero and self.circulant_match is not False


def regular_circulant(n: int, k: int) -> Graph:
    """A k-regular circulant on n vertices (n*k must be even)."""
    if (n * k) % 2:
        raise ValueError(f"no {k}-regular graph on {n} vertices")
    if k % 2 == 0:
        offsets = range(1, k // 2 + 1)
    else:
        offsets = [*range(1, (k - 1) // 2 + 1), n // 2]
    return circulant_graph(n, offsets)


def identity_sweep(max_n: int, circulant_max: int | None = None) -> list[IdentityCase]:
    """For every n <= max_n and feasible k, check that the complement
    identity residual is exactly zero; for n up to circulant_max also build
    an explicit k-regular circulant and confirm both regular closed forms
    against brute force."""
    if max_n < 3:
        raise EmptySweepError(f"identity sweep needs max_n >= 3, got {max_n}")
    if circulant_max is None:
        circulant_max = min(max_n, 100)
    out = []
    for n in range(3, max_n + 1):
        for k in range(n):
            if (n * k) % 2:
                continue
            residual = cf.complement_identity_residual(n, k)
            checked = n <= circulant_max
            match = None
            if checked:
                g = regular_circulant(n, k)
                match = (
                    sombor_bruteforce(g) == cf.so_regular(n, k)
                    and sombor_bruteforce(complement(g)) == cf.so_regular(n, n - k - 1)
                )
            out.append(
                IdentityCase(
                    n=n,
                    k=k,
                    residual_zero=residual.is_zero,
                    circulant_checked=checked,
                    circulant_match=match,
                )
            )
    return out


# ----------------------------------------------------------------------
# Errata

FORMULA_UNIT_PPOW = "unit-graph odd-prime-power unit-unit bracket"
FORMULA_UNIT_P2Q_EDGES = "unit-graph p^2*q edge count"
FORMULA_UNIT_LOCAL = "unit-graph local-ring two-is-unit case"

_PRINTED_EXPRESSIONS = {
    FORMULA_UNIT_PPOW: (
        "phi*(n-phi)*sqrt(phi^2 + (phi-1)^2)"
        " + (phi*(phi-1) - (n-phi))*(phi-1)/sqrt(2)"
    ),
    FORMULA_UNIT_P2Q_EDGES: "|E| = p^2*(p-1)*(q-1)*(p^2*q - 1)/2",
    FORMULA_UNIT_LOCAL: "|U|*(n-|U|)*sqrt(|U|^2 + (n-|U|)^2)",
}


@dataclass(frozen=True)
class ErrataEntry:
    formula: str
    printed_expression: str
    ring: str
    n: int
    kind: str
    printed_value: str
    oracle_value: str


def _formula_label(case: CaseResult) -> str | None:
    if case.kind != UNIT:
        return None
    if case.family == ODD_PRIME_POWER:
        return FORMULA_UNIT_PPOW
    if case.family.startswith(ODD_P2Q):
        return FORMULA_UNIT_P2Q_EDGES
    if case.family == LOCAL:
        return FORMULA_UNIT_LOCAL
    return None


def errata_report(cases) -> list[ErrataEntry]:
    """One entry per printed formula that mismatched the oracle somewhere in
    the supplied results, citing the smallest counterexample.  Empty when
    every printed formula matched."""
    found: dict[str, tuple[CaseResult, VariantResult]] = {}
    for case in sorted(cases, key=lambda c: (c.n, c.ring, c.kind)):
        label = _formula_label(case)
        if label is None or label in found:
            continue
        for variant in case.variants:
            if variant.variant == cf.PRINTED and not variant.match:
                found[label] = (case, variant)
                break
    return [
        ErrataEntry(
            formula=label,
            printed_expression=_PRINTED_EXPRESSIONS[label],
            ring=case.ring,
            n=case.n,
            kind=case.kind,
            printed_value=variant.closed_value.render(),
            oracle_value=case.oracle_value.render(),
        )
        for label, (case, variant) in sorted(found.items())
    ]


# ----------------------------------------------------------------------
# Report serialization

def _timestamp() -> str:
    return datetime.datetime.now(datetime.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _match_text(flag: bool) -> str:
    return "true" if flag else "false"


def sweep_rows(result: SweepResult) -> list[str]:
    rows = []
    for c in result.cases:
        part = c.oracle_partition
        prefix = f"{c.n},{c.ring},{c.kind},{c.family}"
        counts = f"{part.alpha},{part.beta},{part.gamma},{part.total}"
        if not c.variants:
            rows.append(f"{prefix},oracle,{counts},,{c.oracle_value.render()},na,{c.micros}")
            continue
        for v in c.variants:
            rows.append(
                f"{prefix},{v.variant},{counts},"
                f"{v.closed_value.render()},{c.oracle_value.render()},"
                f"{_match_text(v.match)},{c.micros}"
            )
    return rows


def write_sweep_csv(result: SweepResult, fh):
    fh.write(f"# generated-at: {_timestamp()}\n")
    fh.write(CSV_HEADER + "\n")
    for row in sweep_rows(result):
        fh.write(row + "\n")


def _partition_payload(part: EdgePartition | None):
    if part is None:
        return None
    return {"alpha": part.alpha, "beta": part.beta, "gamma": part.gamma, "edges": part.total}


def sweep_payload(result: SweepResult) -> dict:
    cases = []
    for c in result.cases:
        cases.append(
            {
                "n": c.n,
                "ring": c.ring,
                "kind": c.kind,
                "family": c.family,
                "oracle_exact": c.oracle_value.render(),
                "oracle_partition": _partition_payload(c.oracle_partition),
                "variants": [
                    {
                        "variant": v.variant,
                        "closed_exact": v.closed_value.render(),
                        "closed_partition": _partition_payload(v.closed_partition),
                        "match": v.match,
                    }
                    for v in c.variants
                ],
                "micros": c.micros,
            }
        )
    errata = [
        {
            "formula": e.formula,
            "printed_expression": e.printed_expression,
            "ring": e.ring,
            "n": e.n,
            "kind": e.kind,
            "printed_value": e.printed_value,
            "oracle_value": e.oracle_value,
        }
        for e in errata_report(result.cases)
    ]
    return {
        "generated_at": _timestamp(),
        "summary": result.summary(),
        "cases": cases,
        "errata": errata,
    }


def write_sweep_json(result: SweepResult, fh):
    json.dump(sweep_payload(result), fh, indent=2, sort_keys=True)
    fh.write("\n")


STRUCTURE_CSV_HEADER = "n,ring,local,zdiv_complete,degrees_ok,duality_ok"


def write_structure_csv(results, fh):
    fh.write(f"# generated-at: {_timestamp()}\n")
    fh.write(STRUCTURE_CSV_HEADER + "\n")
    for r in sorted(results, key=lambda r: (r.n, r.ring)):
        fh.write(
            f"{r.n},{r.ring},{_match_text(r.is_local)},{_match_text(r.zdiv_complete)},"
            f"{_match_text(r.degrees_ok)},{_match_text(r.duality_ok)}\n"
        )


def structure_payload(results) -> dict:
    return {
        "generated_at": _timestamp(),
        "cases": [
            {
                "n": r.n,
                "ring": r.ring,
                "local": r.is_local,
                "zdiv_complete": r.zdiv_complete,
                "degrees_ok": r.degrees_ok,
                "duality_ok": r.duality_ok,
            }
            for r in sorted(results, key=lambda r: (r.n, r.ring))
        ],
    }


IDENTITY_CSV_HEADER = "n,k,residual_zero,circulant_checked,circulant_match"


def write_identity_csv(results, fh):
    fh.write(f"# generated-at: {_timestamp()}\n")
    fh.write(IDENTITY_CSV_HEADER + "\n")
    for r in results:
        match = "" if r.circulant_match is None else _match_text(r.circulant_match)
        fh.write(
            f"{r.n},{r.k},{_match_text(r.residual_zero)},"
            f"{_match_text(r.circulant_checked)},{match}\n"
        )


def identity_payload(results) -> dict:
    return {
        "generated_at": _timestamp(),
        "cases": [
            {
                "n": r.n,
                "k": r.k,
                "residual_zero": r.residual_zero,
                "circulant_checked": r.circulant_checked,
                "circulant_match": r.circulant_match,
            }
            for r in results
        ],
    }


def canonical_csv_body(text: str) -> str:
    """Sweep report text minus the timestamp header and the trailing micros
    column, for determinism comparisons across runs and worker counts."""
    lines = [
        line.rsplit(",", 1)[0]
        for line in text.splitlines()
        if line and not line.startswith("#")
    ]
    return "\n".join(lines) + "\n"


def canonical_json_body(text: str) -> str:
    """JSON report normalized the same way: no generated_at, no micros."""
    payload = json.loads(text)
    payload.pop("generated_at", None)
    for case in payload.get("cases", []):
        case.pop("micros", None)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
