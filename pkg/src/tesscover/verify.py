"""Executable checks for the known tessellation numbers and the family sweep table."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .cliques import clique_graph, maximal_cliques
from .coloring import chromatic_number
from .graph import FamilySpec, Graph, GraphError, complete, extended_wheel, gen_family, wheel, windmill
from .solver import (
    ENVELOPE_EDGES,
    ENVELOPE_VERTICES,
    SearchTimeout,
    decide_k_tessellable,
    greedy_cover,
    local_degree_bound,
    tessellation_number,
)
from .tessellation import Tessellation, TessellationCover, edge_set, is_valid_cover, validate_tessellation

# W_6 cover, polygon for polygon.
W6_COVER = (
    ((0,), (3,), (1, 2), (4, 5, 6)),
    ((1,), (4,), (0, 5), (2, 3, 6)),
    ((2,), (5,), (3, 4), (0, 1, 6)),
)


def e3n_cover(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """The three explicit tessellations of E_{3,n}; rim indices are taken mod 3n."""
    m = 3 * n
    out = []
    for r in range(3):
        hub_clique = tuple(range(r, m, 3)) + (m,)
        pairs = tuple(((3 * i + r + 1) % m, (3 * i + r + 2) % m) for i in range(n))
        out.append((hub_clique,) + pairs)
    return tuple(out)


@dataclass
class VerificationReport:
    check_id: str
    instance: str
    expected: dict
    observed: dict
    status: str = "fail"  # pass | fail | unknown
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    def finish(self) -> "VerificationReport":
        self.failures = [k for k, v in self.expected.items() if self.observed.get(k) != v]
        self.status = "pass" if not self.failures else "fail"
        return self

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "instance": self.instance,
            "expected": self.expected,
            "observed": self.observed,
            "status": self.status,
            "failures": self.failures,
            "seconds": round(self.seconds, 4),
        }


def _cover_from(polys) -> TessellationCover:
    return TessellationCover(tuple(Tessellation.of(t) for t in polys))


def verify_w6(fixture=W6_COVER) -> VerificationReport:
    start = time.perf_counter()
    g = wheel(6)
    cover = _cover_from(fixture)
    problems = is_valid_cover(g, cover)
    uncovered = [p.detail for p in problems if p.kind == "uncovered"]
    observed = {
        "edges": g.m,
        "fixture_tessellations_valid": all(not validate_tessellation(g, t) for t in cover),
        "fixture_uncovered_edges": [list(e) for e in (uncovered[0] if uncovered else ())],
        "hub_local_bound": local_degree_bound(g),
        "two_tessellable": decide_k_tessellable(g, 2) is not None,
        "T": tessellation_number(g).t_number,
    }
    expected = {
        "edges": 12,
        "fixture_tessellations_valid": True,
        "fixture_uncovered_edges": [],
        "hub_local_bound": 3,
        "two_tessellable": False,
        "T": 3,
    }
    rep = VerificationReport("w6", "wheel(6)", expected, observed).finish()
    rep.seconds = time.perf_counter() - start
    return rep


def verify_e3n(n: int) -> VerificationReport:
    if n < 2:
        raise GraphError(f"E_(3,n) needs n >= 2, got {n}")
    start = time.perf_counter()
    g = extended_wheel(n)
    hub = 3 * n
    cliques = maximal_cliques(g)
    sizes = sorted(len(c) for c in cliques)
    cover = _cover_from(e3n_cover(n))
    valid = [not validate_tessellation(g, t) for t in cover]
    esets = [edge_set(g, t) if ok else set() for t, ok in zip(cover, valid)]
    disjoint = all(not (esets[i] & esets[j]) for i in range(3) for j in range(i + 1, 3))
    chi_k = chromatic_number(clique_graph(g).base)[0]

    observed = {
        "clique_count": len(cliques),
        "all_contain_hub": all(hub in c for c in cliques),
        "clique_sizes": {str(s): sizes.count(s) for s in sorted(set(sizes))},
        "edges": g.m,
        "fixture_valid": all(valid),
        "fixture_pairwise_edge_disjoint": disjoint,
        "fixture_edges_per_tessellation": [len(e) for e in esets],
        "fixture_covers": not is_valid_cover(g, cover),
        "two_tessellable": decide_k_tessellable(g, 2) is not None,
        "T": tessellation_number(g).t_number,
        "chi_K": chi_k,
    }
    if n == 2:
        size_expect = {"3": 9}
    else:
        size_expect = {"3": 3 * n, str(n + 1): 3}
    expected = {
        "clique_count": 3 * n + 3,
        "all_contain_hub": True,
        "clique_sizes": size_expect,
        "edges": 3 * n * (n + 3) // 2,
        "fixture_valid": True,
        "fixture_pairwise_edge_disjoint": True,
        "fixture_edges_per_tessellation": [n * (n + 3) // 2] * 3,
        "fixture_covers": True,
        "two_tessellable": False,
        "T": 3,
        "chi_K": 3 * n + 3,
    }
    rep = VerificationReport(f"e3n:{n}", f"extended_wheel({n})", expected, observed).finish()
    rep.seconds = time.perf_counter() - start
    return rep


def verify_windmill(l: int, s: int = 3) -> VerificationReport:
    if l < 2 or s < 2:
        raise GraphError(f"windmill check needs l >= 2 and s >= 2, got ({l}, {s})")
    start = time.perf_counter()
    g = windmill(l, s)
    kg = clique_graph(g).base
    exact = tessellation_number(g)
    observed = {
        "clique_graph_complete": kg.edges == complete(l).edges and kg.n == l,
        "chi_K": chromatic_number(kg)[0],
        "T": exact.t_number,
        "below_T_refuted": decide_k_tessellable(g, exact.t_number - 1) is None,
        "greedy": greedy_cover(g).t_number,
    }
    expected = {"clique_graph_complete": True, "chi_K": l, "T": l, "below_T_refuted": True, "greedy": l}
    rep = VerificationReport(f"windmill:{l},{s}", f"windmill({l},{s})", expected, observed).finish()
    rep.seconds = time.perf_counter() - start
    return rep


DEFAULT_CHECKS = ["w6", "e3n:2", "e3n:3", "e3n:4"] + [f"windmill:{l},3" for l in range(2, 7)]


def run_check(check_id: str) -> VerificationReport:
    name, _, arg = check_id.partition(":")
    if name == "w6":
        return verify_w6()
    if name == "e3n":
        return verify_e3n(int(arg))
    if name == "windmill":
        l, _, s = arg.partition(",")
        return verify_windmill(int(l), int(s or 3))
    raise GraphError(f"unknown check {check_id!r}; known: w6, e3n:<n>, windmill:<l>[,<s>]")


# --- sweeps ---------------------------------------------------------------

_FAMILY_PARAM = {
    "wheel": "n",
    "extended_wheel": "n",
    "windmill": "l",
    "star": "k",
    "complete": "n",
    "cycle": "n",
    "path": "n",
}

# Appendix classes drawn only in figures; the graphs cannot be rebuilt from the captions.
OUT_OF_SCOPE_ROWS = (
    ("ratio 1/3 class (W_6 spanning, K = K_9)", "caption gives T = 3, chi(K) = 9; graph drawn only"),
    ("ratio 1/4 class (W_12, W_16 spanning)", "caption gives T = 6, 8 with K = K_24, K_32; graphs drawn only"),
    ("sqrt class (W_10 spanning, K = K_25)", "caption gives T = 5; graph drawn only"),
    ("T = 4, chi(K) = 30 instance", "caption gives the two numbers only"),
)


def parse_family_range(text: str) -> list[FamilySpec]:
    """``family:lo-hi[:key=val,...]`` (or ``family:n`` / ``petersen``) to a list of specs."""
    parts = text.split(":")
    family = parts[0]
    if family == "petersen":
        return [FamilySpec("petersen")]
    if family not in _FAMILY_PARAM:
        raise GraphError(f"unknown sweep family {family!r}")
    if len(parts) < 2:
        raise GraphError(f"sweep {text!r} needs a range, e.g. {family}:2-5")
    lo, _, hi = parts[1].partition("-")
    try:
        values = range(int(lo), int(hi or lo) + 1)
    except ValueError:
        raise GraphError(f"bad range {parts[1]!r}") from None
    extra = {}
    for kv in parts[2:]:
        k, _, v = kv.partition("=")
        extra[k] = int(v)
    return [FamilySpec(family, {_FAMILY_PARAM[family]: v, **extra}) for v in values]


def sweep_row(spec: FamilySpec, timeout: Optional[float] = None) -> dict:
    g = gen_family(spec)
    row = {"graph": spec.label(), "n": g.n, "m": g.m}
    if g.n > ENVELOPE_VERTICES or g.m > ENVELOPE_EDGES:
        row.update(status="skipped", reason="outside exact-solver envelope")
        return row
    start = time.perf_counter()
    try:
        res = tessellation_number(g, timeout=timeout)
        refuted = res.t_number == 0 or decide_k_tessellable(g, res.t_number - 1, timeout=timeout) is None
    except SearchTimeout:
        row.update(status="skipped", reason="timeout")
        return row
    chi = chromatic_number(clique_graph(g).base)[0] if g.edges else 0
    ok = not is_valid_cover(g, res.witness) and refuted
    row.update(
        T=res.t_number,
        chi_K=chi,
        ratio=str(Fraction(res.t_number, chi)) if chi else None,
        status="pass" if ok else "fail",
        seconds=round(time.perf_counter() - start, 4),
    )
    return row


def sweep(specs: list[FamilySpec], timeout: Optional[float] = None, include_out_of_scope: bool = True) -> list[dict]:
    rows = [sweep_row(s, timeout) for s in specs]
    if include_out_of_scope:
        for label, note in OUT_OF_SCOPE_ROWS:
            rows.append({"graph": label, "status": "out_of_scope", "reason": note})
    return rows


def format_rows(rows: list[dict]) -> str:
    head = f"{'graph':<42} {'n':>4} {'m':>4} {'T':>4} {'chi(K)':>7} {'ratio':>7}  status"
    lines = [head, "-" * len(head)]
    for r in rows:
        if r["status"] == "out_of_scope":
            lines.append(f"{r['graph']:<42} {'':>4} {'':>4} {'':>4} {'':>7} {'':>7}  out of scope: {r['reason']}")
            continue
        lines.append(
            f"{r['graph']:<42} {r.get('n', ''):>4} {r.get('m', ''):>4} {r.get('T', '-'):>4} "
            f"{r.get('chi_K', '-'):>7} {r.get('ratio') or '-':>7}  {r['status']}"
        )
    return "\n".join(lines)


def format_reports(reports: list[VerificationReport]) -> str:
    lines = []
    for r in sorted(reports, key=lambda r: r.check_id):
        mark = r.status.upper()
        summary = f"T={r.observed.get('T')}"
        if r.failures:
            summary += "  mismatched: " + ", ".join(
                f"{k} expected {r.expected[k]!r} got {r.observed.get(k)!r}" for k in r.failures
            )
        lines.append(f"[{mark:<4}] {r.check_id:<14} {r.instance:<22} {summary}  ({r.seconds:.3f}s)")
    return "\n".join(lines)
