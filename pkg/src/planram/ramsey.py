"""Certificate-producing verification of the headline claims.

Every verification emits a Certificate with a verdict in {verified,
refuted, infeasible}.  A verdict of verified with exhaustive=True is only
issued when the underlying enumeration ran to completion; budget cuts and
out-of-range requests degrade to infeasible, never to a silent pass.

Upper bounds for the planar Ramsey numbers sweep only maximal C4-free
planar host graphs: adding edges to the host only removes edges from the
complement, so a wheel present in every maximal complement is present in
every complement.  The reduction is cross-checked against the full sweep
at small orders by the test suite.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources

from . import errors
from .canon import canonical_form
from .construct import (
    ConstructionTrace,
    build_delta_witness,
    build_ramsey_lower_witness,
    delta_target,
    pr_target,
)
from .enumeration import (
    EnumerationTask,
    enumerate_c4free_planar,
    enumerate_triangulations,
)
from .formats import from_graph6, to_graph6
from .graphs import Graph, ShortcutStats, contains_c4, contains_wheel, cycle_of_length
from .planarity import is_planar

VERSION = "1.0.0"

ENUMERATION_CAP = 11  # largest host order swept exhaustively by default


@dataclass(frozen=True)
class Certificate:
    claim_id: str
    verdict: str  # verified | refuted | infeasible
    exhaustive: bool
    witnesses: tuple[str, ...]  # graph6
    counts: dict
    runtime_ms: int
    version: str = VERSION

    def to_json(self) -> str:
        payload = dict(self.payload(), runtime_ms=self.runtime_ms)
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    def payload(self) -> dict:
        """Everything except the runtime, for determinism comparisons."""
        return {
            "claim_id": self.claim_id,
            "verdict": self.verdict,
            "exhaustive": self.exhaustive,
            "witnesses": list(self.witnesses),
            "counts": {k: self.counts[k] for k in sorted(self.counts)},
            "version": self.version,
        }


@dataclass(frozen=True)
class RamseyVerdict:
    n_wheel: int
    claimed_pr: int
    lower_ok: bool
    upper_ok: bool
    lower_witness: Graph | None


@dataclass(frozen=True)
class DeltaVerdict:
    n: int
    claimed_delta: int
    witness: ConstructionTrace
    upper_bound_method: str  # enumeration | edge_bound | none


def _finish(claim_id, started, verdict, exhaustive, witnesses=(), **counts):
    return Certificate(
        claim_id=claim_id,
        verdict=verdict,
        exhaustive=exhaustive,
        witnesses=tuple(witnesses),
        counts=counts,
        runtime_ms=int((time.time() - started) * 1000),
    )


_ENUM_CACHE: dict = {}


def _maximal_hosts(n: int, workers: int = 1, budget_nodes: int | None = None):
    key = ("max", n, workers)
    if key not in _ENUM_CACHE:
        if ("all", n, workers) in _ENUM_CACHE:
            # the full sweep is a superset; filtering it avoids a second
            # traversal of the same search tree
            from .enumeration import is_maximal_c4free_planar

            graphs = [
                g for g in _ENUM_CACHE[("all", n, workers)]
                if is_maximal_c4free_planar(g)
            ]
        else:
            graphs = []
            for index in range(workers):
                task = EnumerationTask(
                    n=n, mode="c4free_planar", maximal_only=True,
                    split=(index, workers),
                )
                graphs.extend(enumerate_c4free_planar(task, budget_nodes).graphs)
            graphs.sort(key=lambda g: canonical_form(g).form)
        _ENUM_CACHE[key] = tuple(graphs)
    return _ENUM_CACHE[key]


def verify_pr_upper(
    n_wheel: int,
    host_order: int,
    workers: int = 1,
    budget_nodes: int | None = None,
    enumeration_cap: int = ENUMERATION_CAP,
) -> Certificate:
    """Does every C4-free planar graph on host_order vertices have the wheel
    in its complement?  Swept over maximal hosts only (see module docstring)."""
    started = time.time()
    claim = f"pr.upper.w{n_wheel}.n{host_order}"
    if host_order > enumeration_cap:
        return _finish(claim, started, "infeasible", False,
                       host_order=host_order, cap=enumeration_cap)
    try:
        hosts = _maximal_hosts(host_order, workers, budget_nodes)
    except errors.InfeasibleScale:
        return _finish(claim, started, "infeasible", False,
                       host_order=host_order)
    stats = ShortcutStats()
    for g in hosts:
        witness = contains_wheel(g.complement(), n_wheel, stats)
        if witness is None:
            return _finish(
                claim, started, "refuted", True, [to_graph6(g)],
                maximal_classes=len(hosts),
            )
    return _finish(
        claim, started, "verified", True,
        maximal_classes=len(hosts),
        dirac_shortcuts=stats.dirac,
        chvatal_erdos_shortcuts=stats.chvatal_erdos,
    )


def verify_pr_lower(n_wheel: int) -> Certificate:
    """Build and independently re-verify a witness on pr_target - 1 vertices."""
    started = time.time()
    claim = f"pr.lower.w{n_wheel}"
    g = build_ramsey_lower_witness(n_wheel)
    method = "search" if g.n <= 30 else "degree_argument"
    ok = not contains_c4(g) and is_planar(g)
    if method == "search":
        ok = ok and contains_wheel(g.complement(), n_wheel) is None
    else:
        ok = ok and g.n - 1 - g.min_degree() < n_wheel
    verdict = "verified" if ok else "refuted"
    return _finish(
        claim, started, verdict, True, [to_graph6(g)],
        witness_order=g.n, claimed_pr=pr_target(n_wheel),
        by_search=int(method == "search"),
    )


def verify_delta(
    n: int, workers: int = 1, budget_nodes: int | None = None
) -> Certificate:
    """Both sides of the min-degree maximum at order n."""
    started = time.time()
    claim = f"delta.n{n}"
    claimed = delta_target(n)  # raises UnsupportedOrder below 5
    trace = build_delta_witness(n)
    g = trace.embedding.base
    lower_ok = (
        g.n == n and g.min_degree() == claimed
        and not contains_c4(g) and is_planar(g)
    )
    counts = dict(claimed_delta=claimed, witness_order=g.n,
                  witness_ops=len(trace.ops))
    if n <= 12:
        method = "enumeration"
        total = 0
        for index in range(workers):
            task = EnumerationTask(
                n=n, mode="c4free_planar", min_degree=claimed + 1,
                split=(index, workers),
            )
            total += enumerate_c4free_planar(task, budget_nodes).count
        upper_ok = total == 0
        counts["deeper_min_degree_classes"] = total
    elif claimed == 3 and n <= 29:
        # min degree 4 needs 2n edges; 14n > 15(n-2) for n < 30
        method = "edge_bound"
        upper_ok = 14 * n > 15 * (n - 2)
    elif claimed == 4:
        # min degree 5 needs ceil(5n/2) edges, beating 15(n-2)/7 everywhere
        method = "edge_bound"
        upper_ok = 7 * ((5 * n + 1) // 2) > 15 * (n - 2)
    else:
        # 31..43 outside A: no upper-bound argument is checkable at desk
        # scale; only the witness side is certified
        method = "none"
        upper_ok = False
    counts["upper_bound_method"] = method
    if not lower_ok:
        verdict = "refuted"
    elif method == "none":
        verdict = "infeasible"
    else:
        verdict = "verified" if upper_ok else "refuted"
    return _finish(
        claim, started, verdict, method == "enumeration",
        [to_graph6(g)], **counts,
    )


def delta_verdict(n: int) -> DeltaVerdict:
    trace = build_delta_witness(n)
    if n <= 12:
        method = "enumeration"
    elif delta_target(n) == 4 or n <= 29:
        method = "edge_bound"
    else:
        method = "none"
    return DeltaVerdict(n, delta_target(n), trace, method)


def pr_table(n_wheel: int) -> RamseyVerdict:
    """The claimed value plus fresh verification at feasible orders."""
    claimed = pr_target(n_wheel)
    lower = verify_pr_lower(n_wheel)
    upper_ok = False
    if claimed <= ENUMERATION_CAP:
        upper = verify_pr_upper(n_wheel, claimed)
        upper_ok = upper.verdict == "verified"
    witness = from_graph6(lower.witnesses[0]) if lower.witnesses else None
    return RamseyVerdict(
        n_wheel=n_wheel,
        claimed_pr=claimed,
        lower_ok=lower.verdict == "verified",
        upper_ok=upper_ok,
        lower_witness=witness,
    )


# -- triangulation facts --------------------------------------------------


def _reference_triangulations(n: int):
    name = {16: "tri16", 17: "tri17", 18: "tri18"}[n]
    ref = resources.files("planram").joinpath(f"data/facts/{name}.g6")
    return [from_graph6(line) for line in ref.read_text().split()]


def _degree6_triangle_structure(g: Graph) -> bool:
    """The structure ruled out by the 16-vertex argument: four degree-6
    vertices, three of them pairwise adjacent, or two degree-6 plus two
    degree-7 vertices."""
    degs = g.degrees()
    sixes = [v for v in range(g.n) if degs[v] == 6]
    sevens = [v for v in range(g.n) if degs[v] == 7]
    if len(sixes) == 2 and len(sevens) == 2:
        return True
    if len(sixes) == 4 and not sevens:
        for i in range(4):
            for j in range(i + 1, 4):
                for k in range(j + 1, 4):
                    a, b, c = sixes[i], sixes[j], sixes[k]
                    if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
                        return True
    return False


def _degree5_dominates_sixes(g: Graph) -> bool:
    """Degree sequence 5^12 6^5 with a degree-5 vertex adjacent to every
    vertex of degree 6.

    The degree-sequence conjunct matters: the 17-vertex class containing a
    degree-7 vertex does have a degree-5 vertex adjacent to all its (three)
    degree-6 vertices, but it can never arise as the relevant vertex-edge
    dual, whose degree sequence is forced to 5^12 6^5.
    """
    degs = g.degrees()
    sixes = [v for v in range(g.n) if degs[v] == 6]
    if sorted(degs) != [5] * 12 + [6] * 5:
        return False
    return any(
        degs[v] == 5 and all(g.has_edge(v, s) for s in sixes)
        for v in range(g.n)
    )


def check_fact(
    fact_id: str,
    long_running: bool = False,
    workers: int = 1,
    budget_nodes: int | None = None,
) -> Certificate:
    started = time.time()
    if fact_id in ("fact1", "fact2", "fact1_property", "fact2_property"):
        order = 16 if "1" in fact_id else 17
        expected = 3 if order == 16 else 4
        graphs = _delta5_triangulations(order, workers, budget_nodes)
        if fact_id in ("fact1", "fact2"):
            reference = sorted(
                canonical_form(g).form for g in _reference_triangulations(order)
            )
            ours = sorted(canonical_form(g).form for g in graphs)
            ok = len(graphs) == expected and ours == reference
            return _finish(
                fact_id, started, "verified" if ok else "refuted", True,
                [to_graph6(g) for g in graphs],
                classes=len(graphs), expected=expected,
                matches_figures=int(ours == reference),
            )
        if fact_id == "fact1_property":
            bad = [g for g in graphs if _degree6_triangle_structure(g)]
        else:
            bad = [g for g in graphs if _degree5_dominates_sixes(g)]
        return _finish(
            fact_id, started, "refuted" if bad else "verified", True,
            [to_graph6(g) for g in bad], classes=len(graphs),
        )
    if fact_id == "fact3":
        if not long_running:
            return _finish(fact_id, started, "infeasible", False,
                           needs_long_running=1)
        graphs = _delta5_triangulations(
            18, workers, budget_nodes if budget_nodes else 500_000_000
        )
        reference = sorted(
            canonical_form(g).form for g in _reference_triangulations(18)
        )
        ours = sorted(canonical_form(g).form for g in graphs)
        bad = []
        for g in graphs:
            high = tuple(v for v in range(g.n) if g.degree(v) >= 6)
            sub = g.induced(high)
            if sub.n >= 5 and cycle_of_length(sub, 5) is not None:
                bad.append(g)
        verdict = "verified" if not bad and ours == reference else "refuted"
        return _finish(
            fact_id, started, verdict, True,
            [to_graph6(g) for g in bad], classes=len(graphs),
            matches_frozen_census=int(ours == reference),
        )
    raise ValueError(f"unknown fact {fact_id!r}")


def _delta5_triangulations(order, workers, budget_nodes):
    key = ("tri", order, workers)
    if key not in _ENUM_CACHE:
        graphs = []
        for index in range(workers):
            task = EnumerationTask(
                n=order, mode="triangulation", min_degree=5,
                split=(index, workers),
            )
            graphs.extend(enumerate_triangulations(task, budget_nodes).graphs)
        graphs.sort(key=lambda g: canonical_form(g).form)
        _ENUM_CACHE[key] = tuple(graphs)
    return _ENUM_CACHE[key]


# -- lemma sweeps ---------------------------------------------------------


def _all_c4free_planar(n: int, workers: int = 1, budget_nodes=None):
    key = ("all", n, workers)
    if key not in _ENUM_CACHE:
        graphs = []
        for index in range(workers):
            task = EnumerationTask(
                n=n, mode="c4free_planar", split=(index, workers),
            )
            graphs.extend(enumerate_c4free_planar(task, budget_nodes).graphs)
        graphs.sort(key=lambda g: canonical_form(g).form)
        _ENUM_CACHE[key] = tuple(graphs)
    return _ENUM_CACHE[key]


def _lemma16_holds(g: Graph) -> bool:
    """A cut pair of the complement isolates a single vertex z, and the
    graph minus {x, y, z} has no path of length 2."""
    from .graphs import connectivity

    comp = g.complement()
    if connectivity(comp) > 2:
        return True  # hypothesis empty
    n = g.n
    for x in range(n):
        for y in range(n):
            if y == x:
                continue
            blocked = (1 << x) | (1 << y)
            for z in range(n):
                if z == x or z == y:
                    continue
                others = ((1 << n) - 1) & ~blocked & ~(1 << z)
                if comp.adj[z] & ~blocked & others:
                    continue  # z still sees the rest in the complement
                rest = [v for v in range(n) if not blocked >> v & 1 and v != z]
                sub = g.induced(tuple(rest))
                if sub.n and sub.max_degree() >= 2:
                    continue
                return True
    return False


def lemma_property_suite(
    n_max: int = ENUMERATION_CAP, workers: int = 1, budget_nodes=None
) -> Certificate:
    """Sweep Lemmas 15, 16, 17 (cycle form) and the pancyclicity lemma over
    every enumerated C4-free planar graph up to n_max vertices."""
    started = time.time()
    from .graphs import independence_number

    if n_max > ENUMERATION_CAP:
        return _finish("lemmas", started, "infeasible", False, n_max=n_max)
    violations = []
    checked = dict(lemma15=0, lemma16=0, lemma17=0, pancyclic=0)
    for n in range(2, n_max + 1):
        for g in _all_c4free_planar(n, workers, budget_nodes):
            comp = g.complement()
            checked["lemma15"] += 1
            if independence_number(comp) > 3:
                violations.append(("lemma15", to_graph6(g)))
            if n >= 6:
                checked["lemma16"] += 1
                if not _lemma16_holds(g):
                    violations.append(("lemma16", to_graph6(g)))
            if n >= 7:
                checked["pancyclic"] += 1
                lengths = range(3, n)
                missing = [k for k in lengths if cycle_of_length(comp, k) is None]
                if missing:
                    violations.append(("pancyclic", to_graph6(g)))
                # PR(C4, C_{n-1}) = n upper half: complement has C_{n-1}
                checked["lemma17"] += 1
                if n - 1 >= 6 and cycle_of_length(comp, n - 1) is None:
                    violations.append(("lemma17", to_graph6(g)))
    verdict = "refuted" if violations else "verified"
    # the wheel-extraction lemma needs host order >= 12, past the sweep
    # range, so it is recorded as out of range rather than tested
    return _finish(
        "lemmas", started, verdict, True,
        [w for _, w in violations[:10]],
        violations=len(violations), wheel_lemma_out_of_range=1, **checked,
    )
