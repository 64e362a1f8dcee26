"""Per-graph invariant reports and exhaustive verification runs.

A report gathers the classification flags, the cut-point structure, the
dimension, and per-power predicted-versus-oracle invariants; predictions
appear only when the hypotheses of the corresponding formula hold, and
every oracle value carries its field and seed.  Verification runs sweep
the connected graphs up to isomorphism and apply one named check; for
proven statements any counterexample is a bug, for the open questions
the outcome is tallied as evidence and never asserted.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field as dc_field

from .fields import GF, QQ, DEFAULT_PRIME
from . import bei, formulas, oracle
from .graphs import (CapacityError, Graph, closed_under_labeling,
                     connected_components, classify_block_graph,
                     forbidden_subgraph_scan, is_chordal, recognize_closed,
                     relabel_graph, serialize_edge_list, cut_point_sets)
from .groebner import Ideal
from .hilbert import krull_dimension, minimalize
from .idealops import ideal_power
from .enumgraphs import connected_graphs
from .rings import poly_str


class VerificationError(AssertionError):
    """A proven statement failed on a concrete instance (i.e. a bug)."""


@dataclass
class InvariantReport:
    graph_edges: str
    n: int
    flags: dict
    cut_sets: list
    dimension: int
    dimension_agrees: bool
    powers: dict                      # k -> {predicted/oracle depth, reg}
    symbolic: dict                    # k -> bool or "capacity"
    betti: dict | None
    field_char: int
    seed: int
    k_max: int
    timings: dict = dc_field(default_factory=dict)

    def to_json(self, include_timings: bool = False) -> str:
        data = {
            "graph": self.graph_edges,
            "n": self.n,
            "flags": self.flags,
            "cut_sets": self.cut_sets,
            "dimension": self.dimension,
            "dimension_agrees": self.dimension_agrees,
            "powers": {str(k): v for k, v in sorted(self.powers.items())},
            "symbolic": {str(k): v for k, v in sorted(self.symbolic.items())},
            "betti": self.betti,
            "field": self.field_char,
            "seed": self.seed,
            "k_max": self.k_max,
        }
        if include_timings:
            data["timings"] = self.timings
        return json.dumps(data, sort_keys=True)

    def to_text(self) -> str:
        edges = self.graph_edges.replace("\n", ", ") or "(no edges)"
        lines = [f"graph on {self.n} vertices: {edges}"]
        lines.append("flags: " + ", ".join(
            f"{k}={v}" for k, v in sorted(self.flags.items())))
        lines.append(f"cut-point sets: {len(self.cut_sets)}")
        lines.append(f"dim S/J = {self.dimension}"
                     + ("" if self.dimension_agrees else "  [MISMATCH]"))
        for k in sorted(self.powers):
            row = self.powers[k]
            cells = [f"k={k}"]
            for key in ("predicted_depth", "oracle_depth", "probe_depth",
                        "predicted_reg", "oracle_reg"):
                if row.get(key) is not None:
                    cells.append(f"{key.replace('_', ' ')}={row[key]}")
            lines.append("  " + "  ".join(cells))
        for k in sorted(self.symbolic):
            lines.append(f"  symbolic power k={k}: "
                         f"{'equal' if self.symbolic[k] is True else self.symbolic[k]}")
        return "\n".join(lines)


def _classification(G: Graph) -> dict:
    chordal, _ = is_chordal(G)
    scan = forbidden_subgraph_scan(G)
    sigma = recognize_closed(G)
    block = classify_block_graph(G)
    unmixed_flag = bei.unmixed(G)
    cm: bool | None = None
    if sigma is not None:
        cm = bei.cm_closed(relabel_graph(G, sigma)).cm
    elif block.is_block:
        cm = block.cm_by_vertex_rule
    return {
        "chordal": chordal,
        "claw_free": scan.claw is None,
        "net_free": scan.net is None,
        "tent_free": scan.tent is None,
        "closed": sigma is not None,
        "block": block.is_block,
        "unmixed": unmixed_flag,
        "cm": cm,
    }, sigma


def build_report(G: Graph, k_max: int = 2, with_betti: bool = False,
                 field=None, seed: int = 0, *,
                 with_oracle: bool = True,
                 symbolic_n_max: int = 6) -> InvariantReport:
    """Full analysis of one graph; raises VerificationError when an
    oracle value contradicts an applicable proven formula."""
    field = field or GF(DEFAULT_PRIME)
    timings: dict = {}
    t0 = time.time()
    flags, sigma = _classification(G)
    timings["classify"] = time.time() - t0

    cps = cut_point_sets(G)
    cut_list = [{"W": list(cs.W), "c": cs.c} for cs in cps]
    dim_comb = bei.dimension_quotient(G)

    J = bei.binomial_edge_ideal(G)
    t0 = time.time()
    dim_hilb = krull_dimension(J)
    timings["dimension"] = time.time() - t0
    dim_ok = dim_comb == dim_hilb

    closed_G = relabel_graph(G, sigma) if sigma is not None else None
    profile = None
    if closed_G is not None and flags["cm"]:
        profile = formulas.depth_powers_cm_closed(closed_G)

    powers: dict = {}
    betti_tables: dict | None = {} if with_betti else None
    t0 = time.time()
    for k in range(1, k_max + 1):
        row: dict = {}
        if profile is not None:
            row["predicted_depth"] = profile.depth(k)
        if closed_G is not None:
            row["predicted_reg"] = formulas.reg_powers_closed(closed_G, k)
        if with_oracle:
            Jk = ideal_power(J, k)
            B = oracle.betti_table(Jk, field=field)
            row["oracle_depth"] = B.depth
            row["oracle_reg"] = B.reg
            row["probe_depth"] = oracle.depth_probe_generic_forms(
                Jk, field=field, seed=seed)
            if not oracle.hilbert_consistency(Jk, B):
                raise VerificationError(f"hilbert consistency failed at k={k}")
            if row["probe_depth"] != B.depth:
                raise VerificationError(
                    f"depth witnesses disagree at k={k}: "
                    f"table {B.depth}, probe {row['probe_depth']}")
            if betti_tables is not None:
                betti_tables[str(k)] = B.to_json_dict()
            if row.get("predicted_depth") is not None and \
               row["predicted_depth"] != B.depth:
                raise VerificationError(
                    f"depth formula violated at k={k}: "
                    f"predicted {row['predicted_depth']}, oracle {B.depth}")
            if row.get("predicted_reg") is not None and \
               row["predicted_reg"] != B.reg:
                raise VerificationError(
                    f"regularity formula violated at k={k}: "
                    f"predicted {row['predicted_reg']}, oracle {B.reg}")
        powers[k] = row
    timings["powers"] = time.time() - t0

    symbolic: dict = {}
    t0 = time.time()
    for k in range(2, min(k_max, 2) + 1):
        if G.n <= symbolic_n_max:
            symbolic[k] = bei.symbolic_equals_ordinary(G, k, n_max=symbolic_n_max)
        else:
            symbolic[k] = "capacity"
    timings["symbolic"] = time.time() - t0

    return InvariantReport(
        graph_edges=serialize_edge_list(G), n=G.n, flags=flags,
        cut_sets=cut_list, dimension=dim_comb, dimension_agrees=dim_ok,
        powers=powers, symbolic=symbolic, betti=betti_tables,
        field_char=field.char, seed=seed, k_max=k_max, timings=timings)


# ------------------------------------------------------ enumeration runs


@dataclass
class EnumerationRun:
    selector: str
    n_max: int
    graphs_seen: int
    counterexamples: list
    evidence: dict
    truncated: bool = False
    assertable: bool = True          # False for open questions

    def to_json(self) -> str:
        return json.dumps({
            "selector": self.selector, "n_max": self.n_max,
            "graphs": self.graphs_seen,
            "counterexamples": self.counterexamples,
            "evidence": self.evidence, "truncated": self.truncated,
            "assertable": self.assertable,
        }, sort_keys=True)


def _closed_relabeled(G: Graph):
    sigma = recognize_closed(G)
    if sigma is None:
        return None
    return relabel_graph(G, sigma)


def _initial_power_gens(J: Ideal, k: int):
    ring = J.ring
    in1 = J.initial_gens()
    mons = list(in1)
    for _ in range(k - 1):
        mons = minimalize([a + b for a in mons for b in in1], ring)
    return tuple(minimalize(mons, ring))


def check_dimension(G: Graph) -> dict:
    ok = bei.dimension_quotient(G) == krull_dimension(bei.binomial_edge_ideal(G))
    return {"ok": ok}


def check_closed_groebner(G: Graph) -> dict:
    """The quadratic-basis criterion: some relabeling leaves the edge
    binomials a reduced basis iff the graph is closed; absence is
    re-verified by the exhaustive labeling search."""
    from .graphs import _search_closed_labeling
    sigma = recognize_closed(G)
    J = bei.binomial_edge_ideal(G)
    if sigma is not None:
        Jc = bei.binomial_edge_ideal(relabel_graph(G, sigma))
        gb = Jc.groebner_basis()
        ok = len(gb) == len(Jc.gens) and \
            {g.key() for g in gb} == {g.key() for g in Jc.gens}
    else:
        ok = _search_closed_labeling(G) is None
        # under the identity labeling the basis must grow
        if ok and G.edges:
            gb = J.groebner_basis()
            ok = {g.key() for g in gb} != {g.key() for g in J.gens}
    # either way, per-labeling equivalence on the identity labeling
    gb_id = J.groebner_basis()
    quadratic = {g.key() for g in gb_id} == {g.key() for g in J.gens}
    ok = ok and (quadratic == closed_under_labeling(G))
    return {"ok": ok}


def check_initial_power(G: Graph, k_max: int = 2) -> dict:
    """in(J^k) = (in J)^k for closed graphs."""
    closed = _closed_relabeled(G)
    if closed is None:
        return {"ok": True, "skipped": True}
    J = bei.binomial_edge_ideal(closed)
    for k in range(1, k_max + 1):
        Jk = ideal_power(J, k)
        lhs = tuple(minimalize(Jk.initial_gens(), J.ring))
        if lhs != _initial_power_gens(J, k):
            return {"ok": False, "k": k}
    return {"ok": True}


def check_symbolic_power_closed(G: Graph, k: int = 2) -> dict:
    """J^k = J^(k) for closed graphs."""
    closed = _closed_relabeled(G)
    if closed is None:
        return {"ok": True, "skipped": True}
    return {"ok": bei.symbolic_equals_ordinary(closed, k)}


def check_netfree_symbolic(G: Graph, k: int = 2) -> dict:
    """Net-free iff J^2 = J^(2); recorded as replication evidence."""
    net_free = forbidden_subgraph_scan(G).net is None
    equal = bei.symbolic_equals_ordinary(G, k)
    return {"ok": net_free == equal, "net_free": net_free, "equal": equal}


def check_depth_formula(G: Graph, k_max: int = 3, field=None,
                        seed: int = 0) -> dict:
    """Oracle depth of S/J^k and S/(in J)^k against the clique formula,
    for closed Cohen-Macaulay graphs."""
    field = field or GF(DEFAULT_PRIME)
    closed = _closed_relabeled(G)
    if closed is None or not bei.cm_closed(closed).cm:
        return {"ok": True, "skipped": True}
    profile = formulas.depth_powers_cm_closed(closed)
    J = bei.binomial_edge_ideal(closed)
    ring = J.ring
    for k in range(1, k_max + 1):
        want = profile.depth(k)
        Jk = ideal_power(J, k)
        B = oracle.betti_table(Jk, field=field)
        ini = Ideal(ring, [ring.monomial_poly(m)
                           for m in _initial_power_gens(J, k)])
        Bi = oracle.betti_table(ini, field=field)
        probe = oracle.depth_probe_generic_forms(Jk, field=field, seed=seed)
        if not (B.depth == Bi.depth == probe == want):
            return {"ok": False, "k": k, "predicted": want,
                    "oracle": B.depth, "initial": Bi.depth, "probe": probe}
        if not (oracle.hilbert_consistency(Jk, B)
                and oracle.hilbert_consistency(ini, Bi)):
            return {"ok": False, "k": k, "hilbert": False}
    return {"ok": True}


def check_reg_formula(G: Graph, k_max: int = 2, field=None) -> dict:
    """Oracle regularity of S/J^k and S/(in J)^k against the
    induced-path formula, for closed graphs."""
    field = field or GF(DEFAULT_PRIME)
    closed = _closed_relabeled(G)
    if closed is None:
        return {"ok": True, "skipped": True}
    J = bei.binomial_edge_ideal(closed)
    ring = J.ring
    for k in range(1, k_max + 1):
        want = formulas.reg_powers_closed(closed, k)
        Jk = ideal_power(J, k)
        B = oracle.betti_table(Jk, field=field)
        ini = Ideal(ring, [ring.monomial_poly(m)
                           for m in _initial_power_gens(J, k)])
        Bi = oracle.betti_table(ini, field=field)
        if not (B.reg == Bi.reg == want):
            return {"ok": False, "k": k, "predicted": want,
                    "oracle": B.reg, "initial": Bi.reg}
    return {"ok": True}


def check_persistence(G: Graph, k_max: int = 2) -> dict:
    closed = _closed_relabeled(G)
    if closed is None:
        return {"ok": True, "skipped": True}
    for k in range(1, k_max + 1):
        if not formulas.persistence_check(closed, k):
            return {"ok": False, "k": k}
    return {"ok": True}


def check_betti_conjecture(G: Graph, k_max: int = 2, field=None) -> dict:
    """Entrywise equality of the tables of J^k and (in J)^k for closed
    graphs; evidence only, with honest rank computations everywhere."""
    field = field or GF(DEFAULT_PRIME)
    closed = _closed_relabeled(G)
    if closed is None:
        return {"ok": True, "skipped": True}
    J = bei.binomial_edge_ideal(closed)
    ring = J.ring
    mismatches = []
    for k in range(1, k_max + 1):
        Jk = ideal_power(J, k)
        B = oracle.betti_table(Jk, field=field, use_rigidity=False)
        ini = Ideal(ring, [ring.monomial_poly(m)
                           for m in _initial_power_gens(J, k)])
        Bi = oracle.betti_table(ini, field=field)
        if B.entries != Bi.entries:
            mismatches.append(k)
    return {"ok": not mismatches, "mismatch_at": mismatches}


def check_cm_betti_equal(G: Graph, field=None) -> dict:
    """The proven first-power case for Cohen-Macaulay closed graphs."""
    field = field or GF(DEFAULT_PRIME)
    closed = _closed_relabeled(G)
    if closed is None or not bei.cm_closed(closed).cm:
        return {"ok": True, "skipped": True}
    J = bei.binomial_edge_ideal(closed)
    ring = J.ring
    B = oracle.betti_table(J, field=field, use_rigidity=False)
    ini = Ideal(ring, [ring.monomial_poly(m) for m in J.initial_gens()])
    Bi = oracle.betti_table(ini, field=field)
    return {"ok": B.entries == Bi.entries}


def check_depth_question(G: Graph, k_max: int = 3, field=None) -> dict:
    """Open question: is the depth function of J non-increasing for all
    closed graphs?  Recorded, never asserted; the initial-ideal side is
    a theorem and is asserted through the oracle guard."""
    field = field or GF(DEFAULT_PRIME)
    closed = _closed_relabeled(G)
    if closed is None:
        return {"ok": True, "skipped": True}
    ini_monotone = oracle.depth_monotone_initial(closed, k_max, field=field)
    J = bei.binomial_edge_ideal(closed)
    depths = []
    for k in range(1, k_max + 1):
        depths.append(oracle.betti_table(ideal_power(J, k), field=field).depth)
    j_monotone = all(a >= b for a, b in zip(depths, depths[1:]))
    return {"ok": ini_monotone, "j_side_non_increasing": j_monotone,
            "depths": depths}


SELECTORS = {
    "dim": (check_dimension, True),
    "closed-gb": (check_closed_groebner, True),
    "eq3": (check_initial_power, True),
    "eq4": (check_symbolic_power_closed, True),
    "q4": (check_netfree_symbolic, False),
    "depth": (check_depth_formula, True),
    "reg": (check_reg_formula, True),
    "persistence": (check_persistence, True),
    "conj52": (check_betti_conjecture, False),
    "cm-betti": (check_cm_betti_equal, True),
    "q51": (check_depth_question, False),
}


def run_enumeration(selector: str, n_max: int, *, n_min: int = 1,
                    budget_seconds: float | None = None,
                    jobs: int = 1, **kw) -> EnumerationRun:
    """Apply one named check to every connected graph up to isomorphism."""
    if selector not in SELECTORS:
        raise ValueError(f"unknown selector {selector!r}; "
                         f"choose from {sorted(SELECTORS)}")
    fn, assertable = SELECTORS[selector]
    counterexamples = []
    evidence: dict = {"checked": 0, "skipped": 0}
    seen = 0
    truncated = False
    start = time.time()
    graphs = [g for n in range(n_min, n_max + 1) for g in connected_graphs(n)]
    if jobs > 1:
        import multiprocessing as mp
        with mp.Pool(jobs) as pool:
            results = pool.map(_SelectorJob(selector, kw), graphs)
    else:
        results = None
    for idx, G in enumerate(graphs):
        if budget_seconds is not None and time.time() - start > budget_seconds:
            truncated = True
            break
        verdict = results[idx] if results is not None else fn(G, **kw)
        seen += 1
        if verdict.get("skipped"):
            evidence["skipped"] += 1
            continue
        evidence["checked"] += 1
        if not verdict.get("ok", False):
            record = {"graph": serialize_edge_list(G) or f"n={G.n}",
                      "detail": {k: v for k, v in verdict.items()
                                 if k not in ("ok", "skipped")}}
            counterexamples.append(record)
    return EnumerationRun(selector, n_max, seen, counterexamples, evidence,
                          truncated, assertable)


class _SelectorJob:
    """Picklable wrapper so worker pools can run a selector."""

    def __init__(self, selector: str, kw: dict):
        self.selector = selector
        self.kw = kw

    def __call__(self, G: Graph) -> dict:
        fn, _ = SELECTORS[self.selector]
        return fn(G, **self.kw)


def witness_certificate(G: Graph, k: int, field=QQ) -> dict | None:
    """Machine-checkable certificate that J^(k) and J^k differ, from an
    induced net; None when the graph has no induced net."""
    scan = forbidden_subgraph_scan(G)
    if scan.net is None:
        return None
    w = bei.net_witness_family(G, scan.net, k, field=field, check=True)
    return {
        "embedding": list(scan.net),
        "k": k,
        "witness": poly_str(w),
        "symbolic_member": True,
        "ordinary_member": False,
    }
