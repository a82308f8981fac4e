"""Executable acceptance checks, shared by ``fraclab verify`` and the test suite.

Each check returns a :class:`CheckResult`; none raises on a failed
comparison. Trial counts default to the published scale and can be changed
with ``trials``.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable

from fraclab.classify import HostClassFlags, PatternClassFlags, classify_hom, classify_indsub, classify_sub
from fraclab.counting import (
    count_colour_preserving,
    count_colourful_indsets,
    count_colourful_matchings,
    count_cp_hom,
    count_hom,
)
from fraclab.errors import InconsistentFlags, InvalidInput
from fraclab.graphcore import (
    EdgeSubset,
    Fracture,
    chain_condition_check,
    embed_into_subdivided_clique,
    lift_colouring,
    subdivide,
    tensor,
)
from fraclab.graphcore.generate import clique, grid, isolated_free_graphs, paw, path, wall
from fraclab.hombasis import (
    indset_coefficients,
    match_coefficients,
    matrix_M,
    matrix_N,
    top_closed_form,
)
from fraclab.homdp import count_hom_td
from fraclab.invariants import treewidth_exact
from fraclab.linalg import determinant
from fraclab.oracles import CountingOracle, Problem, SubdividedCliqueSubgraphs
from fraclab.reductions import (
    colourful_from_uncoloured_indsets,
    colourful_from_uncoloured_matchings,
    colourful_homs_from_hom,
    cphom_from_hom,
    recover_cphom_via_indsets,
    recover_cphom_via_matchings,
    wall_lift,
)
from fraclab.sampling import random_coloured, random_graph, random_pattern, random_tree, rng_for


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.detail} ({self.seconds:.1f}s)"


PIPELINE_PATTERNS = (("K2", clique(2)), ("P3", path(3)), ("K3", clique(3)), ("paw", paw()))


def _pipeline(name: str, fn, problem: Problem, seed: int, trials: int, keep_logs: bool):
    failures, logs, nonzero, runs = [], [], 0, 0
    for label, pattern in PIPELINE_PATTERNS:
        for r in (0, 1):
            rng = rng_for(seed, name, label, r)
            for t in range(trials):
                cg = random_coloured(rng, pattern, 7)
                truth = count_cp_hom(cg)
                oracle = None
                if keep_logs:
                    oracle = CountingOracle(problem, SubdividedCliqueSubgraphs(r))
                got = fn(cg, r, oracle)
                runs += 1
                nonzero += truth != 0
                if got != truth:
                    failures.append((label, r, t, got, truth))
                if keep_logs:
                    logs.append((label, r, cg, oracle))
    return failures, logs, runs, nonzero


_MATCH_LOGS: dict = {}


def check_match_pipeline(seed: int = 0, trials: int = 20) -> CheckResult:
    failures, logs, runs, nonzero = _pipeline("match", recover_cphom_via_matchings, Problem.COLOURFUL_MATCHINGS, seed, trials, True)
    _MATCH_LOGS[(seed, trials)] = logs
    return CheckResult(
        "interpolation-matchings", not failures,
        f"{runs} runs over K2, P3, K3, paw with r in {{0,1}}; {nonzero} nonzero; {len(failures)} mismatches",
        failures=failures,
    )


def check_indset_pipeline(seed: int = 0, trials: int = 20) -> CheckResult:
    failures, _, runs, nonzero = _pipeline("indset", lambda cg, r, _o: recover_cphom_via_indsets(cg, r), Problem.COLOURFUL_INDSETS, seed, trials, False)
    return CheckResult(
        "interpolation-indsets", not failures,
        f"{runs} runs over K2, P3, K3, paw with r in {{0,1}}; {nonzero} nonzero; {len(failures)} mismatches",
        failures=failures,
    )


def tested_patterns() -> list:
    """Isolated-vertex-free graphs with at most 5 edges, plus K_3^1."""
    return [*isolated_free_graphs(5), subdivide(clique(3), 1)]


def check_nonsingular(seed: int = 0, trials: int | None = None) -> CheckResult:
    failures = []
    graphs = tested_patterns()
    for g in graphs:
        if determinant(matrix_M(g)) == 0:
            failures.append(("M", sorted(g.edges)))
        if determinant(matrix_N(g)) == 0:
            failures.append(("N", sorted(g.edges)))
    return CheckResult("non-singularity", not failures, f"det M_H and det N_H nonzero on {len(graphs)} patterns; {len(failures)} zero", failures=failures)


def check_coefficients(seed: int = 0, trials: int | None = None) -> CheckResult:
    failures = []
    graphs = [*tested_patterns(), clique(4)]
    for g in graphs:
        a = match_coefficients(g)
        if a[Fracture.coarsest(g)] != top_closed_form(g):
            failures.append(("a(top)", sorted(g.edges)))
        if indset_coefficients(g)[EdgeSubset(g, g.edges)] == 0:
            failures.append(("a-hat(E)", sorted(g.edges)))
    k4 = match_coefficients(clique(4))[Fracture.coarsest(clique(4))]
    if abs(k4) != 16:
        failures.append(("K4", k4))
    return CheckResult(
        "coefficient-identities", not failures,
        f"{len(graphs)} patterns; a(top) for K4 = {k4}; {len(failures)} failures", failures=failures,
    )


def check_tensor(seed: int = 0, trials: int = 200) -> CheckResult:
    rng = rng_for(seed, "tensor")
    failures, nonzero = [], 0
    for t in range(trials):
        pattern = random_pattern(rng, 4)
        src, a, b = (random_coloured(rng, pattern, pattern.n + 2) for _ in range(3))
        lhs = count_colour_preserving(src, tensor(a, b))
        rhs = count_colour_preserving(src, a) * count_colour_preserving(src, b)
        nonzero += lhs != 0
        if lhs != rhs:
            failures.append((t, lhs, rhs))
    return CheckResult(
        "tensor-multiplicativity", not failures,
        f"{trials} triples; {nonzero} nonzero; {len(failures)} mismatches", failures=failures,
    )


def check_subdivision(seed: int = 0, trials: int = 100, wall_trials: int = 20) -> CheckResult:
    rng = rng_for(seed, "subdivision")
    failures, nonzero = [], 0
    for t in range(trials):
        pattern = random_pattern(rng, 4)
        cg = random_coloured(rng, pattern, 7)
        r = rng.randint(0, 3)
        if count_cp_hom(cg) != count_cp_hom(lift_colouring(cg, r)):
            failures.append(("lift", t))
    w = wall(2, 2)
    for t in range(wall_trials):
        divisors = [rng.randint(1, 3) for _ in range(w.m)]
        if len(set(divisors)) == 1:
            divisors[0] = divisors[0] % 3 + 1
        r = rng.randint(1, 2)
        cg = random_coloured(rng, w, 8, p=0.7)
        while {cg.edge_colour(e) for e in cg.host.edges} != w.edges:
            cg = random_coloured(rng, w, 8, p=0.7)
        _, lifted = wall_lift(2, divisors, r, cg)
        before = count_cp_hom(cg)
        nonzero += before != 0
        if before != count_cp_hom(lifted):
            failures.append(("wall", t))
    return CheckResult(
        "subdivision-invariance", not failures,
        f"{trials} lifts and {wall_trials} non-uniform wall lifts ({nonzero} nonzero); {len(failures)} mismatches", failures=failures,
    )


def check_promises(seed: int = 0, trials: int = 20) -> CheckResult:
    logs = _MATCH_LOGS.get((seed, trials))
    if logs is None:
        check_match_pipeline(seed, trials)
        logs = _MATCH_LOGS[(seed, trials)]
    failures, queries, worst = [], 0, 0.0
    for label, r, cg, oracle in logs:
        bound = 10 * subdivide(cg.pattern, r).m * cg.host.n
        for entry in oracle.log:
            queries += 1
            host = entry.query.host
            if not (entry.promise_ok and chain_condition_check(host, r)):
                failures.append((label, r, entry.digest, "chain"))
                continue
            try:
                emb = embed_into_subdivided_clique(host, r)
            except InvalidInput as exc:
                failures.append((label, r, entry.digest, str(exc)))
                continue
            worst = max(worst, emb.m / bound)
            if emb.m > bound:
                failures.append((label, r, entry.digest, f"m={emb.m}"))
    return CheckResult(
        "promise-discipline", not failures and queries > 0,
        f"{queries} logged queries embedded; largest m / bound = {worst:.3f}; {len(failures)} failures",
        failures=failures,
    )


def check_treewidth(seed: int = 0, trials: int = 50, tree_trials: int = 20) -> CheckResult:
    rng = rng_for(seed, "treewidth")
    failures = []
    for k in (2, 3, 4):
        w, _ = treewidth_exact(grid(k))
        if w != k:
            failures.append((f"grid {k}", w))
    for n in range(1, 9):
        w, _ = treewidth_exact(clique(n))
        if w != n - 1:
            failures.append((f"K{n}", w))
    for _ in range(tree_trials):
        n = rng.randint(2, 18)
        w, _ = treewidth_exact(random_tree(rng, n))
        if w != 1:
            failures.append((f"tree {n}", w))
    for t in range(trials):
        h = random_graph(rng, rng.randint(1, 6))
        g = random_graph(rng, rng.randint(1, 8))
        _, td = treewidth_exact(h)
        if count_hom_td(h, td, g) != count_hom(h, g):
            failures.append(("dp", t))
    return CheckResult(
        "treewidth", not failures,
        f"grids 2-4, K1-K8, {tree_trials} trees, {trials} hom DP pairs; {len(failures)} failures", failures=failures,
    )


def _subgraph_log_ok(oracle, host) -> bool:
    for entry in oracle.log:
        q = entry.query
        origin = q.origin
        if origin is None or len(set(origin)) != q.host.n:
            return False
        if not all(host.has_edge(origin[u], origin[v]) for u, v in q.host.edges):
            return False
    return bool(oracle.log)


def check_uncolouring(seed: int = 0, trials: int = 50) -> CheckResult:
    rng = rng_for(seed, "uncolouring")
    failures = []
    ops = (
        ("matchings", Problem.MATCHINGS, colourful_from_uncoloured_matchings, count_colourful_matchings, 4),
        ("indsets", Problem.INDSETS, colourful_from_uncoloured_indsets, count_colourful_indsets, 5),
        ("cp-hom", Problem.HOM, cphom_from_hom, count_cp_hom, 5),
    )
    from fraclab.oracles import SubgraphOf

    for name, problem, fn, truth, max_pattern in ops:
        for t in range(trials):
            pattern = random_pattern(rng, max_pattern)
            if name == "matchings":
                while pattern.m == 0 or pattern.m > 4:
                    pattern = random_pattern(rng, max_pattern)
            cg = random_coloured(rng, pattern, 8)
            oracle = CountingOracle(problem, SubgraphOf(cg.host, cg.pattern if problem is Problem.HOM else None))
            if fn(cg, oracle) != truth(cg):
                failures.append((name, t, "value"))
            if not _subgraph_log_ok(oracle, cg.host):
                failures.append((name, t, "query outside host"))
    return CheckResult("uncolouring", not failures, f"3 operations x {trials} trials; {len(failures)} failures", failures=failures)


def golden_cases() -> list[dict]:
    text = resources.files("fraclab").joinpath("data/dichotomy_golden.json").read_text(encoding="utf-8")
    return json.loads(text)["cases"]


CLASSIFIERS = {"sub": classify_sub, "indsub": classify_indsub, "hom": classify_hom}


def check_dichotomy(seed: int = 0, trials: int | None = None) -> CheckResult:
    failures = []
    cases = golden_cases()
    for case in cases:
        v = CLASSIFIERS[case["problem"]](PatternClassFlags(**case["pattern"]), HostClassFlags(**case["host"]))
        if (v.klass, v.lower_bound) != (case["class"], case["lower_bound"]):
            failures.append((case["problem"], case["row"], case["column"], v.klass))
    bad = PatternClassFlags(m="infinite", m_ind="finite", beta_ind="finite", omega="finite")
    try:
        classify_sub(bad, HostClassFlags())
        failures.append(("inconsistent flags accepted",))
    except InconsistentFlags as exc:
        if exc.rule != "ramsey-matching":
            failures.append(("wrong rule", exc.rule))
    try:
        classify_hom(PatternClassFlags(closure="hereditary", tw="infinite"), HostClassFlags())
        failures.append(("hereditary #Hom accepted",))
    except InvalidInput:
        pass
    counts = {p: sum(c["problem"] == p for c in cases) for p in CLASSIFIERS}
    return CheckResult(
        "dichotomy-fidelity", not failures,
        f"{counts['sub']} #Sub cells, {counts['indsub']} #IndSub cells, {counts['hom']} #Hom verdicts; {len(failures)} failures",
        failures=failures,
    )


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "interpolation-matchings": check_match_pipeline,
    "interpolation-indsets": check_indset_pipeline,
    "non-singularity": check_nonsingular,
    "coefficient-identities": check_coefficients,
    "tensor-multiplicativity": check_tensor,
    "subdivision-invariance": check_subdivision,
    "promise-discipline": check_promises,
    "treewidth": check_treewidth,
    "uncolouring": check_uncolouring,
    "dichotomy-fidelity": check_dichotomy,
}


def run_check(name: str, seed: int = 0, trials: int | None = None) -> CheckResult:
    if name not in CHECKS:
        raise InvalidInput(f"unknown check {name!r}; expected one of {', '.join(CHECKS)}")
    start = time.perf_counter()
    kwargs = {"seed": seed}
    if trials is not None:
        kwargs["trials"] = trials
    result = CHECKS[name](**kwargs)
    result.seconds = time.perf_counter() - start
    return result
