"""Counting oracles with promise validation and a query log.

A reduction only talks to its oracle. Each query is checked against the
oracle's promise before the counter runs; a failing check is logged and
raises :class:`PromiseViolation`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Callable

from fraclab.counting import (
    count_colourful_indsets,
    count_colourful_matchings,
    count_hom,
    count_indsets,
    count_matchings,
)
from fraclab.errors import PromiseViolation
from fraclab.graphcore.chains import chain_condition_check
from fraclab.graphcore.io import digest
from fraclab.graphcore.types import ColouredGraph, Graph


class Problem(str, enum.Enum):
    COLOURFUL_MATCHINGS = "colourful-matchings"
    COLOURFUL_INDSETS = "colourful-indsets"
    MATCHINGS = "matchings"
    INDSETS = "indsets"
    HOM = "hom"


@dataclass(frozen=True)
class Query:
    """One oracle question.

    ``graph`` is the graph being counted in (coloured for the colourful
    problems). ``k`` is the solution size for matchings / indsets, ``pattern``
    the pattern for hom. ``origin`` maps query vertices to vertices of the
    graph the reduction started from, when the query is a subgraph of it.
    """

    problem: Problem
    graph: Graph | ColouredGraph
    k: int | None = None
    pattern: Graph | None = None
    origin: tuple[int, ...] | None = None

    @property
    def host(self) -> Graph:
        return self.graph.host if isinstance(self.graph, ColouredGraph) else self.graph


# -- promises --------------------------------------------------------------

class Promise:
    description = "any input"

    def check(self, query: Query) -> bool:
        return True

    def __str__(self):
        return self.description


class SubdividedCliqueSubgraphs(Promise):
    """Queries whose (uncoloured) host passes the chain condition at r."""

    def __init__(self, r: int):
        self.r = r
        self.description = f"subgraphs of {r}-subdivided cliques"

    def check(self, query):
        return chain_condition_check(query.host, self.r)


class EdgeSubgraphOf(Promise):
    """Coloured queries on the same vertices and colours with a subset of the edges."""

    def __init__(self, reference: ColouredGraph):
        self.reference = reference
        self.description = f"edge-subgraphs of coloured graph {digest(reference)}"

    def check(self, query):
        g = query.graph
        ref = self.reference
        return (
            isinstance(g, ColouredGraph)
            and g.pattern == ref.pattern
            and g.colour == ref.colour
            and g.host.n == ref.host.n
            and g.host.edges <= ref.host.edges
        )


class SubgraphOf(Promise):
    """The query host embeds into ``reference`` via the query's origin map
    (and, for hom queries, uses the given pattern)."""

    def __init__(self, reference: Graph, pattern: Graph | None = None):
        self.reference = reference
        self.pattern = pattern
        self.description = f"subgraphs of graph {digest(reference)}"

    def check(self, query):
        origin = query.origin
        host = query.host
        if origin is None or len(origin) != host.n or len(set(origin)) != host.n:
            return False
        if any(not 0 <= x < self.reference.n for x in origin):
            return False
        if self.pattern is not None and query.pattern != self.pattern:
            return False
        return all(self.reference.has_edge(origin[u], origin[v]) for u, v in host.edges)


class AllOf(Promise):
    def __init__(self, *parts: Promise):
        self.parts = parts
        self.description = " and ".join(p.description for p in parts)

    def check(self, query):
        return all(p.check(query) for p in self.parts)


# -- oracle ----------------------------------------------------------------

def _default_counter(query: Query) -> int:
    if query.problem is Problem.COLOURFUL_MATCHINGS:
        return count_colourful_matchings(query.graph)
    if query.problem is Problem.COLOURFUL_INDSETS:
        return count_colourful_indsets(query.graph)
    if query.problem is Problem.MATCHINGS:
        return count_matchings(query.graph, query.k)
    if query.problem is Problem.INDSETS:
        return count_indsets(query.graph, query.k)
    return count_hom(query.pattern, query.graph)


@dataclass
class LogEntry:
    query: Query
    digest: str
    promise_ok: bool
    result: int | None

    def trace_line(self) -> str:
        status = "ok" if self.promise_ok else "violation"
        result = "-" if self.result is None else str(self.result)
        return f"{self.query.problem.value} {self.digest} promise={status} result={result}"


@dataclass
class CountingOracle:
    problem: Problem
    promise: Promise = field(default_factory=Promise)
    counter: Callable[[Query], int] = _default_counter
    log: list[LogEntry] = field(default_factory=list)

    def ask(self, query: Query) -> int:
        if query.problem is not self.problem:
            raise PromiseViolation(f"oracle answers {self.problem.value}, got a {query.problem.value} query")
        ok = self.promise.check(query)
        entry = LogEntry(query, digest(query.graph), ok, None)
        self.log.append(entry)
        if not ok:
            raise PromiseViolation(f"query {entry.digest} is outside the promise class: {self.promise}")
        entry.result = int(self.counter(query))
        return entry.result

    def trace(self) -> list[str]:
        return [e.trace_line() for e in self.log]


def oracle_for(problem: Problem | str, promise: Promise | None = None, counter: Callable[[Any], int] | None = None) -> CountingOracle:
    return CountingOracle(Problem(problem), promise or Promise(), counter or _default_counter)
