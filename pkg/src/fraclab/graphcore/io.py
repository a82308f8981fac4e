"""Line-oriented text format.

Plain graph::

    # comment
    p <n> <m>
    e <u> <v>        (0-based, u < v)

Coloured graph: two sections introduced by ``%pattern`` and ``%host``; the
host section additionally carries ``c <vertex> <colour>`` lines, one per host
vertex.
"""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Iterable

from fraclab.errors import InvalidInput
from fraclab.graphcore.types import ColouredGraph, Graph


def _parse_section(lines: Iterable[tuple[int, str]], where: str) -> tuple[Graph, dict[int, int]]:
    header = None
    edges: list[tuple[int, int]] = []
    colour: dict[int, int] = {}
    for lineno, line in lines:
        parts = line.split()
        tag = parts[0]
        try:
            nums = [int(x) for x in parts[1:]]
        except ValueError:
            raise InvalidInput(f"{where}:{lineno}: non-integer field in {line!r}") from None
        if tag == "p" and len(nums) == 2:
            if header is not None:
                raise InvalidInput(f"{where}:{lineno}: duplicate 'p' header")
            header = nums
        elif tag == "e" and len(nums) == 2:
            if nums[0] >= nums[1]:
                raise InvalidInput(f"{where}:{lineno}: edge endpoints must satisfy u < v")
            edges.append((nums[0], nums[1]))
        elif tag == "c" and len(nums) == 2:
            if nums[0] in colour:
                raise InvalidInput(f"{where}:{lineno}: vertex {nums[0]} coloured twice")
            colour[nums[0]] = nums[1]
        else:
            raise InvalidInput(f"{where}:{lineno}: cannot parse {line!r}")
    if header is None:
        raise InvalidInput(f"{where}: missing 'p <n> <m>' header")
    n, m = header
    graph = Graph.from_edges(n, edges)
    if graph.m != m or len(edges) != m:
        raise InvalidInput(f"{where}: header announces {m} edges, found {len(edges)} distinct={graph.m}")
    return graph, colour


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_graph(text: str, where: str = "<string>") -> Graph:
    lines = list(_content_lines(text))
    if any(line.startswith("%") for _, line in lines):
        raise InvalidInput(f"{where}: coloured-graph file given where a plain graph was expected")
    graph, colour = _parse_section(lines, where)
    if colour:
        raise InvalidInput(f"{where}: colour lines in a plain graph file")
    return graph


def parse_coloured(text: str, where: str = "<string>") -> ColouredGraph:
    sections: dict[str, list] = {}
    current = None
    for lineno, line in _content_lines(text):
        if line.startswith("%"):
            current = line[1:].strip()
            if current not in ("pattern", "host") or current in sections:
                raise InvalidInput(f"{where}:{lineno}: unexpected section marker {line!r}")
            sections[current] = []
        elif current is None:
            raise InvalidInput(f"{where}:{lineno}: content before '%pattern'/'%host' marker")
        else:
            sections[current].append((lineno, line))
    if set(sections) != {"pattern", "host"}:
        raise InvalidInput(f"{where}: need both %pattern and %host sections")
    pattern, pcol = _parse_section(sections["pattern"], where)
    if pcol:
        raise InvalidInput(f"{where}: colour lines belong in the host section")
    host, colour = _parse_section(sections["host"], where)
    if sorted(colour) != list(range(host.n)):
        raise InvalidInput(f"{where}: every host vertex needs exactly one 'c' line")
    return ColouredGraph.from_mapping(pattern, host, colour)


def format_graph(graph: Graph, comment: str | None = None) -> str:
    out = [f"# {comment}"] if comment else []
    out.append(f"p {graph.n} {graph.m}")
    out.extend(f"e {u} {v}" for u, v in graph.edge_list)
    return "\n".join(out) + "\n"


def format_coloured(cg: ColouredGraph, comment: str | None = None) -> str:
    out = [f"# {comment}"] if comment else []
    out.append("%pattern")
    out.append(format_graph(cg.pattern).rstrip("\n"))
    out.append("%host")
    out.append(format_graph(cg.host).rstrip("\n"))
    out.extend(f"c {u} {c}" for u, c in enumerate(cg.colour))
    return "\n".join(out) + "\n"


def to_dot(graph: Graph, name: str = "G", colour: tuple[int, ...] | None = None) -> str:
    out = [f"graph {name} {{"]
    for v in graph.vertices():
        label = f' [label="{v}:{colour[v]}"]' if colour is not None else ""
        out.append(f"  {v}{label};")
    out.extend(f"  {u} -- {v};" for u, v in graph.edge_list)
    out.append("}")
    return "\n".join(out) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(), str(path))


def read_coloured(path: str | Path) -> ColouredGraph:
    return parse_coloured(Path(path).read_text(), str(path))


def digest(obj: Graph | ColouredGraph) -> str:
    """Short content hash of the canonical text serialisation."""
    text = format_coloured(obj) if isinstance(obj, ColouredGraph) else format_graph(obj)
    return hashlib.sha256(text.encode()).hexdigest()[:16]
