"""Simple undirected graphs as immutable values.

Vertices are dense integers 0..vertex_count-1.  The edge set is stored
canonically (each pair ordered low-high, pairs sorted), so two Graph values
compare equal exactly when they are the same labelled graph.  All operations
here are pure; Graph values can be shared freely.
"""
from __future__ import annotations

from dataclasses import dataclass
from collections import deque
from functools import lru_cache
from typing import Iterable, Optional, Sequence

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised for malformed graph6 input."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")


def graph(vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a canonical Graph; loops are errors, duplicates are dropped.

    A loop always signals a broken construction upstream (e.g. a quotient by
    something that is not a covering involution), so it is a hard error,
    while duplicate edges can legitimately arise when two edges collapse
    onto one and are silently merged.
    """
    canon: set[Edge] = set()
    for e in edges:
        u, v = e
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"edge ({u},{v}) out of range for {vertex_count} vertices")
        canon.add((u, v) if u < v else (v, u))
    return Graph(vertex_count, tuple(sorted(canon)))


@lru_cache(maxsize=2048)
def adjacency(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Sorted neighbor lists, indexed by vertex."""
    adj: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    return tuple(tuple(sorted(a)) for a in adj)


@lru_cache(maxsize=2048)
def adjacency_masks(g: Graph) -> tuple[int, ...]:
    """Neighborhoods as integer bitsets (bit v set iff v is a neighbor)."""
    masks = [0] * g.vertex_count
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return tuple(masks)


def degrees(g: Graph) -> tuple[int, ...]:
    return tuple(len(a) for a in adjacency(g))


def is_regular(g: Graph, degree: int) -> bool:
    return all(d == degree for d in degrees(g))


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by least vertex."""
    adj = adjacency(g)
    seen = [False] * g.vertex_count
    comps: list[list[int]] = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def bipartition(g: Graph) -> Optional[list[int]]:
    """2-coloring with colors 0/1, or None if an odd cycle exists.

    Within each connected component the least-index vertex gets color 0.
    """
    adj = adjacency(g)
    color = [-1] * g.vertex_count
    for start in range(g.vertex_count):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for forests.

    BFS from every vertex; a non-tree edge (u,w) seen from root r closes a
    walk of length d(u)+d(w)+1 that contains a cycle, and for r on a
    shortest cycle the bound is attained.
    """
    adj = adjacency(g)
    best: Optional[int] = None
    for root in range(g.vertex_count):
        dist = [-1] * g.vertex_count
        parent = [-1] * g.vertex_count
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return best


# ---------------------------------------------------------------------------
# graph6 interchange format (McKay's ASCII packing of the upper triangle)

_G6_MAX = 258047


def encode_graph6(g: Graph) -> str:
    """Standard graph6 string: size header, then the upper-triangle bits
    x(0,1) x(0,2) x(1,2) x(0,3) ... packed 6 per character, offset by 63."""
    n = g.vertex_count
    if n > _G6_MAX:
        raise ValueError(f"graph6 supports at most {_G6_MAX} vertices")
    if n <= 62:
        header = chr(63 + n)
    else:
        header = "~" + "".join(chr(63 + ((n >> s) & 0x3F)) for s in (12, 6, 0))
    nbits = n * (n - 1) // 2
    bits = bytearray((nbits + 5) // 6)
    for u, v in g.edges:
        pos = v * (v - 1) // 2 + u  # u < v by canonical storage
        bits[pos // 6] |= 1 << (5 - pos % 6)
    return header + "".join(chr(63 + b) for b in bits)


def decode_graph6(s: str | bytes) -> Graph:
    """Inverse of encode_graph6; strict about length and character range."""
    if isinstance(s, bytes):
        s = s.decode("ascii")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    s = s.rstrip("\n")
    if not s:
        raise GraphFormatError("empty graph6 string")
    vals = []
    for ch in s:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise GraphFormatError(f"character {ch!r} outside graph6 range")
        vals.append(code)
    if vals[0] == 63:  # '~': extended size header
        if len(vals) < 4 or vals[1] == 63:
            raise GraphFormatError("malformed graph6 size header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise GraphFormatError("truncated graph6 bit field")
    if len(body) > need:
        raise GraphFormatError("trailing garbage after graph6 bit field")
    edges = []
    pos = 0
    for v in range(1, n):
        for u in range(v):
            if body[pos // 6] & (1 << (5 - pos % 6)):
                edges.append((u, v))
            pos += 1
    return graph(n, edges)


def to_dot(g: Graph, labels: Optional[Sequence[str]] = None) -> str:
    """DOT `graph` block; node lines only when labels are given."""
    if labels is not None and len(labels) != g.vertex_count:
        raise ValueError(
            f"got {len(labels)} labels for {g.vertex_count} vertices"
        )
    lines = ["graph G {"]
    if labels is not None:
        for v in range(g.vertex_count):
            text = labels[v].replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  {v} [label="{text}"];')
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
