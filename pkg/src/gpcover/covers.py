"""Kronecker covers, covering involutions, and quotients.

Cover labeling: vertex v of the base graph splits into v' = v and
v'' = v + n0 where n0 is the base vertex count, and each base edge uv
becomes the pair {u, v+n0}, {u+n0, v}.
"""
from __future__ import annotations

from typing import Optional, Sequence

from .graphs import Graph, graph, bipartition, is_connected
from .perms import Perm, is_automorphism, is_permutation


class NotKroneckerInvolution(ValueError):
    """Quotient was requested along a map that is not a covering involution."""


def kronecker_cover(g: Graph) -> Graph:
    """The tensor product with a single edge; always bipartite, doubles |V| and |E|."""
    n0 = g.vertex_count
    edges = []
    for u, v in g.edges:
        edges.append((u, v + n0))
        edges.append((u + n0, v))
    return graph(2 * n0, edges)


def natural_swap(base_vertex_count: int) -> Perm:
    """The fixed-point-free involution v' <-> v'' of a cover on 2*n0 vertices."""
    n0 = base_vertex_count
    return tuple((x + n0) % (2 * n0) for x in range(2 * n0))


def kronecker_involution_failure(g: Graph, p: Sequence[int]) -> Optional[str]:
    """None if p is a Kronecker involution of g, else the first failed clause.

    Clauses: g connected; g bipartite; p an automorphism; p an involution;
    no fixed vertex; color-reversing; no vertex mapped to a neighbor (a
    fixed edge would become a loop in the quotient, so the projection
    would not be a covering).
    """
    if len(p) != g.vertex_count or not is_permutation(p):
        return "not a vertex permutation of g"
    if not is_connected(g):
        return "graph is not connected"
    colors = bipartition(g)
    if colors is None:
        return "graph is not bipartite"
    if not is_automorphism(g, p):
        return "not an automorphism"
    if any(p[p[x]] != x for x in range(g.vertex_count)):
        return "not an involution"
    if any(p[x] == x for x in range(g.vertex_count)):
        return "has a fixed vertex"
    if any(colors[p[x]] == colors[x] for x in range(g.vertex_count)):
        return "not color-reversing"
    if any(p[u] == v for u, v in g.edges):
        return "maps a vertex to a neighbor (fixed edge)"
    return None


def is_kronecker_involution(g: Graph, p: Sequence[int]) -> bool:
    if len(p) != g.vertex_count:
        return False
    return kronecker_involution_failure(g, p) is None


def quotient(g: Graph, p: Perm) -> Graph:
    """Contract the orbit pairs {x, p(x)} of a Kronecker involution.

    Orbits are labeled by the rank of their minimum element, so the result
    is deterministic.  The cover of the result is isomorphic to g again.
    """
    failure = kronecker_involution_failure(g, p)
    if failure is not None:
        raise NotKroneckerInvolution(f"not a Kronecker involution: {failure}")
    reps = sorted(x for x in range(g.vertex_count) if x < p[x])
    rank = {x: i for i, x in enumerate(reps)}
    orbit = [rank[min(x, p[x])] for x in range(g.vertex_count)]
    return graph(len(reps), ((orbit[u], orbit[v]) for u, v in g.edges))
