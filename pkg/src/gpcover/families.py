"""Constructors for the concrete graph families.

Labeling convention for GP(n,k), fixed across the whole package: outer
vertex u_i is index i and inner vertex v_i is index n+i, so permutations
built in :mod:`gpcover.perms` apply without translation.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .graphs import Graph, graph


@dataclass(frozen=True)
class GpParams:
    """A validated (n, k) pair: n >= 3 and 1 <= k < n/2."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"n must be at least 3, got {self.n}")
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if 2 * self.k >= self.n:
            raise ValueError(f"k={self.k} violates k < n/2 for n={self.n}")


@dataclass(frozen=True)
class LcfSpec:
    """Cyclic jump sequence over Z_n: an n-cycle plus the chords {i, i+f(i)}.

    Construction is deliberately unvalidated so degenerate sequences can be
    inspected and reported; :func:`lcf_violations` lists the problems and
    :func:`lcf` refuses to materialize an invalid spec.
    """

    n: int
    jumps: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"n must be at least 3, got {self.n}")
        if len(self.jumps) != self.n:
            raise ValueError(f"expected {self.n} jumps, got {len(self.jumps)}")


def lcf_violations(spec: LcfSpec) -> list[str]:
    """Reasons the spec fails to describe a simple cubic Hamiltonian graph.

    Checks, in order: zero jumps (loops), jumps of +-1 (would duplicate a
    ring edge), and matching closure f(i + f(i)) = -f(i) (mod n), which
    makes the chords a fixed-point-free pairing.
    """
    n = spec.n
    f = [j % n for j in spec.jumps]
    problems = []
    zeros = [i for i in range(n) if f[i] == 0]
    if zeros:
        problems.append(f"zero jump at positions {zeros}")
    ones = [i for i in range(n) if f[i] in (1, n - 1)]
    if ones:
        problems.append(f"jump of +-1 at positions {ones} duplicates a ring edge")
    bad = [i for i in range(n) if f[i] and (f[(i + f[i]) % n] + f[i]) % n != 0]
    if bad:
        problems.append(f"matching closure fails at positions {bad}")
    return problems


def lcf(spec: LcfSpec) -> Graph:
    """Materialize an LCF spec: ring 0-1-...-(n-1)-0 plus chords.

    A jump of n/2 is listed from both ends but yields a single chord.
    """
    problems = lcf_violations(spec)
    if problems:
        raise ValueError("invalid LCF spec: " + "; ".join(problems))
    n = spec.n
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, (i + spec.jumps[i]) % n) for i in range(n)]
    return graph(n, edges)


def gp(p: GpParams) -> Graph:
    """The generalized Petersen graph GP(n,k) on 2n vertices.

    Outer ring u_i u_{i+1}, inner jumps v_i v_{i+k} (gcd(n,k) cycles), and
    the perfect matching of spokes u_i v_i.
    """
    n, k = p.n, p.k
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + k) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return graph(2 * n, edges)


def edge_classes(p: GpParams) -> tuple[tuple, tuple, tuple]:
    """The (outer ring, inner rims, spokes) partition of E(GP(n,k))."""
    n, k = p.n, p.k

    def canon(u: int, v: int) -> tuple[int, int]:
        return (u, v) if u < v else (v, u)

    outer = tuple(sorted(canon(i, (i + 1) % n) for i in range(n)))
    inner = tuple(sorted(canon(n + i, n + (i + k) % n) for i in range(n)))
    spokes = tuple(sorted((i, n + i) for i in range(n)))
    return outer, inner, spokes


def inner_cycle_count(p: GpParams) -> int:
    """Number of cycles induced by the inner jump edges."""
    return gcd(p.n, p.k)


def c_plus(p: GpParams) -> LcfSpec:
    """Jump sequence f(i) = n/2 + i(k-1) mod n.

    Returned unvalidated; degenerate instances surface in :func:`lcf`.
    """
    n, k = p.n, p.k
    if n % 2:
        raise ValueError(f"n must be even, got {n}")
    return LcfSpec(n, tuple((n // 2 + i * (k - 1)) % n for i in range(n)))


def c_minus(p: GpParams) -> LcfSpec:
    """Jump sequence f(i) = n/2 - i(k+1) mod n (unvalidated, see c_plus)."""
    n, k = p.n, p.k
    if n % 2:
        raise ValueError(f"n must be even, got {n}")
    return LcfSpec(n, tuple((n // 2 - i * (k + 1)) % n for i in range(n)))


def h_graph() -> Graph:
    """The 10-vertex cubic apex graph: K3 x P3 (Cartesian) with the middle
    triangle deleted and a new vertex joined to the three degree-2 vertices.

    Labeling: (t, p) -> 3p + t for triangle position t and path layer p,
    apex is vertex 9.
    """
    edges = []
    for p in (0, 2):  # end-layer triangles; middle layer stays edgeless
        base = 3 * p
        edges += [(base, base + 1), (base + 1, base + 2), (base, base + 2)]
    for t in range(3):  # path edges between consecutive layers
        edges += [(t, t + 3), (t + 3, t + 6)]
    edges += [(9, 3), (9, 4), (9, 5)]  # apex to the middle layer
    return graph(10, edges)


def moebius_ladder(n: int) -> Graph:
    """The n-cycle plus all antipodal chords (n even, n >= 4)."""
    if n < 4 or n % 2:
        raise ValueError(f"need even n >= 4, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, i + n // 2) for i in range(n // 2)]
    return graph(n, edges)
