"""Permutations on GP vertex sets and the standard symmetry generators.

Permutations are tuples `image` with image[i] the image of vertex i.
Composition is right-to-left: compose(p, q) applies q first.  With that
convention the rim-switching map alpha^a gamma sends u_i to v_{ki+a},
i.e. index arithmetic i -> ki + a, which is the form all the shift
formulas in :mod:`gpcover.classify` are written in.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import Graph, adjacency_masks
from .families import GpParams

Perm = tuple[int, ...]

_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: (p.q)(i) = p(q(i))."""
    if len(p) != len(q):
        raise ValueError(f"length mismatch: {len(p)} vs {len(q)}")
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, img in enumerate(p):
        inv[img] = i
    return tuple(inv)


def power(p: Perm, m: int) -> Perm:
    if m < 0:
        return power(inverse(p), -m)
    result = identity(len(p))
    base = p
    while m:
        if m & 1:
            result = compose(base, result)
        base = compose(base, base)
        m >>= 1
    return result


def order(p: Perm) -> int:
    q = p
    m = 1
    ident = identity(len(p))
    while q != ident:
        q = compose(p, q)
        m += 1
    return m


# ---------------------------------------------------------------------------
# Generators on GP(n,k) under the labeling u_i -> i, v_i -> n+i.

def rotation(n: int) -> Perm:
    """alpha: u_i -> u_{i+1}, v_i -> v_{i+1}."""
    return tuple((i + 1) % n for i in range(n)) + tuple(
        n + (i + 1) % n for i in range(n)
    )


def reflection(n: int) -> Perm:
    """beta: u_i -> u_{-i}, v_i -> v_{-i}."""
    return tuple(-i % n for i in range(n)) + tuple(n + (-i % n) for i in range(n))


def _gamma_valid(n: int, k: int) -> bool:
    return (k * k) % n in (1 % n, (n - 1) % n)


def rim_swap(n: int, k: int) -> Perm:
    """gamma: u_i -> v_{ki}, v_i -> u_{ki}; an automorphism iff k^2 = +-1 (mod n)."""
    if not _gamma_valid(n, k):
        raise ValueError(
            f"rim swap is not an automorphism of GP({n},{k}): "
            f"k^2 = {k * k % n} is not +-1 (mod {n})"
        )
    return tuple(n + (k * i) % n for i in range(n)) + tuple(
        (k * i) % n for i in range(n)
    )


# The Desargues graph GP(10,3) redrawn as C6 x P3 (Cartesian) with the middle
# hexagon's edges removed and two apex vertices joined alternately to it has
# an evident symmetry: rotate the prism part half a turn and swap the apexes.
# Translating that drawing back into GP labels gives the table below; it is
# an automorphism that mixes the rims, so it lies outside <alpha, beta, gamma>.
_DESARGUES_HALF_TURN: Perm = (
    5, 6, 16, 19, 9, 0, 1, 11, 14, 4,
    15, 7, 13, 12, 8, 10, 2, 18, 17, 3,
)


def desargues_half_turn() -> Perm:
    """The rim-mixing involution of GP(10,3) from its hexagonal drawing."""
    return _DESARGUES_HALF_TURN


# ---------------------------------------------------------------------------
# Canonical words alpha^a beta^b gamma^c.

@dataclass(frozen=True)
class WordTriple:
    """Exponents (a, b, c) of the word alpha^a beta^b gamma^c."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.b not in (0, 1) or self.c not in (0, 1):
            raise ValueError("b and c must be 0 or 1")


def from_triple(n: int, k: int, t: WordTriple) -> Perm:
    """Evaluate alpha^a beta^b gamma^c as a permutation of the 2n GP vertices."""
    if t.c and not _gamma_valid(n, k):
        raise ValueError(f"gamma unavailable: k^2 must be +-1 (mod {n})")

    def image(x: int) -> int:
        rim, i = divmod(x, n)
        if t.c:
            rim, i = 1 - rim, (k * i) % n
        if t.b:
            i = -i % n
        i = (i + t.a) % n
        return i if rim == 0 else n + i

    return tuple(image(x) for x in range(2 * n))


WORD_TOKENS = ("alpha", "alpha^-1", "beta", "beta^-1", "gamma", "gamma^-1")


def normalize_word(n: int, k: int, word: Iterable[str]) -> WordTriple:
    """Rewrite a word in the generators to the unique alpha^a beta^b gamma^c.

    Uses the commuting rules gamma alpha^m = alpha^{mk} gamma,
    beta alpha^m = alpha^{-m} beta and gamma beta = beta gamma, plus
    gamma^2 = 1 (k^2 = 1 mod n) or gamma^2 = beta (k^2 = -1 mod n).
    """
    ksq = (k * k) % n
    a, b, c = 0, 0, 0

    def push_alpha(m: int) -> None:
        nonlocal a
        step = (m * (k if c else 1)) % n
        a = (a + (-step if b else step)) % n

    def push_beta() -> None:
        nonlocal b
        b ^= 1

    def push_gamma() -> None:
        nonlocal b, c
        if not _gamma_valid(n, k):
            raise ValueError(f"gamma unavailable: k^2 must be +-1 (mod {n})")
        c += 1
        if c == 2:
            c = 0
            if ksq == (n - 1) % n and ksq != 1 % n:
                b ^= 1  # gamma^2 = beta

    for token in word:
        if token == "alpha":
            push_alpha(1)
        elif token == "alpha^-1":
            push_alpha(-1)
        elif token in ("beta", "beta^-1"):
            push_beta()
        elif token == "gamma":
            push_gamma()
        elif token == "gamma^-1":
            if ksq == (n - 1) % n and ksq != 1 % n:
                push_beta()  # gamma^-1 = beta gamma
            push_gamma()
        else:
            raise ValueError(f"unknown generator token {token!r}")
    return WordTriple(a, b, c)


def format_word(t: WordTriple | str, ascii_only: bool = False) -> str:
    """Render a word triple in the usual notation ("α⁶γ", ascii "a^6*g").

    The string "delta" renders the special Desargues symmetry.
    """
    if isinstance(t, str):
        if t != "delta":
            raise ValueError(f"unknown special word {t!r}")
        return "D" if ascii_only else "Δ"
    parts_ascii: list[str] = []
    parts_uni: list[str] = []
    if t.a:
        parts_ascii.append("a" if t.a == 1 else f"a^{t.a}")
        parts_uni.append("α" if t.a == 1 else "α" + str(t.a).translate(_SUPERSCRIPTS))
    if t.b:
        parts_ascii.append("b")
        parts_uni.append("β")
    if t.c:
        parts_ascii.append("g")
        parts_uni.append("γ")
    if not parts_ascii:
        return "1"
    return "*".join(parts_ascii) if ascii_only else "".join(parts_uni)


# ---------------------------------------------------------------------------
# Predicates.

def is_automorphism(g: Graph, p: Sequence[int]) -> bool:
    """True iff p is a vertex bijection mapping edges onto edges."""
    if len(p) != g.vertex_count:
        raise ValueError(
            f"permutation length {len(p)} != vertex count {g.vertex_count}"
        )
    if not is_permutation(p):
        return False
    edge_set = set(g.edges)
    for u, v in g.edges:
        pu, pv = p[u], p[v]
        if ((pu, pv) if pu < pv else (pv, pu)) not in edge_set:
            return False
    return True


@dataclass(frozen=True)
class InvolutionProfile:
    is_involution: bool
    fixed_vertices: int
    fixed_edges: int
    color_reversing: bool


def involution_profile(g: Graph, colors: Sequence[int], p: Perm) -> InvolutionProfile:
    """The four facts deciding Kronecker-involution status for automorphism p.

    fixed_edges counts edges {x,y} with p(x)=y and p(y)=x.
    """
    if not is_automorphism(g, p):
        raise ValueError("p is not an automorphism of g")
    n = g.vertex_count
    is_inv = all(p[p[x]] == x for x in range(n))
    fixed_v = sum(1 for x in range(n) if p[x] == x)
    fixed_e = sum(1 for u, v in g.edges if p[u] == v and p[v] == u)
    reversing = all(colors[p[x]] != colors[x] for x in range(n))
    return InvolutionProfile(is_inv, fixed_v, fixed_e, reversing)


def dihedral_group(n: int) -> list[Perm]:
    """The 2n rotations/reflections of GP(n,k) as permutations."""
    alpha = rotation(n)
    beta = reflection(n)
    out = []
    p = identity(2 * n)
    for _ in range(n):
        out.append(p)
        out.append(compose(p, beta))
        p = compose(alpha, p)
    return sorted(out)


def word_group(p: GpParams) -> list[Perm]:
    """All distinct alpha^a beta^b gamma^c permutations of GP(n,k)."""
    n, k = p.n, p.k
    perms = set(dihedral_group(n))
    if _gamma_valid(n, k):
        gamma = rim_swap(n, k)
        perms |= {compose(q, gamma) for q in list(perms)}
    return sorted(perms)
