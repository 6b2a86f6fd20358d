"""Named matroid families and their known minimal tropical bases."""

from itertools import combinations

from .errors import NotThreeEdgeConnected, TropError
from .graph import (
    bonds,
    complete_graph,
    cut_index,
    cycles,
    is_connected,
    is_k_edge_connected,
    induced_cycles,
)
from .matroid import Matroid, from_indices, lex_key, subset, validate_circuits


def uniform(d, n):
    if not 0 < d <= n:
        raise TropError(f"uniform matroid needs 0 < d <= n, got d={d}, n={n}")
    return Matroid(n, tuple(sorted((from_indices(c) for c in combinations(range(n), d + 1)), key=lex_key)))


def uniform_basis(d, n, i):
    """All circuits of U(d, n) through the fixed element ``i`` (0-indexed)."""
    if not 0 <= i < n:
        raise TropError(f"element {i + 1} outside [{n}]")
    return [C for C in uniform(d, n).circuits if C >> i & 1]


def _check_partition(blocks, n=None):
    blocks = [list(b) for b in blocks]
    flat = [e for b in blocks for e in b]
    n = len(flat) if n is None else n
    if any(not b for b in blocks) or sorted(flat) != list(range(n)):
        raise TropError("blocks must partition the ground set")
    return blocks, n


def partition_matroid(blocks):
    """Blocks are iterables of 0-indexed elements covering ``0..n-1``."""
    blocks, n = _check_partition(blocks)
    circ = [from_indices(p) for b in blocks for p in combinations(sorted(b), 2)]
    return Matroid(n, tuple(sorted(circ, key=lex_key)))


def partition_basis(blocks):
    """A path of consecutive pairs through each block."""
    blocks, _ = _check_partition(blocks)
    out = []
    for b in blocks:
        b = sorted(b)
        out.extend(from_indices(p) for p in zip(b, b[1:]))
    return sorted(out, key=lex_key)


def _simple_connected(G):
    if not is_connected(G):
        raise TropError("graph must be connected")


def graphic(G, check=True):
    """Cycle matroid on the edges of ``G``."""
    _simple_connected(G)
    cyc = cycles(G)
    if check:
        return validate_circuits(G.m, cyc)
    return Matroid(G.m, tuple(sorted(cyc, key=lex_key)))


def graphic_basis(G):
    return sorted(induced_cycles(G), key=lex_key)


def _three_edge_connected(G):
    _simple_connected(G)
    if not is_k_edge_connected(G, 3):
        raise NotThreeEdgeConnected("cographic matroids here need a 3-edge-connected graph")


def cographic(G, check=True):
    """Bond matroid on the edges of a 3-edge-connected ``G``."""
    _three_edge_connected(G)
    cuts = [b.edges for b in bonds(G)]
    if check:
        return validate_circuits(G.m, cuts)
    return Matroid(G.m, tuple(sorted(cuts, key=lex_key)))


def cographic_basis(G):
    """Bonds whose two sides are both bridgeless (index 0)."""
    _three_edge_connected(G)
    return sorted((b.edges for b in bonds(G) if cut_index(G, b) == 0), key=lex_key)


FANO_LINES = ("124", "137", "156", "235", "267", "346", "457")
FANO_QUADS = ("1236", "1467", "2456", "3567", "1257", "1345", "2347")


def fano():
    return validate_circuits(7, [subset(s) for s in FANO_LINES + FANO_QUADS])


def fano_lines():
    return sorted((subset(s) for s in FANO_LINES), key=lex_key)


# K5 edges in lexicographic order 12,13,14,15,23,24,25,34,35,45 -> elements 0..9
K5 = complete_graph(5)


def r10_four_cycles():
    return sorted((C for C in cycles(K5) if bin(C).count("1") == 4), key=lex_key)


def r10():
    quads = r10_four_cycles()
    full = (1 << 10) - 1
    return validate_circuits(10, quads + [full & ~C for C in quads])
