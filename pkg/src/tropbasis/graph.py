"""Simple undirected graphs with numbered edges: cycles, bonds, bridges.

Vertices are ``0..V-1`` and edge ``k`` (0-indexed; id ``k+1`` in files) joins
``edges[k]``. Edge sets and vertex sets are bitmasks.
"""

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from . import budget
from .errors import GraphError, GroundSetTooLarge, NotABond
from .matroid import indices, popcount


@dataclass(frozen=True)
class Graph:
    V: int
    edges: tuple

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.V and 0 <= v < self.V):
                raise GraphError(f"edge ({u + 1},{v + 1}) has an endpoint outside 1..{self.V}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u + 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"parallel edge {key[0] + 1}-{key[1] + 1}")
            seen.add(key)

    @property
    def m(self):
        return len(self.edges)

    @classmethod
    def from_labels(cls, V, edges):
        """1-indexed endpoints, as in graph files."""
        return cls(V, tuple((u - 1, v - 1) for u, v in edges))

    def adjacency(self):
        adj = [[] for _ in range(self.V)]
        for k, (u, v) in enumerate(self.edges):
            adj[u].append((v, k))
            adj[v].append((u, k))
        return adj

    def edges_within(self, vmask):
        """Edge mask of the subgraph induced on vertex set ``vmask``."""
        out = 0
        for k, (u, v) in enumerate(self.edges):
            if vmask >> u & 1 and vmask >> v & 1:
                out |= 1 << k
        return out

    def cut_edges(self, vmask):
        """Edges with exactly one endpoint in ``vmask``."""
        out = 0
        for k, (u, v) in enumerate(self.edges):
            if (vmask >> u & 1) != (vmask >> v & 1):
                out |= 1 << k
        return out

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.V))
        for k, (u, v) in enumerate(self.edges):
            g.add_edge(u, v, id=k)
        return g


def complete_graph(V):
    return Graph(V, tuple(combinations(range(V), 2)))


def cycle_graph(V):
    return Graph(V, tuple((i, (i + 1) % V) for i in range(V)))


def path_graph(V):
    return Graph(V, tuple((i, i + 1) for i in range(V - 1)))


def prism_graph():
    """Triangular prism: triangles 123 and 456 joined by 14, 25, 36."""
    return Graph.from_labels(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (1, 4), (2, 5), (3, 6)])


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def is_connected(G, vmask=None):
    """Is the subgraph induced on ``vmask`` (default: all vertices) connected?"""
    if vmask is None:
        vmask = (1 << G.V) - 1
    if vmask == 0:
        return False
    adj = G.adjacency()
    start = indices(vmask)[0]
    seen = 1 << start
    stack = [start]
    while stack:
        u = stack.pop()
        for w, _ in adj[u]:
            if vmask >> w & 1 and not seen >> w & 1:
                seen |= 1 << w
                stack.append(w)
    return seen == vmask


def bridges(G, vmask=None):
    """Bridges of the subgraph induced on ``vmask``, as an edge mask.

    Iterative low-link DFS; a subgraph with no edges has no bridges.
    """
    if vmask is None:
        vmask = (1 << G.V) - 1
    adj = G.adjacency()
    disc = {}
    low = {}
    out = 0
    counter = 0
    for root in indices(vmask):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, via, it = stack[-1]
            advanced = False
            for w, k in it:
                if not vmask >> w & 1 or k == via:
                    continue
                if w in disc:
                    low[u] = min(low[u], disc[w])
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, k, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[u])
                    if low[u] > disc[parent]:
                        out |= 1 << via
    return out


def _guard_edges(G):
    cap = budget.limit("cycle_edges")
    if G.m > cap:
        raise GroundSetTooLarge(f"cycle enumeration guarded to m <= {cap}", m=G.m)


def cycle_vertices(G, C):
    vm = 0
    for k in indices(C):
        u, v = G.edges[k]
        vm |= (1 << u) | (1 << v)
    return vm


def cycles(G):
    """All cycles as edge masks.

    Each cycle is found from its least vertex ``s`` by extending simple paths
    through vertices larger than ``s``; both orientations yield the same mask.
    """
    _guard_edges(G)
    adj = G.adjacency()
    found = set()
    for s in range(G.V):
        stack = [(s, 1 << s, 0, -1)]
        while stack:
            u, vis, emask, last = stack.pop()
            for w, k in adj[u]:
                if k == last:
                    continue
                if w == s and popcount(emask) >= 2:
                    found.add(emask | (1 << k))
                elif w > s and not vis >> w & 1:
                    stack.append((w, vis | (1 << w), emask | (1 << k), k))
    return found


def has_chord(G, C):
    return popcount(G.edges_within(cycle_vertices(G, C))) > popcount(C)


def induced_cycles(G):
    return {C for C in cycles(G) if not has_chord(G, C)}


def chord_split(G, C):
    """Split a cycle with a chord into two cycles sharing only the chord.

    Returns ``(C1, C2, chord)`` with ``C1 ^ C2 == C`` and ``C1 & C2 == chord``,
    or ``None`` for an induced cycle.
    """
    vm = cycle_vertices(G, C)
    chords = G.edges_within(vm) & ~C
    if not chords:
        return None
    k = indices(chords)[0]
    a, b = G.edges[k]
    # walk the cycle from a; the two arcs to b plus the chord are the pieces
    adj = {}
    for e in indices(C):
        u, v = G.edges[e]
        adj.setdefault(u, []).append((v, e))
        adj.setdefault(v, []).append((u, e))
    arcs = []
    for first in adj[a]:
        arc = 0
        cur, e = first
        arc |= 1 << e
        while cur != b:
            nxt = [p for p in adj[cur] if p[1] != e][0]
            cur, e = nxt
            arc |= 1 << e
        arcs.append(arc)
    chord = 1 << k
    return arcs[0] | chord, arcs[1] | chord, chord


@dataclass(frozen=True)
class EdgeCut:
    edges: int
    side_a: int  # vertex mask, contains vertex 0
    side_b: int

    def to_json(self):
        return {
            "edges": [k + 1 for k in indices(self.edges)],
            "side_a": [v + 1 for v in indices(self.side_a)],
            "side_b": [v + 1 for v in indices(self.side_b)],
        }


def bonds(G):
    """All inclusion-minimal edge cuts of a connected graph.

    A cut is minimal exactly when both vertex sides induce connected subgraphs,
    so enumerate bipartitions with vertex 0 on side A.
    """
    cap = budget.limit("bond_vertices")
    if G.V > cap:
        raise GroundSetTooLarge(f"bond enumeration guarded to V <= {cap}", V=G.V)
    if not is_connected(G):
        raise GraphError("bonds need a connected graph")
    full = (1 << G.V) - 1
    out = []
    for rest in range(1 << (G.V - 1)):
        A = 1 | (rest << 1)
        B = full & ~A
        if B and is_connected(G, A) and is_connected(G, B):
            out.append(EdgeCut(G.cut_edges(A), A, B))
    return out


def bond_for(G, edge_mask):
    """The :class:`EdgeCut` whose edge set is ``edge_mask``; raises if not a bond."""
    sub = Graph(G.V, tuple(e for k, e in enumerate(G.edges) if not edge_mask >> k & 1))
    comps = nx.connected_components(sub.to_networkx())
    comps = [sum(1 << v for v in c) for c in comps]
    if len(comps) != 2:
        raise NotABond(f"removing the edges leaves {len(comps)} components")
    A, B = sorted(comps, key=lambda c: not c & 1)
    if G.cut_edges(A) != edge_mask:
        raise NotABond("edge set is not the full cut between the two sides")
    return EdgeCut(edge_mask, A, B)


def cut_index(G, cut):
    """Total number of bridges in the two sides of a bond."""
    if isinstance(cut, int):
        cut = bond_for(G, cut)
    elif not (is_connected(G, cut.side_a) and is_connected(G, cut.side_b)) or G.cut_edges(cut.side_a) != cut.edges:
        raise NotABond("sides are not connected or do not match the edge set")
    return popcount(bridges(G, cut.side_a)) + popcount(bridges(G, cut.side_b))


def split_bond(G, cut):
    """One step of the index induction: split a positive-index bond along a bridge.

    For a bridge ``e`` in side ``U`` separating it into ``P`` and ``Q``, return
    ``(C1, C2, e)`` where ``C1`` separates ``P`` from the rest and ``C2``
    separates ``Q`` from the rest. Then ``C1 & C2 == e`` and ``C1 ^ C2`` is the
    original cut. Returns ``None`` for an index-0 bond.
    """
    for U in (cut.side_a, cut.side_b):
        br = bridges(G, U)
        if not br:
            continue
        k = indices(br)[0]
        u, _ = G.edges[k]
        inner = G.edges_within(U) & ~(1 << k)
        P = _reach(G, u, U, inner)
        Q = U & ~P
        c1 = bond_for(G, G.cut_edges(P))
        c2 = bond_for(G, G.cut_edges(Q))
        return c1, c2, 1 << k
    return None


def _reach(G, start, vmask, emask):
    adj = G.adjacency()
    seen = 1 << start
    stack = [start]
    while stack:
        x = stack.pop()
        for w, k in adj[x]:
            if emask >> k & 1 and vmask >> w & 1 and not seen >> w & 1:
                seen |= 1 << w
                stack.append(w)
    return seen


def bond_decomposition(G, cut):
    """Recursively split a bond into index-0 bonds; returns the leaves."""
    step = split_bond(G, cut)
    if step is None:
        return [cut]
    c1, c2, _ = step
    return bond_decomposition(G, c1) + bond_decomposition(G, c2)


def is_k_edge_connected(G, k):
    """True iff removing any ``k-1`` edges leaves ``G`` connected."""
    if G.V <= 1:
        return True
    if k <= 0:
        return True
    g = G.to_networkx()
    if not nx.is_connected(g):
        return False
    return nx.edge_connectivity(g) >= k


def read_graph(text):
    """Parse ``"V m"`` then ``m`` lines ``"u v"`` (1-indexed)."""
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    V, m = map(int, lines[0].split())
    edges = [tuple(map(int, ln.split())) for ln in lines[1 : 1 + m]]
    if len(edges) != m:
        raise GraphError(f"expected {m} edge lines, found {len(edges)}")
    return Graph.from_labels(V, edges)


def write_graph(G):
    rows = [f"{G.V} {G.m}"] + [f"{u + 1} {v + 1}" for u, v in G.edges]
    return "\n".join(rows) + "\n"


def to_dot(G, highlight=0):
    """DOT export; edges in ``highlight`` are drawn bold red."""
    rows = ["graph G {"]
    for k, (u, v) in enumerate(G.edges):
        attrs = f'label="{k + 1}"'
        if highlight >> k & 1:
            attrs += ",style=bold,color=red"
        rows.append(f"  {u + 1} -- {v + 1} [{attrs}];")
    rows.append("}")
    return "\n".join(rows) + "\n"
