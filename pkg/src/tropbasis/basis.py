"""0/1-point engine for tropical bases of matroids.

A 0/1 point is stored as the bitmask of its 1-coordinates (its support).
A circuit excludes a point when the minimum over the circuit's coordinates
is attained exactly once; the Bergman fan's 0/1 points are the points no
circuit excludes, i.e. the indicator vectors of flats.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from . import budget
from .errors import NotExcluded, NotSubfamily, SearchBudgetExceeded
from .matroid import (
    _guard_zero_one,
    fmt,
    indices,
    labels,
    lex_key,
    paste,
    popcount,
    warn_if_not_simple,
)


def excludes(C, x):
    """Does circuit ``C`` exclude the 0/1 point with support ``x``?"""
    zeros = popcount(C & ~x)
    return zeros == 1 or (zeros == 0 and popcount(C) == 1)


def excludes_real(C, x):
    """``x`` is a sequence of rationals indexed 0..n-1."""
    vals = [x[i] for i in indices(C)]
    m = min(vals)
    return vals.count(m) == 1


def zero_one_reduction(C, x):
    """Collapse a real point excluded by ``C`` to a 0/1 point excluded by ``C``.

    Coordinates strictly above the unique minimum over ``C`` become 1, the
    rest 0. Circuits on which ``x`` attains its minimum twice still do so.
    """
    if not excludes_real(C, x):
        raise NotExcluded(f"circuit {fmt(C)} does not exclude {list(map(str, x))}")
    m = min(x[i] for i in indices(C))
    v = 0
    for i, xi in enumerate(x):
        if xi > m:
            v |= 1 << i
    return v


# -- vectorised exclusion over all 2^n points ---------------------------------


def _points(n):
    _guard_zero_one(n)
    return np.arange(1 << n, dtype=np.uint64)


def exclusion_mask(C, points):
    """Boolean array: which of ``points`` does circuit ``C`` exclude."""
    zeros = np.bitwise_count(np.uint64(C) & ~points)
    if popcount(C) == 1:
        return zeros <= 1
    return zeros == 1


def excluded_by(circuits, n, points=None):
    """Boolean array over all 2^n points: excluded by some member of ``circuits``."""
    if points is None:
        points = _points(n)
    out = np.zeros(points.shape, dtype=bool)
    for C in circuits:
        out |= exclusion_mask(C, points)
    return out


def exclusion_counts(circuits, n, points=None, cap=None):
    if points is None:
        points = _points(n)
    counts = np.zeros(points.shape, dtype=np.int32)
    for C in circuits:
        counts += exclusion_mask(C, points)
    if cap is not None:
        np.minimum(counts, cap, out=counts)
    return counts


def variety_points_01(M, include_trivial=True):
    """Supports of the 0/1 points of the Bergman fan.

    With ``include_trivial=False`` the all-zeros and all-ones points (the
    same point of projective space, the fan's apex) are dropped.
    """
    pts = _points(M.n)
    bad = excluded_by(M.circuits, M.n, pts)
    out = {int(p) for p in pts[~bad]}
    if not include_trivial:
        out -= {0, M.full}
    return out


def _check_subfamily(M, B):
    known = set(M.circuits)
    extra = [c for c in B if c not in known]
    if extra:
        raise NotSubfamily(
            f"{len(extra)} sets are not circuits of the matroid, e.g. {fmt(extra[0])}",
            extra=[labels(c) for c in extra],
        )


def is_tropical_basis(M, B):
    """Every 0/1 non-flat must be excluded by some member of ``B``."""
    B = list(B)
    _check_subfamily(M, B)
    warn_if_not_simple(M)
    pts = _points(M.n)
    return bool(np.all(excluded_by(B, M.n, pts) >= excluded_by(M.circuits, M.n, pts)))


def uncovered_points(M, B):
    """Non-flat supports that no member of ``B`` excludes (empty iff ``B`` is a basis)."""
    pts = _points(M.n)
    miss = excluded_by(M.circuits, M.n, pts) & ~excluded_by(B, M.n, pts)
    return [int(p) for p in pts[miss]]


def _sole_excluders(circuits, n):
    """Map circuit -> least point excluded by it and by no other member of ``circuits``."""
    pts = _points(n)
    counts = np.zeros(pts.shape, dtype=np.int32)
    owner = np.full(pts.shape, -1, dtype=np.int64)
    for k, C in enumerate(circuits):
        mask = exclusion_mask(C, pts)
        counts += mask
        owner[mask] = k
    sole = counts == 1
    out = {}
    sole_pts = pts[sole]
    sole_owner = owner[sole]
    # pts is ascending, so the first hit per owner is the least point
    ks, first = np.unique(sole_owner, return_index=True)
    for k, i in zip(ks, first):
        out[circuits[int(k)]] = int(sole_pts[i])
    return out


def necessary_circuits(M):
    """Circuits lying in every tropical basis, each with its witness point.

    Returns a dict ``circuit -> support`` of a 0/1 point that the circuit
    excludes and no other circuit of ``M`` does.
    """
    warn_if_not_simple(M)
    wit = _sole_excluders(list(M.circuits), M.n)
    return dict(sorted(wit.items(), key=lambda kv: lex_key(kv[0])))


@dataclass
class BasisReport:
    basis: list
    certified_minimal: bool
    # member of ``basis`` -> point excluded by it and by no other member
    witnesses: dict = field(default_factory=dict)
    optimum_size: int = None
    nodes: int = 0

    def to_json(self):
        out = {
            "basis": [labels(c) for c in self.basis],
            "size": len(self.basis),
            "certified_minimal": self.certified_minimal,
            "witnesses": [
                {"circuit": labels(c), "point_support": labels(x)} for c, x in self.witnesses.items()
            ],
        }
        if self.optimum_size is not None:
            out["optimum_size"] = self.optimum_size
            out["nodes"] = self.nodes
        return out


def _report(M, family, **extra):
    family = sorted(family, key=lex_key)
    wit = _sole_excluders(family, M.n)
    wit = {c: wit[c] for c in family if c in wit}
    return BasisReport(family, len(wit) == len(family), wit, **extra)


def minimal_basis_greedy(M, order=None):
    """Inclusion-minimal tropical basis by one removal pass over ``order``.

    Counts only ever decrease, so a circuit kept once stays irremovable and
    one pass suffices.
    """
    warn_if_not_simple(M)
    order = list(M.circuits) if order is None else list(order)
    _check_subfamily(M, order)
    if set(order) != set(M.circuits):
        raise NotSubfamily("order must be a permutation of the circuits")
    pts = _points(M.n)
    masks = {C: exclusion_mask(C, pts) for C in order}
    counts = np.zeros(pts.shape, dtype=np.int32)
    for m in masks.values():
        counts += m
    kept = set(order)
    for C in order:
        if np.all(counts[masks[C]] >= 2):
            counts[masks[C]] -= 1
            kept.discard(C)
    return _report(M, kept)


def _coverage_rows(M):
    """Distinct minimal coverage patterns of the non-flat points.

    Row = bitmask over circuit indices that exclude a given point. A row that
    contains another row is implied by it and dropped.
    """
    pts = _points(M.n)
    rows = np.zeros(pts.shape, dtype=object) if len(M.circuits) > 63 else np.zeros(pts.shape, dtype=np.uint64)
    for k, C in enumerate(M.circuits):
        m = exclusion_mask(C, pts)
        if rows.dtype == object:
            rows[m] = rows[m] + (1 << k)
        else:
            rows[m] |= np.uint64(1 << k)
    uniq = sorted({int(r) for r in rows if int(r)}, key=popcount)
    minimal = []
    for r in uniq:
        if not any(s & r == s for s in minimal):
            minimal.append(r)
    return minimal


def minimum_basis_exact(M, node_budget=None):
    """Cardinality-minimum tropical basis by exact set cover (branch and bound).

    Branches on the uncovered point with the fewest excluding circuits, trying
    circuits in lexicographic order; the search is sequential and deterministic.
    """
    warn_if_not_simple(M)
    node_budget = node_budget or budget.limit("set_cover_nodes")
    circuits = list(M.circuits)
    rows = _coverage_rows(M)
    if not rows:
        return _report(M, [], optimum_size=0)
    best = _greedy_cover(rows, len(circuits))
    state = {"best": best, "nodes": 0}

    def lower_bound(uncovered):
        # each further circuit covers at most max_k |rows hit by k|
        hit = [0] * len(circuits)
        for r in uncovered:
            for k in _bits(r):
                hit[k] += 1
        top = max(hit)
        return -(-len(uncovered) // top) if top else float("inf")

    def search(chosen, uncovered):
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            raise SearchBudgetExceeded(f"set cover exceeded {node_budget} nodes", nodes=state["nodes"])
        if not uncovered:
            if len(chosen) < len(state["best"]):
                state["best"] = sorted(chosen)
            return
        if len(chosen) + lower_bound(uncovered) >= len(state["best"]):
            return
        pivot = min(uncovered, key=lambda r: (popcount(r), r))
        for k in _bits(pivot):
            bit = 1 << k
            search(chosen + [k], [r for r in uncovered if not r & bit])

    search([], rows)
    chosen = [circuits[k] for k in state["best"]]
    return _report(M, chosen, optimum_size=len(chosen), nodes=state["nodes"])


def _bits(mask):
    return indices(mask)


def _greedy_cover(rows, ncirc):
    uncovered = list(rows)
    chosen = []
    while uncovered:
        hit = [0] * ncirc
        for r in uncovered:
            for k in _bits(r):
                hit[k] += 1
        k = max(range(ncirc), key=lambda j: (hit[j], -j))
        chosen.append(k)
        uncovered = [r for r in uncovered if not r >> k & 1]
    return sorted(chosen)


def has_unique_minimal_basis(M):
    nec = necessary_circuits(M)
    return is_tropical_basis(M, nec)


def pasting_closure(S, M):
    """Close ``S`` under pasting, keeping only results that are circuits of ``M``."""
    known = set(M.circuits)
    current = set(S)
    frontier = list(current)
    while frontier:
        new = []
        pool = list(current)
        for a in frontier:
            for b in pool:
                if popcount(a & b) != 1:
                    continue
                c = paste(a, b)
                if c in known and c not in current:
                    current.add(c)
                    new.append(c)
            pool.extend(x for x in new if x not in pool)
        frontier = new
    return current


def pasting_generates(S, M):
    """True when every circuit of ``M`` is reachable from ``S`` by pasting.

    A true answer certifies ``S`` is a tropical basis.
    """
    S = list(S)
    _check_subfamily(M, S)
    return pasting_closure(S, M) == set(M.circuits)


def uniform_lower_bound(d, n):
    return Fraction(comb(n, d), d + 1)
