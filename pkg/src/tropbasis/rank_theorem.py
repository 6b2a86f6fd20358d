"""Harness for the tropical-rank necessary condition on tropical bases.

Setting: ``L`` is a linear subspace of ``K^n`` of dimension ``n - k`` whose
Plücker coordinates are all nonzero, and ``M`` is a matrix whose rows lie in
the orthogonal complement of ``L``. If the rows of ``M`` are a tropical basis
then every ``k`` columns of ``deg(M)`` have tropical rank ``k``. The converse
is open; :func:`converse_experiment` only gathers evidence.
"""

from dataclasses import dataclass
from itertools import product
import random

from .errors import PluckerCoordinateZero
from .exact import (
    circuits_of_rowspace,
    deg_matrix,
    kernel,
    plucker_vector,
    random_generic_subspace,
    rowspace_basis,
    shape,
)
from .linspace import TropPlucker, in_linear_space, in_prevariety, prevariety_vs_space
from .tropical import INF, column_rank_condition, fmt_value, tv


def circuit_matrix(L):
    """Rows = the minimal-support vectors of the orthogonal complement of rowspace(L)."""
    return circuits_of_rowspace(kernel(L), normalized=False)


def random_instance(rng, n, k, monomials=False):
    """A generic ``(n-k) x n`` matrix ``L`` and its full circuit matrix ``M``."""
    L = random_generic_subspace(rng, n - k, n, monomials)
    return L, circuit_matrix(L)


def prevariety_point_on_columns(D, cols, grid=(0, 1, 2, INF)):
    """A point of the prevariety of the rows of ``D`` supported inside ``cols``.

    Coordinates outside ``cols`` are ``INF``; the search runs over ``grid`` on
    ``cols`` (normalised so the least finite value is 0). Returns ``None`` when
    the grid holds no such point.
    """
    n = len(D[0])
    grid = tuple(tv(g) for g in grid)
    for ys in product(grid, repeat=len(cols)):
        finite = [y for y in ys if y != INF]
        if not finite or min(finite) != 0:
            continue
        x = [INF] * n
        for c, y in zip(cols, ys):
            x[c] = y
        if in_prevariety(D, x):
            return x
    return None


@dataclass
class ContrapositiveCheck:
    rows: list
    columns: tuple
    point: list
    point_support: int
    in_space: bool

    @property
    def ok(self):
        return self.point is not None and not self.in_space

    def to_json(self):
        return {
            "rows": [r + 1 for r in self.rows],
            "columns": [c + 1 for c in self.columns],
            "point": None if self.point is None else [fmt_value(x) for x in self.point],
            "point_support": self.point_support,
            "in_space": self.in_space,
        }


def contrapositive_check(L, M, rows, k):
    """For a row subset violating the rank condition, exhibit the small-support point.

    Returns ``None`` if the chosen rows satisfy the condition.
    """
    D = deg_matrix([M[i] for i in rows])
    ok, cols = column_rank_condition(D, k)
    if ok:
        return None
    x = prevariety_point_on_columns(D, cols)
    p = TropPlucker.from_field(L)
    size = None if x is None else sum(1 for v in x if v != INF)
    inside = False if x is None else in_linear_space(p, x)
    return ContrapositiveCheck(list(rows), cols, x, size, inside)


def find_violating_rows(rng, M, k, tries=200):
    """Random row subsets of ``M`` (size ``k..m-1``) until one breaks the rank condition."""
    m = len(M)
    D = deg_matrix(M)
    for _ in range(tries):
        size = rng.randint(k, max(k, m - 1))
        rows = sorted(rng.sample(range(m), size))
        ok, _ = column_rank_condition([D[i] for i in rows], k)
        if not ok:
            return rows
    return None


def converse_experiment(M, L=None, seed=0, n_random=1000):
    """EXPERIMENTAL evidence for the converse of the rank condition.

    ``L`` defaults to the kernel of ``M``. Raises :class:`PluckerCoordinateZero`
    when some Plücker coordinate of ``L`` vanishes, since neither the theorem
    nor the conjecture applies then.
    """
    _, n = shape(M)
    if L is None:
        L = rowspace_basis(kernel(M))
    minors = plucker_vector(L)
    zero = [k for k, v in minors.items() if v.is_zero()]
    if zero:
        raise PluckerCoordinateZero(
            f"Plücker coordinate {[i + 1 for i in zero[0]]} of the space is zero",
            subsets=[[i + 1 for i in z] for z in zero],
        )
    d = len(L)
    k = n - d
    D = deg_matrix(M)
    condition, witness = column_rank_condition(D, k)
    p = TropPlucker.from_field(L)
    cmp = prevariety_vs_space(D, p, seed=seed, n_random=n_random)
    if condition and cmp.equal_on_samples:
        verdict = "consistent: condition holds and no sampled disagreement"
    elif condition:
        verdict = "candidate counterexample to the converse (heuristic comparison found a point)"
    elif not cmp.equal_on_samples:
        verdict = "consistent: condition fails and the rows are not a tropical basis"
    else:
        verdict = "comparison missed the guaranteed disagreement (sampling too coarse)"
    return {
        "k": k,
        "rank_condition": condition,
        "violating_columns": None if witness is None else [c + 1 for c in witness],
        "comparison": cmp.to_json(),
        "verdict": verdict,
        "experimental": True,
    }


def rank_condition_trials(trials=100, seed=0, n_range=(3, 6), monomials=False):
    """Run the randomized necessary-condition study; returns per-trial records."""
    rng = random.Random(seed)
    out = []
    for t in range(trials):
        n = rng.randint(*n_range)
        k = rng.randint(1, n - 1)
        L, M = random_instance(rng, n, k, monomials)
        ok, witness = column_rank_condition(deg_matrix(M), k)
        rec = {"trial": t, "n": n, "k": k, "rows": len(M), "condition": ok,
               "witness": None if witness is None else [c + 1 for c in witness]}
        rows = find_violating_rows(rng, M, k) if k < len(M) else None
        if rows is not None:
            chk = contrapositive_check(L, M, rows, k)
            rec["contrapositive"] = chk.to_json()
            rec["contrapositive_ok"] = chk.ok and chk.point_support <= k
        out.append(rec)
    return out
