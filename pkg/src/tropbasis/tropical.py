"""Min-plus arithmetic with exact rational finite values.

A tropical value is a :class:`fractions.Fraction` or ``INF`` (``math.inf``).
Matrices are lists of row lists. Use :func:`tv` to coerce input so floats
never leak into tie comparisons.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
import math

from . import budget
from .errors import DimensionMismatch, NotSquare, SizeBudgetExceeded, TropError

INF = math.inf


def tv(x):
    """Coerce to a tropical value: Fraction, or INF for ``inf``/``None``/``"inf"``."""
    if x is None or x == INF:
        return INF
    if isinstance(x, str):
        s = x.strip().lower()
        if s in ("inf", "oo", "infinity", "∞"):
            return INF
        return Fraction(s)
    if isinstance(x, float):
        raise TypeError(f"float {x!r} is not an exact tropical value")
    return Fraction(x)


def tmat(rows):
    return [[tv(x) for x in row] for row in rows]


def fmt_value(x):
    return "inf" if x == INF else str(x)


def trop_add(*xs):
    return min(xs)


def trop_mul(*xs):
    return INF if INF in xs else sum(xs, Fraction(0))


def _shape(A):
    if not A or not A[0]:
        raise DimensionMismatch("matrices must be nonempty")
    w = len(A[0])
    if any(len(r) != w for r in A):
        raise DimensionMismatch("ragged matrix")
    return len(A), w


def trop_mat_mul(A, B):
    """``C[i][j] = min_k A[i][k] + B[k][j]``; ``B`` may be a vector."""
    vector = B and not isinstance(B[0], (list, tuple))
    if vector:
        B = [[b] for b in B]
    m, k = _shape(A)
    k2, n = _shape(B)
    if k != k2:
        raise DimensionMismatch(f"inner dimensions {k} and {k2} differ")
    C = [[min(trop_mul(A[i][t], B[t][j]) for t in range(k)) for j in range(n)] for i in range(m)]
    return [row[0] for row in C] if vector else C


def transpose(A):
    return [list(col) for col in zip(*A)]


def submatrix(A, rows, cols):
    return [[A[i][j] for j in cols] for i in rows]


@dataclass(frozen=True)
class TropDetResult:
    value: object
    attain_count: int  # permutations attaining the minimum, saturated at 2

    @property
    def singular(self):
        return self.value == INF or self.attain_count >= 2

    def to_json(self):
        return {"value": fmt_value(self.value), "attain_count": self.attain_count, "singular": self.singular}


def trop_det(A):
    """Tropical determinant and how often its minimum is attained.

    Exact over all ``r!`` permutations, organised as a DP over column subsets:
    ``best[S]`` holds the minimum over assignments of the first ``|S|`` rows to
    the columns ``S`` together with the number of such assignments (capped at 2).
    """
    r, c = _shape(A)
    if r != c:
        raise NotSquare(f"{r}x{c} matrix is not square")
    cap = budget.limit("det_size")
    if r > cap:
        raise SizeBudgetExceeded(f"tropical determinant guarded to r <= {cap}", r=r)
    best = {0: (Fraction(0), 1)}
    for S in range(1, 1 << r):
        i = bin(S).count("1") - 1
        val, cnt = INF, 0
        for j in range(r):
            if not S >> j & 1:
                continue
            pv, pc = best[S & ~(1 << j)]
            cand = trop_mul(pv, A[i][j])
            if cand < val:
                val, cnt = cand, pc
            elif cand == val and cand != INF:
                cnt = min(2, cnt + pc)
        best[S] = (val, cnt if val != INF else 0)
    val, cnt = best[(1 << r) - 1]
    return TropDetResult(val, cnt)


def trop_det_bruteforce(A):
    """Reference: enumerate permutations directly."""
    from itertools import permutations

    r = len(A)
    vals = [trop_mul(*(A[i][p[i]] for i in range(r))) for p in permutations(range(r))]
    m = min(vals)
    return TropDetResult(m, 0 if m == INF else min(2, vals.count(m)))


def is_nonsingular(A):
    return not trop_det(A).singular


def trop_rank(A):
    """Largest ``r`` with a tropically nonsingular ``r x r`` submatrix (0 if none)."""
    m, n = _shape(A)
    work = 0
    cap = budget.limit("rank_submatrices")
    for r in range(min(m, n), 0, -1):
        for rows in combinations(range(m), r):
            for cols in combinations(range(n), r):
                work += 1
                if work > cap:
                    raise SizeBudgetExceeded(f"trop_rank examined more than {cap} submatrices")
                if is_nonsingular(submatrix(A, rows, cols)):
                    return r
    return 0


def column_rank_condition(D, k):
    """Do all ``k``-column submatrices of ``D`` have tropical rank ``k``?

    Returns ``(ok, witness)`` where ``witness`` is the lexicographically first
    violating tuple of 0-indexed columns, or ``None``.
    """
    m, n = _shape(D)
    if k > min(m, n) or k < 1:
        raise TropError(f"k={k} must be between 1 and min(rows, cols)={min(m, n)}")
    rows = range(m)
    for cols in combinations(range(n), k):
        sub = submatrix(D, rows, cols)
        if not any(is_nonsingular(submatrix(sub, rr, range(k))) for rr in combinations(rows, k)):
            return False, cols
    return True, None


def read_trop_matrix(text):
    rows = []
    for ln in text.splitlines():
        ln = ln.split("#")[0].strip()
        if ln:
            rows.append([tv(tok) for tok in ln.replace(",", " ").split()])
    _shape(rows)
    return rows


def matrix_to_json(A):
    return [[fmt_value(x) for x in row] for row in A]
