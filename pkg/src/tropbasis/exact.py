"""Exact linear algebra over truncated Puiseux series (rationals included).

Matrices are lists of row lists of :class:`Puiseux`. Elimination pivots on
the entry of least degree, so truncated series keep as much certified
precision as possible; a pivot decision that the truncation cannot settle
raises :class:`PrecisionExhausted`.
"""

from fractions import Fraction
from itertools import combinations
from math import comb
import random

from . import budget
from .errors import DimensionMismatch, GroundSetTooLarge, TooManyMinors
from .puiseux import Puiseux, ZERO, parse
from .tropical import INF


def fmat(rows):
    """Coerce nested lists of numbers/strings/series into a field matrix."""
    return [[Puiseux.coerce(x) for x in row] for row in rows]


def fvec(xs):
    return [Puiseux.coerce(x) for x in xs]


def shape(A):
    if not A:
        return 0, 0
    w = len(A[0])
    if any(len(r) != w for r in A):
        raise DimensionMismatch("ragged matrix")
    return len(A), w


def transpose(A):
    return [list(c) for c in zip(*A)]


def deg_vector(v):
    return [x.deg() for x in v]


def deg_matrix(A):
    return [deg_vector(r) for r in A]


def support(v):
    mask = 0
    for i, x in enumerate(v):
        if not x.is_zero():
            mask |= 1 << i
    return mask


def rref(A):
    """Gauss-Jordan elimination with least-degree pivoting.

    Returns ``(R, pivots)``: ``R`` holds the nonzero reduced rows, each with a
    1 in its pivot column and zeros in every other pivot column; ``pivots``
    lists those columns in row order.
    """
    rows = [list(r) for r in A]
    m, n = shape(rows)
    done_rows, pivots = [], []
    free_rows = list(range(m))
    while True:
        best = None
        for i in free_rows:
            for j in range(n):
                if j in pivots or rows[i][j].is_zero():
                    continue
                key = (rows[i][j].deg(), i, j)
                if best is None or key < best:
                    best = key
        if best is None:
            break
        _, i, j = best
        inv = rows[i][j].inv()
        rows[i] = [x * inv for x in rows[i]]
        rows[i][j] = Puiseux.const(1)
        for k in range(m):
            if k != i and not rows[k][j].is_zero():
                f = rows[k][j]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[i])]
                rows[k][j] = ZERO
        free_rows.remove(i)
        done_rows.append(i)
        pivots.append(j)
    return [rows[i] for i in done_rows], pivots


def _is_constant(A):
    return all(x.is_constant() for row in A for x in row)


def det(A):
    """Division-free determinant (Laplace expansion memoised over column subsets).

    Exact for Puiseux polynomials, so minors never lose precision.
    """
    n, w = shape(A)
    if n != w:
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return Puiseux.const(1)
    D = {0: Puiseux.const(1)}
    for S in range(1, 1 << n):
        k = bin(S).count("1") - 1  # expand along row k
        acc = ZERO
        pos = 0
        for j in range(n):
            if not S >> j & 1:
                continue
            a = A[k][j]
            if a.terms or not a.exact:
                term = a * D[S & ~(1 << j)]
                acc = acc + term if (k + pos) % 2 == 0 else acc - term
            pos += 1
        D[S] = acc
    return D[(1 << n) - 1]


def _minor(A, rows, cols):
    return det([[A[i][j] for j in cols] for i in rows])


def basis_indices(A):
    """Rows ``S`` and columns ``P`` with ``A[S, P]`` nonsingular and ``|S|`` = rank."""
    m, n = shape(A)
    S, P = [], []
    for i in range(m):
        for j in range(n):
            if j in P:
                continue
            if not _minor(A, S + [i], P + [j]).is_zero():
                S.append(i)
                P.append(j)
                break
    return S, P


def rank(A):
    if _is_constant(A):
        return len(rref(A)[1])
    return len(basis_indices(A)[0])


def kernel(A):
    """Basis of ``{x : A x = 0}`` as a list of vectors.

    Rational input goes through exact Gauss-Jordan. Otherwise Cramer's rule on
    a nonsingular block ``A[S, P]`` gives, for each free column ``f``, the
    polynomial vector ``x_f = det A[S,P]``, ``x_p = -det(A[S,P] with column p
    replaced by column f)``; no division, so no truncation.
    """
    _, n = shape(A)
    if _is_constant(A):
        R, piv = rref(A)
        out = []
        for f in range(n):
            if f in piv:
                continue
            v = [ZERO] * n
            v[f] = Puiseux.const(1)
            for row, p in zip(R, piv):
                v[p] = -row[f]
            out.append(v)
        return out
    S, P = basis_indices(A)
    base = _minor(A, S, P)
    out = []
    for f in range(n):
        if f in P:
            continue
        v = [ZERO] * n
        v[f] = base
        for idx, p in enumerate(P):
            cols = P[:idx] + [f] + P[idx + 1 :]
            v[p] = -_minor(A, S, cols)
        out.append(v)
    return out


def rowspace_basis(A):
    if _is_constant(A):
        return rref(A)[0]
    S, _ = basis_indices(A)
    return [list(A[i]) for i in S]


def kernel_and_rowspace(A):
    B = rowspace_basis(A)
    return kernel(A), B, len(B)


def orthogonal_complement(A):
    """Basis of the vectors orthogonal to every column of ``A`` (``A`` is n x d)."""
    return kernel(transpose(A))


def plucker_vector(A):
    """All maximal minors of the ``d x n`` matrix ``A``, keyed by column tuples in lex order."""
    d, n = shape(A)
    if d > n:
        raise DimensionMismatch(f"need d <= n, got {d}x{n}")
    if comb(n, d) > budget.limit("minors"):
        raise TooManyMinors(f"C({n},{d}) minors exceed the budget")
    return {cols: det([[row[j] for j in cols] for row in A]) for cols in combinations(range(n), d)}


def normalize(v):
    """Scale so the first nonzero coordinate is 1."""
    for x in v:
        if not x.is_zero():
            inv = x.inv()
            return [y * inv for y in v]
    return v


def _guard_support(n):
    cap = budget.limit("support_n")
    if n > cap:
        raise GroundSetTooLarge(f"support enumeration guarded to n <= {cap}", n=n)


def circuits_of_rowspace(R, normalized=True):
    """Minimal-support nonzero vectors of the row space of ``R``, one per support.

    For each set ``T`` of ``r-1`` columns, ``w_j = det[B_T | B_j]`` is the
    row-space vector vanishing on ``T``; it is nonzero exactly when ``T`` is
    independent, and then its support is minimal. Results keep the lex order
    of the first ``T`` producing each support. With ``normalized=False`` the
    raw (division-free, hence exact) vectors are returned.
    """
    _, n = shape(R)
    _guard_support(n)
    B = rowspace_basis(R)
    r = len(B)
    if r == 0:
        return []
    cols = transpose(B)
    seen = {}
    for T in combinations(range(n), r - 1):
        head = [cols[j] for j in T]
        w = [ZERO if j in T else det(transpose(head + [cols[j]])) for j in range(n)]
        s = support(w)
        if s and s not in seen:
            seen[s] = w
    out = list(seen.values())
    return [normalize(w) for w in out] if normalized else out


def cocircuits_of_subspace(A, normalized=True):
    """Minimal-support vectors of the column space of the ``n x d`` matrix ``A``."""
    return circuits_of_rowspace(transpose(A), normalized)


def read_field_matrix(text):
    rows = []
    for ln in text.splitlines():
        ln = ln.split("#")[0].strip()
        if not ln:
            continue
        toks = ln.split(",") if "," in ln else ln.split()
        rows.append([parse(tok) for tok in toks])
    shape(rows)
    return rows


def matrix_to_json(A):
    return [[str(x) for x in row] for row in A]


def random_entry(rng, monomials=False):
    c = Fraction(rng.choice([k for k in range(-9, 10) if k]), rng.choice([1, 2, 3]))
    e = rng.randint(0, 3) if monomials else 0
    return Puiseux.monomial(c, e)


def random_matrix(rng, rows, cols, monomials=False):
    return [[random_entry(rng, monomials) for _ in range(cols)] for _ in range(rows)]


def random_generic_subspace(rng, d, n, monomials=False, tries=1000):
    """A ``d x n`` matrix whose row space has every Plücker coordinate nonzero.

    Draws are rejected and resampled until every maximal minor is nonzero.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    for _ in range(tries):
        A = random_matrix(rng, d, n, monomials)
        if all(not m.is_zero() for m in plucker_vector(A).values()):
            return A
    raise RuntimeError("could not draw a generic subspace")


def is_finite_deg(x):
    return x.deg() != INF
