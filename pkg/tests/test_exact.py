from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from tropbasis.errors import DimensionMismatch, TooManyMinors
from tropbasis.exact import (
    circuits_of_rowspace,
    cocircuits_of_subspace,
    deg_matrix,
    det,
    fmat,
    kernel,
    kernel_and_rowspace,
    plucker_vector,
    rank,
    read_field_matrix,
    support,
)
from tropbasis.matroid import indices, subset
from tropbasis.puiseux import Puiseux, ZERO
from tropbasis.tropical import INF

EX4 = fmat([[1, 0, 1, 1], [0, 1, 1, 1], [1, -1, 0, 0]])
t = Puiseux.monomial(1, 1)

small = st.integers(-3, 3)


def rational_matrix(m, n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)


shapes = st.tuples(st.integers(1, 4), st.integers(1, 5))
matrices = shapes.flatmap(lambda s: rational_matrix(*s))


def sym(A):
    return sympy.Matrix([[sympy.Rational(x) for x in row] for row in A])


def to_q(v):
    return [x.constant_value() for x in v]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


@given(st.integers(1, 4).flatmap(lambda r: rational_matrix(r, r)))
def test_det_matches_sympy(A):
    assert det(fmat(A)).constant_value() == Fraction(str(sym(A).det()))


@given(matrices)
def test_rank_and_kernel_match_sympy(A):
    F = fmat(A)
    r = rank(F)
    assert r == sym(A).rank()
    K = kernel(F)
    assert len(K) == len(A[0]) - r
    for v in K:
        assert all(dot(row, to_q(v)) == 0 for row in A)


def test_kernel_and_rowspace_examples():
    K, B, r = kernel_and_rowspace(EX4)
    assert r == 2 and len(K) == 2
    I = fmat([[1, 0], [0, 1]])
    assert kernel_and_rowspace(I)[2] == 2 and kernel(I) == []
    assert rank(fmat([[0, 0], [0, 0]])) == 0


def test_series_kernel_is_exact():
    one = Puiseux.const(1)
    A = [[one, ZERO, t], [ZERO, one, 1 + t]]
    for v in kernel(A):
        for row in A:
            s = ZERO
            for a, b in zip(row, v):
                s = s + a * b
            assert s == ZERO


def test_plucker_examples():
    P = plucker_vector(fmat([[1, 0, 1], [0, 1, 1]]))
    assert [P[k].constant_value() for k in sorted(P)] == [1, 1, -1]
    P = plucker_vector([[Puiseux.const(1), ZERO, t], [ZERO, Puiseux.const(1), Puiseux.const(1)]])
    assert [str(P[k]) for k in sorted(P)] == ["1", "1", "-t"]
    assert [P[k].deg() for k in sorted(P)] == [0, 0, 1]
    P = plucker_vector(fmat([[1, 2, 3], [2, 4, 6]]))
    assert all(m.deg() == INF for m in P.values())
    with pytest.raises(DimensionMismatch):
        plucker_vector(fmat([[1], [2]]))


def test_plucker_budget(monkeypatch):
    monkeypatch.setenv("TROPMAT_BUDGET", "minors=3")
    with pytest.raises(TooManyMinors):
        plucker_vector(fmat([[1, 0, 1, 1], [0, 1, 1, 2]]))


@given(st.integers(1, 3).flatmap(lambda d: rational_matrix(d, 4)), st.integers(-3, 3).filter(bool), st.data())
def test_plucker_row_operation_scales_uniformly(A, c, data):
    i = data.draw(st.integers(0, len(A) - 1))
    j = data.draw(st.integers(0, len(A) - 1))
    B = [list(r) for r in A]
    if i != j:
        B[i] = [a + c * b for a, b in zip(B[i], B[j])]
    else:
        B[i] = [c * a for a in B[i]]
    P, Q = plucker_vector(fmat(A)), plucker_vector(fmat(B))
    scale = 1 if i != j else c
    assert all(Q[k].constant_value() == scale * P[k].constant_value() for k in P)


def test_circuit_examples():
    sup = {support(v) for v in circuits_of_rowspace(EX4)}
    assert sup == {subset("134"), subset("234"), subset("12")}
    got = circuits_of_rowspace(fmat([[1, 0, 1], [0, 1, 1]]))
    assert [to_q(v) for v in got] == [[0, 1, 1], [1, 0, 1], [1, -1, 0]]
    one = circuits_of_rowspace(fmat([[1, 1]]))
    assert [to_q(v) for v in one] == [[1, 1]]


def test_cocircuit_examples():
    sup = {support(v) for v in cocircuits_of_subspace(fmat([[1, 0], [0, 1], [1, 1]]))}
    assert sup == {subset("13"), subset("23"), subset("12")}
    I3 = fmat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert {support(v) for v in cocircuits_of_subspace(I3)} == {1, 2, 4}
    assert [to_q(v) for v in cocircuits_of_subspace(fmat([[2], [0], [4]]))] == [[1, 0, 2]]


def _supports_oracle(A):
    """Complements of the rank-(r-1) flats of the column matroid of ``A`` (sympy ranks)."""
    n = len(A[0])
    M = sym(A)
    r = M.rank()

    def rk(cols):
        return M[:, list(cols)].rank() if cols else 0

    out = set()
    for T in range(1 << n):
        cols = indices(T)
        if rk(cols) != r - 1:
            continue
        if all(rk(cols + [e]) == r for e in range(n) if not T >> e & 1):
            out.add(((1 << n) - 1) & ~T)
    return out


@given(st.integers(1, 3).flatmap(lambda d: rational_matrix(d, 5)))
def test_circuit_supports_match_oracle(A):
    vecs = circuits_of_rowspace(fmat(A))
    assert {support(v) for v in vecs} == _supports_oracle(A)
    B = sym(A)
    for v in vecs:
        # each vector lies in the row space
        assert sym(A + [to_q(v)]).rank() == B.rank()


@given(st.integers(1, 3).flatmap(lambda d: rational_matrix(d, 5)))
def test_cocircuits_agree_with_rowspace_circuits(A):
    At = [list(c) for c in zip(*A)]
    assert {support(v) for v in cocircuits_of_subspace(fmat(At))} == {
        support(v) for v in circuits_of_rowspace(fmat(A))
    }


def test_deg_and_read():
    A = read_field_matrix("1, t^(1/2) + t\n0, 3*t^2\n")
    assert deg_matrix(A) == [[0, Fraction(1, 2)], [INF, 2]]
