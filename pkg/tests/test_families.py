import pytest

from tropbasis import families as F
from tropbasis.basis import is_tropical_basis, minimal_basis_greedy
from tropbasis.errors import TropError
from tropbasis.graph import complete_graph, cycle_graph, path_graph
from tropbasis.matroid import labels, popcount, rank, subset


def test_uniform():
    assert F.uniform(2, 4).circuits == tuple(subset(s) for s in ("123", "124", "134", "234"))
    assert F.uniform(5, 5).circuits == ()
    assert len(F.uniform(2, 5).circuits) == 10
    with pytest.raises(TropError):
        F.uniform(0, 3)


def test_uniform_basis():
    assert F.uniform_basis(2, 4, 0) == [subset("123"), subset("124"), subset("134")]
    B = F.uniform_basis(2, 5, 0)
    M = F.uniform(2, 5)
    assert len(B) == 6 and is_tropical_basis(M, B)
    assert all(not is_tropical_basis(M, [c for c in B if c != x]) for x in B)
    assert F.uniform_basis(1, 2, 0) == [subset("12")]


@pytest.mark.parametrize("d,n", [(1, 3), (2, 4), (2, 6), (3, 6), (4, 7)])
def test_uniform_basis_is_basis(d, n):
    assert is_tropical_basis(F.uniform(d, n), F.uniform_basis(d, n, n - 1))


def test_partition():
    blocks = [[0, 1, 2], [3, 4]]
    M = F.partition_matroid(blocks)
    assert M.circuits == tuple(subset(s) for s in ("12", "13", "23", "45"))
    assert F.partition_matroid([[0], [1], [2]]).circuits == ()
    assert F.partition_matroid([[0, 1]]).circuits == (subset("12"),)
    assert F.partition_basis(blocks) == [subset("12"), subset("23"), subset("45")]
    assert is_tropical_basis(M, F.partition_basis(blocks))
    B = F.partition_basis([[0, 1, 2, 3]])
    assert B == [subset("12"), subset("23"), subset("34")]
    assert is_tropical_basis(F.partition_matroid([[0, 1, 2, 3]]), B)
    with pytest.raises(TropError):
        F.partition_matroid([[0, 2]])


def test_graphic_examples():
    M = F.graphic(complete_graph(4))
    assert M.n == 6 and len(M.circuits) == 7
    assert F.graphic(cycle_graph(3)).circuits == (0b111,)
    assert F.graphic(path_graph(4)).circuits == ()


def test_cographic_examples():
    M = F.cographic(complete_graph(4))
    assert M.n == 6 and len(M.circuits) == 7
    assert F.cographic(complete_graph(5)).n == 10
    # the known basis of K5 is its 5 vertex stars
    assert sorted(map(popcount, F.cographic_basis(complete_graph(5)))) == [4] * 5


def test_fano():
    M = F.fano()
    assert len(M.circuits) == 14
    assert rank(M, M.full) == 3
    assert subset("124") in M.circuits
    assert set(minimal_basis_greedy(M).basis) == set(F.fano_lines())


def test_r10():
    M = F.r10()
    quads = F.r10_four_cycles()
    assert len(M.circuits) == 30 and len(quads) == 15
    assert all(popcount(c) == 6 for c in M.circuits if c not in quads)
    # edge k of K5 joins the k-th pair in lex order 12,13,...,45
    assert F.K5.edges[0] == (0, 1) and F.K5.edges[9] == (3, 4)
    assert labels(quads[0]) == [1, 2, 6, 9] or len(labels(quads[0])) == 4
