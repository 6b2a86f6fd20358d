"""Randomized lemma checks shared by the acceptance suite and the scripts.

Each function returns the list of failing trials (empty means success).
"""

from fractions import Fraction
from itertools import combinations
import random

from . import families as F
from .basis import excludes, excludes_real, is_tropical_basis, zero_one_reduction
from .graph import complete_graph, prism_graph
from .matroid import direct_sum, indices, paste, popcount


def lemma_corpus():
    return [
        F.fano(),
        F.r10(),
        F.uniform(2, 5),
        F.uniform(3, 6),
        F.graphic(complete_graph(4)),
        F.graphic(prism_graph()),
        F.cographic(complete_graph(4)),
        F.cographic(prism_graph()),
    ]


def _twice(x, C):
    vals = [x[i] for i in indices(C)]
    return vals.count(min(vals)) >= 2


def pasting_trials(trials=1000, seed=0):
    """Two circuits meeting in one element, both attaining their minimum twice
    on ``x``, paste to a set that also attains its minimum twice."""
    rng = random.Random(seed)
    corpus, pairs = [], []
    for M in lemma_corpus():
        P = [(a, b) for a, b in combinations(M.circuits, 2) if popcount(a & b) == 1]
        if P:  # e.g. no two circuits of U(3,6) meet in a single element
            corpus.append(M)
            pairs.append(P)
    failures, tested = [], 0
    for t in range(trials):
        k = rng.randrange(len(corpus))
        M, P = corpus[k], pairs[k]
        a, b = rng.choice(P)
        # resample until the hypothesis holds; a small value range makes ties common
        for _ in range(1000):
            x = [Fraction(rng.randint(0, 3), rng.choice((1, 2))) for _ in range(M.n)]
            if _twice(x, a) and _twice(x, b):
                break
        else:
            continue
        tested += 1
        if not _twice(x, paste(a, b)):
            failures.append({"trial": t, "a": a, "b": b, "x": x})
    return failures, tested


def zero_one_trials(trials=1000, seed=0):
    rng = random.Random(seed)
    corpus = lemma_corpus()
    failures, tested = [], 0
    for t in range(trials):
        M = rng.choice(corpus)
        excl = []
        while not excl:
            x = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(M.n)]
            excl = [C for C in M.circuits if excludes_real(C, x)]
        tested += 1
        C = rng.choice(excl)
        v = zero_one_reduction(C, x)
        bad = not excludes(C, v) or any(excludes(D, v) for D in M.circuits if _twice(x, D))
        if bad:
            failures.append({"trial": t, "C": C, "x": x, "v": v})
    return failures, tested


def _small_matroids():
    return [F.uniform(1, 2), F.uniform(1, 3), F.uniform(2, 3), F.uniform(2, 4), F.uniform(1, 4),
            F.uniform(3, 5), F.partition_matroid([[0, 1, 2], [3]])]


def direct_sum_trials(trials=50, seed=0, families_per_sum=20):
    """``B`` is a basis of ``M1 + M2`` iff its two halves are bases of the summands."""
    rng = random.Random(seed)
    pool = _small_matroids()
    failures = []
    for t in range(trials):
        M1, M2 = rng.choice(pool), rng.choice(pool)
        S = direct_sum(M1, M2)
        low_mask = (1 << M1.n) - 1
        for _ in range(families_per_sum):
            B = [C for C in S.circuits if rng.random() < 0.7]
            lo = [C for C in B if C & low_mask]
            hi = [C >> M1.n for C in B if not C & low_mask]
            want = is_tropical_basis(M1, lo) and is_tropical_basis(M2, hi)
            if is_tropical_basis(S, B) != want:
                failures.append({"trial": t, "B": B})
    return failures
