"""Matroids presented by their circuit family.

Subsets of the ground set ``{0, ..., n-1}`` are Python ints used as bitmasks.
Elements are 0-indexed here; :func:`subset` and :func:`labels` convert to and
from the 1-indexed notation used in every file format and report.
"""

from dataclasses import dataclass, field
from itertools import combinations
import warnings

from . import budget
from .errors import (
    ComparabilityViolation,
    EliminationViolation,
    GroundSetTooLarge,
    IntersectionNotSingleton,
    TropError,
)


def subset(*elements):
    """Bitmask from 1-indexed labels: ``subset(1, 2, 4) == 0b1011``.

    A single string of digits is accepted as shorthand, ``subset("124")``.
    """
    if len(elements) == 1 and isinstance(elements[0], str):
        elements = [int(ch) for ch in elements[0]]
    elif len(elements) == 1 and not isinstance(elements[0], int):
        elements = list(elements[0])
    mask = 0
    for e in elements:
        if e < 1:
            raise ValueError(f"labels are 1-indexed, got {e}")
        mask |= 1 << (e - 1)
    return mask


def from_indices(indices):
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def indices(mask):
    """0-indexed elements of a bitmask, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def labels(mask):
    """1-indexed elements of a bitmask, ascending."""
    return [i + 1 for i in indices(mask)]


def fmt(mask):
    """Compact label string, digits run together when every label is < 10."""
    ls = labels(mask)
    if all(x < 10 for x in ls):
        return "".join(map(str, ls))
    return "{" + ",".join(map(str, ls)) + "}"


def popcount(mask):
    return bin(mask).count("1")


def lex_key(mask):
    """Order circuits by size, then by their sorted element tuple."""
    return (popcount(mask), indices(mask))


@dataclass(frozen=True)
class Matroid:
    n: int
    circuits: tuple = field(default=())

    @property
    def full(self):
        return (1 << self.n) - 1

    def __repr__(self):
        return f"Matroid(n={self.n}, circuits=[{', '.join(fmt(c) for c in self.circuits)}])"

    def to_json(self):
        return {"n": self.n, "circuits": [labels(c) for c in self.circuits]}


def validate_circuits(n, family, check_elimination=True, simple=False):
    """Build a :class:`Matroid`, checking the circuit axioms exhaustively.

    ``family`` is an iterable of bitmasks. Incomparability is always checked;
    elimination can be skipped for large families known to be valid.
    """
    if n < 0 or n > budget.limit("ground_set"):
        raise GroundSetTooLarge(f"ground set of size {n} exceeds {budget.limit('ground_set')}", n=n)
    full = (1 << n) - 1
    circuits = sorted(set(family), key=lex_key)
    for c in circuits:
        if c == 0:
            raise TropError("the empty set cannot be a circuit")
        if c & ~full:
            raise TropError(f"circuit {labels(c)} has elements outside [{n}]")
        if simple and popcount(c) < 3:
            raise TropError(f"circuit {fmt(c)} has fewer than 3 elements in a simple matroid")
    for c1, c2 in combinations(circuits, 2):
        if c1 & c2 == c1 or c1 & c2 == c2:
            raise ComparabilityViolation(
                f"circuits {fmt(c1)} and {fmt(c2)} are comparable", c1=labels(c1), c2=labels(c2)
            )
    if check_elimination:
        _check_elimination(circuits)
    return Matroid(n, tuple(circuits))


def _check_elimination(circuits):
    for c1, c2 in combinations(circuits, 2):
        common = c1 & c2
        union = c1 | c2
        for e in indices(common):
            rest = union & ~(1 << e)
            if not any(c & rest == c for c in circuits):
                raise EliminationViolation(
                    f"no circuit inside ({fmt(c1)} u {fmt(c2)}) - {e + 1}",
                    c1=labels(c1),
                    c2=labels(c2),
                    e=e + 1,
                )


def matroid_from_labels(n, family, **kwargs):
    """Convenience constructor taking 1-indexed circuit lists."""
    return validate_circuits(n, [subset(list(c)) for c in family], **kwargs)


def is_independent(M, S):
    return not any(c & S == c for c in M.circuits)


def rank(M, S):
    """Greedy: add elements of ``S`` in order while the set stays independent."""
    r = 0
    acc = 0
    for e in indices(S):
        trial = acc | (1 << e)
        if is_independent(M, trial):
            acc = trial
            r += 1
    return r


def closure(M, S):
    r = rank(M, S)
    out = S
    for e in range(M.n):
        bit = 1 << e
        if not S & bit and rank(M, S | bit) == r:
            out |= bit
    return out


def is_flat(M, S):
    """No circuit meets the complement of ``S`` in exactly one element."""
    return not any(popcount(c & ~S) == 1 for c in M.circuits)


def _guard_zero_one(n):
    cap = budget.limit("zero_one_n")
    if n > cap:
        raise GroundSetTooLarge(f"2^{n} enumeration exceeds the n <= {cap} guard", n=n)


def all_flats(M):
    """All flats, by exhaustive closure over the 2^n subsets."""
    _guard_zero_one(M.n)
    return {S for S in range(1 << M.n) if closure(M, S) == S}


def direct_sum(M1, M2):
    n = M1.n + M2.n
    if n > budget.limit("ground_set"):
        raise GroundSetTooLarge(f"direct sum has {n} elements", n=n)
    shifted = [c << M1.n for c in M2.circuits]
    return Matroid(n, tuple(sorted(M1.circuits + tuple(shifted), key=lex_key)))


def components(M):
    """Connected components as a sorted list of bitmasks (coloops are singletons)."""
    parent = list(range(M.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in M.circuits:
        els = indices(c)
        for e in els[1:]:
            a, b = find(els[0]), find(e)
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks = {}
    for e in range(M.n):
        blocks.setdefault(find(e), 0)
        blocks[find(e)] |= 1 << e
    return sorted(blocks.values(), key=lambda b: indices(b)[0])


def simplify(M):
    """Delete loops and collapse parallel classes.

    Returns ``(simple_matroid, element_map)`` where ``element_map[e]`` is the
    new 0-indexed element representing old element ``e``, or ``None`` for a loop.
    """
    loops = {indices(c)[0] for c in M.circuits if popcount(c) == 1}
    rep = {}
    for e in range(M.n):
        if e in loops:
            continue
        rep[e] = e
    # parallel pairs form an equivalence relation on non-loops
    for c in M.circuits:
        if popcount(c) == 2:
            a, b = indices(c)
            ra, rb = rep[a], rep[b]
            lo = min(ra, rb)
            for e in rep:
                if rep[e] in (ra, rb):
                    rep[e] = lo
    reps = sorted(set(rep.values()))
    new_index = {r: i for i, r in enumerate(reps)}
    element_map = [new_index[rep[e]] if e in rep else None for e in range(M.n)]
    kept = set()
    for c in M.circuits:
        if popcount(c) <= 2:
            continue
        els = indices(c)
        if any(rep[e] != e for e in els):
            # a circuit through a non-representative has an image through its representative
            continue
        kept.add(from_indices(new_index[e] for e in els))
    return Matroid(len(reps), tuple(sorted(kept, key=lex_key))), element_map


def paste(c1, c2):
    """Symmetric difference of two sets meeting in exactly one element."""
    common = c1 & c2
    if popcount(common) != 1:
        raise IntersectionNotSingleton(
            f"{fmt(c1)} and {fmt(c2)} share {popcount(common)} elements",
            c1=labels(c1),
            c2=labels(c2),
        )
    return c1 ^ c2


def warn_if_not_simple(M):
    loops = [c for c in M.circuits if popcount(c) == 1]
    if loops:
        warnings.warn(
            f"matroid has {len(loops)} loops; tropical-basis results for "
            "matroids with loops are an extension beyond the simple case",
            stacklevel=3,
        )
