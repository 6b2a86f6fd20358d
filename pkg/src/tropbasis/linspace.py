"""Tropical linear spaces: Plücker vectors, their circuits, membership, parametrization.

Points and linear forms are lists of tropical values (Fraction or ``INF``).
A form "contains" a point when ``min_i (c_i + x_i)`` is attained at least
twice; an infinite minimum counts as contained.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
import random

from .errors import NotInSpace, TropError
from .exact import (
    cocircuits_of_subspace,
    circuits_of_rowspace,
    deg_matrix,
    deg_vector,
    orthogonal_complement,
    plucker_vector,
    random_generic_subspace,
    rank,
    rowspace_basis,
    shape,
    support,
    transpose,
)
from .matroid import indices, labels
from .puiseux import Puiseux, ZERO
from .tropical import INF, fmt_value, trop_mat_mul, tv


# -- Plücker vectors ----------------------------------------------------------


@dataclass
class TropPlucker:
    d: int
    n: int
    values: dict  # 0-indexed sorted d-tuple -> tropical value

    def __post_init__(self):
        keys = list(combinations(range(self.n), self.d))
        missing = [k for k in keys if k not in self.values]
        if missing:
            raise TropError(f"{len(missing)} Plücker coordinates missing, e.g. {[i + 1 for i in missing[0]]}")
        self.values = {k: tv(self.values[k]) for k in keys}
        if all(v == INF for v in self.values.values()):
            raise TropError("a tropical Plücker vector needs a finite coordinate")

    def __getitem__(self, subset):
        return self.values[tuple(sorted(subset))]

    def all_finite(self):
        return all(v != INF for v in self.values.values())

    @classmethod
    def from_field(cls, A):
        """Degrees of the maximal minors of a ``d x n`` field matrix."""
        d, n = shape(A)
        return cls(d, n, {k: m.deg() for k, m in plucker_vector(A).items()})

    def to_json(self):
        return {
            "d": self.d,
            "n": self.n,
            "values": [{"subset": [i + 1 for i in k], "value": fmt_value(v)} for k, v in self.values.items()],
        }


def read_plucker(text):
    """Header ``"d n"``, then one ``"subset value"`` line per d-subset.

    The subset is written as 1-indexed labels separated by spaces or commas,
    or as a run of digits when ``n <= 9``.
    """
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    d, n = map(int, lines[0].split())
    values = {}
    for ln in lines[1:]:
        toks = ln.replace(",", " ").split()
        val = toks[-1]
        els = toks[:-1]
        if len(els) == 1 and len(els[0]) == d and d > 1:
            els = list(els[0])
        key = tuple(sorted(int(e) - 1 for e in els))
        if len(key) != d:
            raise TropError(f"subset {els} does not have {d} elements")
        values[key] = tv(val)
    return TropPlucker(d, n, values)


def write_plucker(p):
    rows = [f"{p.d} {p.n}"]
    for k, v in p.values.items():
        rows.append(" ".join(str(i + 1) for i in k) + " " + fmt_value(v))
    return "\n".join(rows) + "\n"


def _twice(vals):
    m = min(vals)
    return m == INF or vals.count(m) >= 2


def validate_plucker(p):
    """Check every three-term relation; returns ``(ok, violations)``."""
    bad = []
    if p.d >= 2:
        for S in combinations(range(p.n), p.d - 2):
            rest = [e for e in range(p.n) if e not in S]
            for i, j, k, l in combinations(rest, 4):
                terms = [
                    _tmul(p[S + (i, j)], p[S + (k, l)]),
                    _tmul(p[S + (i, k)], p[S + (j, l)]),
                    _tmul(p[S + (i, l)], p[S + (j, k)]),
                ]
                if not _twice(terms):
                    bad.append({"S": [e + 1 for e in S], "ijkl": [i + 1, j + 1, k + 1, l + 1],
                                "terms": [fmt_value(t) for t in terms]})
    return not bad, bad


def _tmul(a, b):
    return INF if INF in (a, b) else a + b


def circuits_of_plucker(p):
    """One form per (d+1)-subset ``I``: coefficient ``p[I - i]`` at ``i``, ``INF`` off ``I``."""
    forms = []
    for I in combinations(range(p.n), p.d + 1):
        f = [INF] * p.n
        for i in I:
            f[i] = p[tuple(e for e in I if e != i)]
        forms.append(f)
    return forms


def form_support(f):
    return sum(1 << i for i, c in enumerate(f) if c != INF)


# -- membership ---------------------------------------------------------------


def normalize_point(x):
    x = [tv(v) for v in x]
    finite = [v for v in x if v != INF]
    if not finite:
        raise TropError("the all-infinity vector is not a point of projective space")
    m = min(finite)
    return [v if v == INF else v - m for v in x]


def in_hyperplane(f, x):
    return _twice([_tmul(c, v) for c, v in zip(f, x)])


def in_prevariety(forms, x):
    return all(in_hyperplane(f, x) for f in forms)


def in_linear_space(p, x):
    return in_prevariety(circuits_of_plucker(p), x)


def trop_image_membership(D, x):
    """Is ``x`` in the image of ``v -> D (min,+) v``?

    The principal solution ``v*_j = max_i (x_i - D_ij)`` is the least ``v``
    with ``D v >= x``; ``x`` is in the image iff ``D v* == x``. Returns
    ``(True, v*)`` or ``(False, i)`` with ``i`` the first coordinate where
    ``D v*`` overshoots ``x``.
    """
    x = [tv(v) for v in x]
    n, d = len(D), len(D[0])
    if n != len(x):
        raise TropError(f"point has {len(x)} coordinates, matrix has {n} rows")
    vstar = []
    for j in range(d):
        lows = []
        for i in range(n):
            if D[i][j] == INF:
                continue  # no constraint from an infinite entry
            lows.append(x[i] - D[i][j] if x[i] != INF else INF)
        vstar.append(max(lows) if lows else INF)
    img = trop_mat_mul(D, vstar)
    for i in range(n):
        if img[i] != x[i]:
            return False, i
    return True, vstar


# -- realizable spaces --------------------------------------------------------


def tropical_circuits_of_space(A):
    """Tropicalized minimal-support forms vanishing on the column space of ``A``."""
    perp = orthogonal_complement(A)
    if not perp:
        return []
    return [deg_vector(c) for c in circuits_of_rowspace(perp, normalized=False)]


def _random_trop_vector(rng, d, values=(0, 1, 2, 3, Fraction(1, 2), Fraction(-1, 3), INF)):
    while True:
        v = [tv(rng.choice(values)) for _ in range(d)]
        if any(x != INF for x in v):
            return v


def containment_check(A, samples=500, seed=0):
    """Sampled check that every point of ``im(deg A)`` satisfies every tropicalized circuit.

    Always true for a correct implementation; returns ``(ok, counterexample)``.
    """
    rng = random.Random(seed)
    D = deg_matrix(A)
    forms = tropical_circuits_of_space(A)
    _, d = shape(A)
    for _ in range(samples):
        v = _random_trop_vector(rng, d)
        x = trop_mat_mul(D, v)
        if all(c == INF for c in x):
            continue
        for f in forms:
            if not in_hyperplane(f, x):
                return False, {"v": v, "x": x, "form": f}
    return True, None


def _in_span(v, A):
    _, d = shape(A)
    return rank(A) == rank([row + [val] for row, val in zip(A, v)])


def cocircuit_decomposition(v, A, cocircuits=None):
    """Write ``v`` in the column space of ``A`` as a sum of cocircuits.

    Repeatedly takes the first cocircuit ``u`` with support inside ``supp(v)``
    and scales it by ``c = v_i / u_i`` where ``i`` maximises
    ``deg v_i - deg u_i``: then ``deg(c u) >= deg(v)`` coordinatewise and
    ``c u`` agrees with ``v`` at ``i``, so ``v - c u`` has smaller support.
    """
    v = [Puiseux.coerce(x) for x in v]
    if not support(v):
        raise TropError("cannot decompose the zero vector")
    if not _in_span(v, A):
        raise NotInSpace("vector is not in the column space")
    if cocircuits is None:
        cocircuits = cocircuits_of_subspace(A, normalized=False)
    pieces = []
    rest = v
    while True:
        s = support(rest)
        if any(support(u) == s for u in cocircuits):
            pieces.append(rest)
            return pieces
        u = next(u for u in cocircuits if support(u) & s == support(u))
        gap = {i: rest[i].deg() - u[i].deg() for i in indices(support(u))}
        i = max(gap, key=lambda k: (gap[k], -k))
        c = rest[i] / u[i]
        piece = [c * x for x in u]
        piece[i] = rest[i]
        nxt = [a - b for a, b in zip(rest, piece)]
        nxt[i] = ZERO
        pieces.append(piece)
        rest = nxt


@dataclass
class ParamReport:
    equal: bool
    cocircuit_supports: list
    missing: list = field(default_factory=list)
    # deg of a missing cocircuit, each verified outside im(deg A)
    witnesses: list = field(default_factory=list)
    samples: int = 0
    sample_failures: list = field(default_factory=list)

    def to_json(self):
        return {
            "equal": self.equal,
            "cocircuit_supports": [labels(s) for s in self.cocircuit_supports],
            "missing": [labels(s) for s in self.missing],
            "witnesses": [
                {"support": labels(w["support"]), "deg": [fmt_value(x) for x in w["deg"]],
                 "in_image": w["in_image"], "in_space": w["in_space"]}
                for w in self.witnesses
            ],
            "samples": self.samples,
            "sample_failures": self.sample_failures,
        }


def random_space_vector(rng, cocircuits, monomials=False):
    """A random element of the space: combination of a random nonempty set of cocircuits."""
    k = rng.randint(1, len(cocircuits))
    chosen = rng.sample(range(len(cocircuits)), k)
    w = [ZERO] * len(cocircuits[0])
    for idx in chosen:
        c = Fraction(rng.choice([k for k in range(-9, 10) if k]), rng.choice([1, 2, 3]))
        coef = Puiseux.monomial(c, rng.randint(0, 3) if monomials else 0)
        w = [a + coef * b for a, b in zip(w, cocircuits[idx])]
    return w


def parametrization_equality(A, samples=200, seed=0):
    """Is ``deg(L) = im(deg A)`` for ``L`` the column space of ``A``?

    Equality holds iff every cocircuit support of ``L`` is the support of some
    column of ``A``. On equality, sampled points ``deg(w)``, ``w`` in ``L``, are
    checked to lie in ``im(deg A)``; otherwise each missing cocircuit's degree
    vector is checked to lie outside ``im(deg A)`` but inside ``deg(L)``.
    """
    cocs = cocircuits_of_subspace(A, normalized=False)
    D = deg_matrix(A)
    col_supports = {support(c) for c in transpose(A)}
    coc_supports = [support(u) for u in cocs]
    missing = [s for s in coc_supports if s not in col_supports]
    report = ParamReport(not missing, coc_supports, missing)
    forms = tropical_circuits_of_space(A)
    for s, u in zip(coc_supports, cocs):
        if s not in missing:
            continue
        du = deg_vector(u)
        inside, _ = trop_image_membership(D, du)
        report.witnesses.append({"support": s, "deg": du, "in_image": inside,
                                 "in_space": in_prevariety(forms, du)})
    if not missing:
        rng = random.Random(seed)
        monomials = any(not x.is_constant() for row in A for x in row)
        for _ in range(samples):
            w = random_space_vector(rng, cocs, monomials)
            if not support(w):
                continue
            dw = deg_vector(w)
            report.samples += 1
            ok, _ = trop_image_membership(D, dw)
            if not ok or not in_prevariety(forms, dw):
                report.sample_failures.append([fmt_value(x) for x in dw])
    return report


# -- heuristic prevariety comparison ------------------------------------------


@dataclass
class CompareReport:
    equal_on_samples: bool
    checked: int
    counterexample: list = None
    reason: str = ""

    def to_json(self):
        return {
            "status": "equal-on-samples" if self.equal_on_samples else "counterexample",
            "checked": self.checked,
            "counterexample": None if self.counterexample is None else [fmt_value(x) for x in self.counterexample],
            "reason": self.reason,
        }


def _grid_points(n, grid):
    for x in product(grid, repeat=n):
        finite = [v for v in x if v != INF]
        if finite and min(finite) == 0:
            yield list(x)


def prevariety_vs_space(forms, p, seed=0, grid=(0, 1, 2, INF), n_random=1000, grid_max_n=8):
    """HEURISTIC: compare the prevariety of ``forms`` with the linear space of ``p`` on samples.

    Samples are the grid points ``grid^n`` (normalised, ``n <= grid_max_n``),
    0/1/inf patterns for larger ``n``, and ``n_random`` random rational
    points. Agreement on samples is evidence, not proof.
    """
    grid = tuple(tv(g) for g in grid)
    forms = [[tv(c) for c in f] for f in forms]
    space_forms = circuits_of_plucker(p)
    rng = random.Random(seed)
    min_support = p.n - p.d + 1 if p.all_finite() else 0
    checked = 0

    def verdict(x):
        nonlocal checked
        checked += 1
        a = in_prevariety(forms, x)
        b = in_prevariety(space_forms, x)
        if a == b:
            return None
        size = sum(1 for v in x if v != INF)
        if a and size < min_support:
            why = f"prevariety point with support {size} < {min_support}, the minimum for the space"
        elif a:
            why = "point in the prevariety but outside the linear space"
        else:
            why = "point in the linear space excluded by a form"
        return CompareReport(False, checked, x, why)

    points = _grid_points(p.n, grid) if p.n <= grid_max_n else _grid_points(p.n, (0, 1, INF))
    for x in points:
        r = verdict(x)
        if r:
            return r
    for _ in range(n_random):
        x = [tv(Fraction(rng.randint(-6, 6), rng.randint(1, 3))) if rng.random() > 0.1 else INF for _ in range(p.n)]
        if all(v == INF for v in x):
            continue
        r = verdict(normalize_point(x))
        if r:
            return r
    return CompareReport(True, checked, None, "no disagreement on samples")


def plucker_of_column_space(A):
    """Tropical Plücker vector of the column space of the ``n x d`` matrix ``A``."""
    return TropPlucker.from_field(rowspace_basis(transpose(A)))


def parametrization_trials(trials=100, seed=0, n_range=(3, 6), samples=200):
    """Randomized check of both directions of the parametrization criterion.

    Each trial draws a generic rational subspace, tests the matrix of all
    cocircuits (expect equality, sampled image agreement) and the same matrix
    with one cocircuit removed (expect failure with an exact witness).
    """
    rng = random.Random(seed)
    out = []
    for t in range(trials):
        n = rng.randint(*n_range)
        d = rng.randint(2, n - 1)  # at least two cocircuits, so one can be dropped
        L = random_generic_subspace(rng, d, n)
        cocs = cocircuits_of_subspace(transpose(L), normalized=True)
        full = transpose(cocs)
        r_full = parametrization_equality(full, samples=samples, seed=seed + t)
        drop = rng.randrange(len(cocs))
        part = transpose([u for k, u in enumerate(cocs) if k != drop])
        r_part = parametrization_equality(part, samples=0)
        ok_full = r_full.equal and not r_full.sample_failures and r_full.samples > 0
        ok_part = (not r_part.equal and len(r_part.missing) == 1
                   and all(not w["in_image"] and w["in_space"] for w in r_part.witnesses))
        out.append({"trial": t, "n": n, "d": d, "cocircuits": len(cocs),
                    "full_ok": ok_full, "missing_ok": ok_part, "samples": r_full.samples})
    return out
