"""Command-line entry point: ``tropbasis <group> <verb> [options]``.

Every command prints one JSON report (or a text rendering with
``--format text``). Exit codes: 0 success, 1 domain error or failed
self-check, 2 usage error.
"""

import argparse
import json
import sys
import time
import warnings
from fractions import Fraction

from . import basis as B
from . import exact as X
from . import families as F
from . import graph as G
from . import linspace as S
from . import matroid as Mt
from . import tropical as T
from .errors import PluckerCoordinateZero, TropError
from .io import digest, family_to_json, load_family, load_matroid
from .rank_theorem import converse_experiment

SCHEMA_VERSION = 1

NAMED_GRAPHS = {
    "K4": lambda: G.complete_graph(4),
    "K5": lambda: G.complete_graph(5),
    "prism": G.prism_graph,
    "petersen": G.petersen_graph,
}


class CheckFailed(Exception):
    pass


def _read(path):
    with open(path) as fh:
        return fh.read()


def _graph(args):
    if args.graph:
        return G.read_graph(_read(args.graph))
    if args.named:
        return NAMED_GRAPHS[args.named]()
    raise TropError("give --graph FILE or --named NAME")


def _point(text):
    return [T.tv(tok) for tok in text.replace(",", " ").split()]


def _vals(xs):
    return [T.fmt_value(x) for x in xs]


# -- matroid ------------------------------------------------------------------


def cmd_matroid(args):
    M = load_matroid(args.input, check_elimination=not args.no_elimination)
    if args.verb == "validate":
        return {"valid": True, "n": M.n, "circuits": len(M.circuits)}
    if args.verb == "flats":
        return {"flats": [Mt.labels(f) for f in sorted(Mt.all_flats(M), key=Mt.lex_key)]}
    if args.verb == "components":
        return {"components": [Mt.labels(c) for c in Mt.components(M)]}
    if args.verb == "simplify":
        N, emap = Mt.simplify(M)
        return {"matroid": N.to_json(), "element_map": [None if e is None else e + 1 for e in emap]}


# -- basis --------------------------------------------------------------------


def cmd_basis(args):
    M = load_matroid(args.input)
    if args.verb == "check":
        fam = load_family(args.family)
        ok = B.is_tropical_basis(M, fam)
        out = {"is_basis": ok}
        if not ok:
            out["uncovered"] = [Mt.labels(x) for x in B.uncovered_points(M, fam)[:20]]
        return out
    if args.verb == "necessary":
        nec = B.necessary_circuits(M)
        return {"necessary": [{"circuit": Mt.labels(c), "witness": Mt.labels(x)} for c, x in nec.items()],
                "is_basis": B.is_tropical_basis(M, nec)}
    if args.verb == "greedy-min":
        return B.minimal_basis_greedy(M).to_json()
    if args.verb == "exact-min":
        return B.minimum_basis_exact(M, args.node_budget).to_json()
    if args.verb == "unique-min":
        nec = B.necessary_circuits(M)
        unique = B.is_tropical_basis(M, nec)
        return {"unique": unique, "basis": family_to_json(nec) if unique else None}


# -- family -------------------------------------------------------------------


def cmd_family(args):
    v = args.verb
    if v == "uniform":
        M = F.uniform(args.d, args.n)
        known = F.uniform_basis(args.d, args.n, 0)
    elif v == "partition":
        blocks = [[int(c) - 1 for c in b] for b in args.blocks.split(",")]
        M = F.partition_matroid(blocks)
        known = F.partition_basis(blocks)
    elif v == "graphic":
        g = _graph(args)
        M, known = F.graphic(g), F.graphic_basis(g)
    elif v == "cographic":
        g = _graph(args)
        M, known = F.cographic(g), F.cographic_basis(g)
    elif v == "fano":
        M, known = F.fano(), F.fano_lines()
    else:
        M, known = F.r10(), F.r10_four_cycles()
    out = {"matroid": M.to_json()}
    if args.basis:
        out["basis"] = family_to_json(known)
    return out


# -- trop ---------------------------------------------------------------------


def cmd_trop(args):
    D = T.read_trop_matrix(_read(args.input))
    if args.verb == "det":
        return T.trop_det(D).to_json()
    if args.verb == "rank":
        return {"rank": T.trop_rank(D)}
    ok, cols = T.column_rank_condition(D, args.k)
    return {"k": args.k, "holds": ok, "violating_columns": None if cols is None else [c + 1 for c in cols]}


# -- field --------------------------------------------------------------------


def cmd_field(args):
    A = X.read_field_matrix(_read(args.input))
    if args.verb == "deg":
        return {"deg": T.matrix_to_json(X.deg_matrix(A))}
    if args.verb == "plucker":
        mins = X.plucker_vector(A)
        return {"minors": [{"subset": [i + 1 for i in k], "value": str(m), "deg": T.fmt_value(m.deg())}
                           for k, m in mins.items()]}
    vecs = X.circuits_of_rowspace(A) if args.verb == "circuits" else X.cocircuits_of_subspace(A)
    return {args.verb: [{"support": Mt.labels(X.support(v)), "vector": [str(x) for x in v],
                         "deg": _vals(X.deg_vector(v))} for v in vecs]}


# -- space --------------------------------------------------------------------


def cmd_space(args):
    v = args.verb
    if v == "validate-plucker":
        p = S.read_plucker(_read(args.input))
        ok, bad = S.validate_plucker(p)
        return {"valid": ok, "violations": bad[:20]}
    if v == "membership":
        x = _point(args.point)
        if args.image_of:
            D = T.read_trop_matrix(_read(args.image_of))
            ok, info = S.trop_image_membership(D, x)
            return {"in_image": ok, "preimage": _vals(info) if ok else None,
                    "first_mismatch": None if ok else info + 1}
        p = S.read_plucker(_read(args.input))
        return {"in_space": S.in_linear_space(p, x)}
    if v == "param-check":
        A = X.read_field_matrix(_read(args.input))
        return S.parametrization_equality(A, samples=args.samples, seed=args.seed).to_json()
    if v == "prevariety-compare":
        forms = T.read_trop_matrix(_read(args.forms))
        p = S.read_plucker(_read(args.input))
        return S.prevariety_vs_space(forms, p, seed=args.seed, n_random=args.n_random).to_json()


# -- repro --------------------------------------------------------------------


def _check(checks, name, ok, value=None):
    checks.append({"claim": name, "ok": bool(ok), "value": value})


def _labels_set(family):
    return sorted(Mt.fmt(c) for c in family)


def repro_fano():
    M, lines = F.fano(), F.fano_lines()
    nec = B.necessary_circuits(M)
    ex = B.minimum_basis_exact(M)
    c = []
    _check(c, "necessary circuits are the 7 lines", set(nec) == set(lines), _labels_set(nec))
    _check(c, "the lines form a tropical basis", B.is_tropical_basis(M, lines))
    _check(c, "unique minimal basis", B.has_unique_minimal_basis(M))
    _check(c, "minimum basis size 7", ex.optimum_size == 7, ex.optimum_size)
    return c


def repro_r10():
    M, quads = F.r10(), F.r10_four_cycles()
    nec = B.necessary_circuits(M)
    c = []
    _check(c, "30 circuits", len(M.circuits) == 30, len(M.circuits))
    _check(c, "necessary circuits are the 15 four-cycles of K5", set(nec) == set(quads), _labels_set(nec))
    _check(c, "the four-cycles form a tropical basis", B.is_tropical_basis(M, quads))
    _check(c, "unique minimal basis", B.has_unique_minimal_basis(M))
    return c


def repro_k4_graphic():
    g = G.complete_graph(4)
    M = F.graphic(g)
    ind = G.induced_cycles(g)
    nec = B.necessary_circuits(M)
    c = []
    _check(c, "necessary circuits are the induced cycles", set(nec) == set(ind), _labels_set(nec))
    _check(c, "the induced cycles form a tropical basis", B.is_tropical_basis(M, ind))
    return c


def repro_k4_cographic():
    g = G.complete_graph(4)
    M = F.cographic(g)
    idx0 = F.cographic_basis(g)
    nec = B.necessary_circuits(M)
    c = []
    _check(c, "necessary circuits are the index-0 bonds", set(nec) == set(idx0), _labels_set(nec))
    _check(c, "the index-0 bonds form a tropical basis", B.is_tropical_basis(M, idx0))
    return c


def repro_u25():
    M = F.uniform(2, 5)
    ex = B.minimum_basis_exact(M)
    five = [Mt.subset(s) for s in ("123", "124", "125", "134", "345")]
    star = F.uniform_basis(2, 5, 0)
    minimal = all(not B.is_tropical_basis(M, [x for x in star if x != y]) for y in star)
    lb = B.uniform_lower_bound(2, 5)
    c = []
    _check(c, "minimum basis size 5", ex.optimum_size == 5, ex.optimum_size)
    _check(c, "{123,124,125,134,345} is a basis", B.is_tropical_basis(M, five))
    _check(c, "the 6 circuits through element 1 form an inclusion-minimal basis",
           len(star) == 6 and B.is_tropical_basis(M, star) and minimal)
    _check(c, "counting lower bound 10/3 < 5", lb == Fraction(10, 3) and lb < 5, str(lb))
    return c


EXAMPLE4_M = [[1, 0, 1, 1], [0, 1, 1, 1], [1, -1, 0, 0]]
EXAMPLE4_DEG = [[0, T.INF, 0, 0], [T.INF, 0, 0, 0], [0, 0, T.INF, T.INF]]


def repro_example4():
    M = X.fmat(EXAMPLE4_M)
    D = X.deg_matrix(M)
    mat = Mt.validate_circuits(4, [X.support(r) for r in M])
    pts = B.variety_points_01(mat, include_trivial=False)
    L = X.kernel(M)
    p = S.TropPlucker.from_field(L)
    rank34 = T.trop_rank(T.submatrix(D, range(3), [2, 3]))
    full = S.prevariety_vs_space(D, p)
    two = S.prevariety_vs_space(D[:2], p)
    w = two.counterexample
    c = []
    _check(c, "deg(M) matches", D == T.tmat(EXAMPLE4_DEG), T.matrix_to_json(D))
    _check(c, "0/1 variety is {0001, 0010, 1100}",
           pts == {Mt.subset("4"), Mt.subset("3"), Mt.subset("12")},
           sorted("".join("1" if x >> i & 1 else "0" for i in range(4)) for x in pts))
    _check(c, "columns 3,4 have tropical rank 1", rank34 == 1, rank34)
    _check(c, "Plücker coordinate p12 is infinite", p[(0, 1)] == T.INF)
    _check(c, "rows of M form a tropical basis",
           B.is_tropical_basis(mat, mat.circuits) and full.equal_on_samples)
    valid = (w is not None and all(S.in_hyperplane(f, w) for f in D[:2])
             and not S.in_hyperplane(D[2], w))
    _check(c, "rows 1-2 are not a tropical basis", not two.equal_on_samples and valid,
           None if w is None else _vals(w))
    try:
        converse_experiment(M)
        _check(c, "rank-condition harness rejects the instance", False)
    except PluckerCoordinateZero:
        _check(c, "rank-condition harness rejects the instance", True)
    return c


REPRO = {
    "fano": repro_fano,
    "r10": repro_r10,
    "k4-graphic": repro_k4_graphic,
    "k4-cographic": repro_k4_cographic,
    "u25": repro_u25,
    "paper-example-4": repro_example4,
}


def cmd_repro(args):
    checks = REPRO[args.verb]()
    out = {"checks": checks, "all_ok": all(ch["ok"] for ch in checks)}
    if not out["all_ok"]:
        raise CheckFailed(out)
    return out


# -- parser -------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--parallel", action="store_true",
                        help="accepted for compatibility; enumeration runs in one process")

    p = argparse.ArgumentParser(prog="tropbasis", description=__doc__.splitlines()[0])
    groups = p.add_subparsers(dest="group", required=True)

    def verbs(name, handler, names, help_):
        g = groups.add_parser(name, help=help_)
        sub = g.add_subparsers(dest="verb", required=True)
        out = {}
        for v in names:
            sp = sub.add_parser(v, parents=[common])
            sp.set_defaults(handler=handler)
            out[v] = sp
        return out

    m = verbs("matroid", cmd_matroid, ["validate", "flats", "components", "simplify"], "matroid utilities")
    for sp in m.values():
        sp.add_argument("--in", dest="input", required=True)
        sp.add_argument("--no-elimination", action="store_true")

    b = verbs("basis", cmd_basis, ["check", "necessary", "greedy-min", "exact-min", "unique-min"],
              "tropical bases of matroids")
    for sp in b.values():
        sp.add_argument("--in", dest="input", required=True)
    b["check"].add_argument("--family", required=True)
    b["exact-min"].add_argument("--node-budget", type=int, default=None)

    f = verbs("family", cmd_family, ["uniform", "partition", "graphic", "cographic", "fano", "r10"],
              "named matroid families")
    for sp in f.values():
        sp.add_argument("--basis", action="store_true", help="also print the known minimal basis")
    f["uniform"].add_argument("--d", type=int, required=True)
    f["uniform"].add_argument("--n", type=int, required=True)
    f["partition"].add_argument("--blocks", required=True, help='e.g. "12,345"')
    for v in ("graphic", "cographic"):
        f[v].add_argument("--graph")
        f[v].add_argument("--named", choices=sorted(NAMED_GRAPHS))

    t = verbs("trop", cmd_trop, ["det", "rank", "rank-condition"], "min-plus matrices")
    for sp in t.values():
        sp.add_argument("--in", dest="input", required=True)
    t["rank-condition"].add_argument("--k", type=int, required=True)

    fl = verbs("field", cmd_field, ["deg", "plucker", "circuits", "cocircuits"], "matrices over Puiseux series")
    for sp in fl.values():
        sp.add_argument("--in", dest="input", required=True)

    s = verbs("space", cmd_space, ["validate-plucker", "membership", "param-check", "prevariety-compare"],
              "tropical linear spaces")
    s["validate-plucker"].add_argument("--in", dest="input", required=True)
    s["membership"].add_argument("--in", dest="input", help="Plücker file")
    s["membership"].add_argument("--image-of", help="tropical matrix file; test image membership instead")
    s["membership"].add_argument("--point", required=True, help='e.g. "0,1,inf"')
    s["param-check"].add_argument("--in", dest="input", required=True)
    s["param-check"].add_argument("--samples", type=int, default=200)
    s["prevariety-compare"].add_argument("--in", dest="input", required=True, help="Plücker file")
    s["prevariety-compare"].add_argument("--forms", required=True, help="tropical matrix file of forms")
    s["prevariety-compare"].add_argument("--n-random", type=int, default=1000)

    verbs("repro", cmd_repro, list(REPRO), "self-checking reproductions")
    return p


def _input_digest(args):
    parts = [f"{k}={v}" for k, v in sorted(vars(args).items()) if k not in ("handler", "format", "parallel")]
    for k in ("input", "family", "graph", "forms", "image_of"):
        path = getattr(args, k, None)
        if path:
            parts.append(_read(path))
    return digest(*parts)


def _render_text(report):
    rows = [f"command: {report['command']}"]
    res = report.get("result") or {}
    if "checks" in res:
        for ch in res["checks"]:
            rows.append(f"[{'PASS' if ch['ok'] else 'FAIL'}] {ch['claim']}")
    else:
        for k, v in res.items():
            rows.append(f"{k}: {json.dumps(v)}")
    if "error" in report:
        rows.append(f"error: {report['error']['code']}: {report['error']['message']}")
    return "\n".join(rows)


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    report = {"schema_version": SCHEMA_VERSION, "command": f"{args.group} {args.verb}", "seed": args.seed}
    t0 = time.perf_counter()
    code = 0
    try:
        report["inputs_digest"] = _input_digest(args)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            report["result"] = args.handler(args)
        if caught:
            report["warnings"] = [str(w.message) for w in caught]
    except CheckFailed as e:
        report["result"] = e.args[0]
        report["error"] = {"code": "self_check_failed", "message": "a reproduced claim did not hold", "details": {}}
        code = 1
    except TropError as e:
        report["error"] = e.to_dict()
        code = 1
    except (OSError, ValueError, json.JSONDecodeError) as e:
        report["error"] = {"code": "bad_input", "message": str(e), "details": {}}
        code = 1
    report["wall_time"] = round(time.perf_counter() - t0, 6)
    if args.format == "json":
        print(json.dumps(report, indent=2, default=str), file=out)
    else:
        print(_render_text(report), file=out)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
