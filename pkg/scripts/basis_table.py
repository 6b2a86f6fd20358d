"""Table of necessary, greedy and minimum basis sizes across the named families."""

import argparse
from dataclasses import dataclass

from tropbasis import families as F
from tropbasis import graph as G
from tropbasis.basis import has_unique_minimal_basis, minimal_basis_greedy, minimum_basis_exact, necessary_circuits


@dataclass
class Config:
    include_petersen: bool = False


def rows(cfg):
    yield "U(2,4)", F.uniform(2, 4)
    yield "U(2,5)", F.uniform(2, 5)
    yield "U(2,6)", F.uniform(2, 6)
    yield "U(3,6)", F.uniform(3, 6)
    yield "Fano", F.fano()
    yield "R10", F.r10()
    yield "M(K4)", F.graphic(G.complete_graph(4))
    yield "M(K5)", F.graphic(G.complete_graph(5))
    yield "M(prism)", F.graphic(G.prism_graph())
    yield "M*(K4)", F.cographic(G.complete_graph(4))
    yield "M*(K5)", F.cographic(G.complete_graph(5))
    yield "M*(prism)", F.cographic(G.prism_graph())
    if cfg.include_petersen:
        yield "M(Petersen)", F.graphic(G.petersen_graph())


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--include-petersen", action="store_true")
    cfg = Config(**vars(ap.parse_args()))
    print(f"{'matroid':12s} {'n':>3s} {'circ':>5s} {'nec':>4s} {'greedy':>6s} {'min':>4s}  unique")
    for name, M in rows(cfg):
        nec = necessary_circuits(M)
        greedy = minimal_basis_greedy(M)
        exact = minimum_basis_exact(M)
        print(f"{name:12s} {M.n:3d} {len(M.circuits):5d} {len(nec):4d} {len(greedy.basis):6d} "
              f"{exact.optimum_size:4d}  {has_unique_minimal_basis(M)}")


if __name__ == "__main__":
    main()
