"""EXPERIMENTAL: look for row subsets that pass the rank condition but are not bases.

For generic subspaces, take random subsets of the circuit matrix that still
satisfy the tropical-rank condition and compare their prevariety with the
linear space on samples. Any disagreement is a candidate counterexample to
the converse and is printed in full; none is expected.
"""

import argparse
import json
import random
from collections import Counter
from dataclasses import asdict, dataclass

from tropbasis.exact import deg_matrix
from tropbasis.rank_theorem import converse_experiment, random_instance
from tropbasis.tropical import column_rank_condition


@dataclass
class Config:
    instances: int = 30
    subsets_per_instance: int = 5
    seed: int = 0
    n_min: int = 4
    n_max: int = 5
    n_random: int = 300


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for k, v in asdict(Config()).items():
        ap.add_argument(f"--{k.replace('_', '-')}", type=type(v), default=v)
    cfg = Config(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)
    tally = Counter()
    candidates = []
    for _ in range(cfg.instances):
        n = rng.randint(cfg.n_min, cfg.n_max)
        k = rng.randint(1, n - 2)
        L, M = random_instance(rng, n, k)
        for _ in range(cfg.subsets_per_instance):
            rows = sorted(rng.sample(range(len(M)), rng.randint(k, len(M))))
            sub = [M[i] for i in rows]
            if not column_rank_condition(deg_matrix(sub), k)[0]:
                tally["condition fails"] += 1
                continue
            rep = converse_experiment(sub, L, seed=cfg.seed, n_random=cfg.n_random)
            tally[rep["verdict"]] += 1
            if rep["comparison"]["status"] != "equal-on-samples":
                candidates.append({"n": n, "k": k, "rows": [r + 1 for r in rows], "report": rep})
    print(json.dumps({"config": asdict(cfg), "tally": dict(tally), "candidates": candidates}, indent=2))


if __name__ == "__main__":
    main()
