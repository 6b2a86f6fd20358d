"""Randomized study of the tropical-rank necessary condition.

Draws generic subspaces, checks the full circuit matrix satisfies the
condition, and for row subsets that break it exhibits the small-support
prevariety point.
"""

import argparse
import json
from dataclasses import asdict, dataclass

from tropbasis.rank_theorem import rank_condition_trials


@dataclass
class Config:
    trials: int = 100
    seed: int = 0
    n_min: int = 3
    n_max: int = 6
    monomials: bool = False


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for k, v in asdict(Config()).items():
        if isinstance(v, bool):
            ap.add_argument(f"--{k.replace('_', '-')}", action="store_true")
        else:
            ap.add_argument(f"--{k.replace('_', '-')}", type=type(v), default=v)
    cfg = Config(**vars(ap.parse_args()))
    recs = rank_condition_trials(cfg.trials, cfg.seed, (cfg.n_min, cfg.n_max), cfg.monomials)
    contra = [r for r in recs if "contrapositive" in r]
    summary = {
        "config": asdict(cfg),
        "condition_holds": sum(r["condition"] for r in recs),
        "violation_instances": len(contra),
        "contrapositive_ok": sum(r["contrapositive_ok"] for r in contra),
    }
    print(json.dumps(summary, indent=2))


if __name__ == "__main__":
    main()
