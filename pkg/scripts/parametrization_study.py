"""Randomized check of the cocircuit parametrization criterion."""

import argparse
import json
from dataclasses import asdict, dataclass

from tropbasis.linspace import parametrization_trials


@dataclass
class Config:
    trials: int = 100
    seed: int = 0
    n_min: int = 3
    n_max: int = 6
    samples: int = 200


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in asdict(Config()).items():
        ap.add_argument(f"--{k.replace('_', '-')}", type=type(v), default=v)
    cfg = Config(**vars(ap.parse_args()))
    recs = parametrization_trials(cfg.trials, cfg.seed, (cfg.n_min, cfg.n_max), cfg.samples)
    print(json.dumps({
        "config": asdict(cfg),
        "full_ok": sum(r["full_ok"] for r in recs),
        "missing_ok": sum(r["missing_ok"] for r in recs),
        "trials": len(recs),
    }, indent=2))


if __name__ == "__main__":
    main()
