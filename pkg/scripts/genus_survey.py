"""Distribution of canonical genus (and bounded minimum) over random words.

    python3 scripts/genus_survey.py --n 4 --length 12 --samples 300
"""

import argparse
import collections
import random
from dataclasses import dataclass

from vbraid import Budget, canonical_genus, min_genus_bounded
from vbraid.sampling import random_word


@dataclass
class SurveyConfig:
    n: int = 4
    length: int = 12
    samples: int = 300
    tau_prob: float = 0.4
    minimize_nodes: int = 0
    seed: int = 0


def survey(cfg: SurveyConfig):
    rng = random.Random(cfg.seed)
    canon, minimal = collections.Counter(), collections.Counter()
    for _ in range(cfg.samples):
        w = random_word(rng, cfg.n, cfg.length, tau_prob=cfg.tau_prob)
        canon[canonical_genus(w)] += 1
        if cfg.minimize_nodes:
            minimal[min_genus_bounded(w, Budget(max_nodes=cfg.minimize_nodes)).genus] += 1
    return canon, minimal


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SurveyConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=type(default), default=default)
    cfg = SurveyConfig(**vars(p.parse_args()))
    canon, minimal = survey(cfg)
    print(f"n={cfg.n} length={cfg.length} samples={cfg.samples} tau_prob={cfg.tau_prob}")
    print("genus  canonical" + ("  minimized" if minimal else ""))
    for g in sorted(set(canon) | set(minimal)):
        row = f"{g:5d}  {canon[g]:9d}"
        if minimal:
            row += f"  {minimal[g]:9d}"
        print(row)


if __name__ == "__main__":
    main()
