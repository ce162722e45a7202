"""How often the bounded Reidemeister search closes random mixed-sign R3 pairs.

Each instance is s_i^a s_{i+1}^b s_i^c on three strands embedded in a random
word, compared against its image under the corresponding braid identity.
"""

import argparse
import random
import time
from dataclasses import dataclass

from vbraid import Budget, r_equivalent_bounded
from vbraid.sampling import random_word
from vbraid.word import BraidWord, concat, invert, sigma


@dataclass
class BenchConfig:
    trials: int = 50
    context: int = 4
    max_nodes: int = 2000
    insert_slack: int = 2
    seed: int = 0


def mixed_pair(rng: random.Random, context: int):
    # s1^e s2 s1^-e = s2^-e s1 s2^e, which holds in the braid group for e = +-1
    e = rng.choice((1, -1))
    lhs = BraidWord(3, (sigma(1, e), sigma(2, 1), sigma(1, -e)))
    rhs = BraidWord(3, (sigma(2, -e), sigma(1, 1), sigma(2, e)))
    u = random_word(rng, 3, context)
    return concat(concat(u, lhs), invert(u)), concat(concat(u, rhs), invert(u))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(BenchConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=type(default), default=default)
    cfg = BenchConfig(**vars(p.parse_args()))
    rng = random.Random(cfg.seed)
    budget = Budget(cfg.max_nodes, cfg.insert_slack)
    counts = {"equivalent": 0, "inequivalent": 0, "unknown": 0}
    lengths, nodes = [], []
    t0 = time.perf_counter()
    for _ in range(cfg.trials):
        verdict = r_equivalent_bounded(*mixed_pair(rng, cfg.context), budget)
        counts[verdict.status] += 1
        nodes.append(verdict.nodes)
        if verdict.trace is not None:
            lengths.append(len(verdict.trace))
    elapsed = time.perf_counter() - t0
    print(f"trials={cfg.trials} budget={budget}")
    print(" ".join(f"{k}={v}" for k, v in counts.items()))
    if lengths:
        print(f"trace length mean={sum(lengths) / len(lengths):.2f} max={max(lengths)}")
    print(f"nodes mean={sum(nodes) / len(nodes):.1f}  time {elapsed:.2f}s")


if __name__ == "__main__":
    main()
