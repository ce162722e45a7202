"""Seeded self-check suites shared by the CLI ``selftest`` command and tests.

Each suite returns a :class:`SuiteResult`; none of them raise on a failed
instance, they count it.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .gauss import canonical_form, word_to_gauss
from .moves import (
    apply_rewrite,
    canonical_step,
    enumerate_omega3,
    enumerate_sites,
    apply_omega,
    pair_writhes,
    sign_sum,
)
from .pure import verify_pv_presentation
from .realize import realize
from .sampling import random_diagram, random_word, vm_mutate, word_with_r3_site
from .search import Budget, EQUIVALENT, r_equivalent_diagrams
from .surface import canonical_genus
from .word import BraidWord, sigma


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, good: bool, detail=None) -> None:
        self.total += 1
        if good:
            self.passed += 1
        elif len(self.failures) < 20:
            self.failures.append(detail)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "total": self.total,
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
            "failures": self.failures,
        }

    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        return f"{mark} {self.name}: {self.passed}/{self.total} ({self.seconds:.2f}s)"


class _Timer:
    def __init__(self, result: SuiteResult):
        self.result = result

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.result

    def __exit__(self, *exc):
        self.result.seconds = time.perf_counter() - self.t0


def roundtrip(trials: int = 1000, seed: int = 0, max_n: int = 6, max_arrows: int = 20) -> SuiteResult:
    rng = random.Random(seed)
    with _Timer(SuiteResult("roundtrip")) as res:
        for _ in range(trials):
            g = random_diagram(rng, rng.randint(1, max_n), rng.randint(0, max_arrows))
            w = realize(g)
            res.record(canonical_form(word_to_gauss(w)) == canonical_form(g), str(g))
    return res


def vm_invariance(
    words: int = 500, mutations: int = 20, seed: int = 0, max_n: int = 5, max_len: int = 25
) -> SuiteResult:
    rng = random.Random(seed)
    with _Timer(SuiteResult("vm_invariance")) as res:
        for _ in range(words):
            w = random_word(rng, rng.randint(2, max_n), rng.randint(0, max_len))
            target = canonical_form(word_to_gauss(w))
            for v in vm_mutate(rng, w, mutations):
                res.record(canonical_form(word_to_gauss(v)) == target, (str(w), str(v)))
    return res


def r3_correspondence(trials: int = 200, seed: int = 0, max_n: int = 5, max_len: int = 15) -> SuiteResult:
    rng = random.Random(seed)
    with _Timer(SuiteResult("r3_correspondence")) as res:
        for _ in range(trials):
            w, site = word_with_r3_site(rng, rng.randint(3, max_n), rng.randint(0, max_len))
            v = apply_rewrite(w, site)
            before = canonical_form(word_to_gauss(w))
            after = canonical_form(word_to_gauss(v))
            one_step = any(canonical_step(before, s) == after for s in enumerate_omega3(before))
            verdict = r_equivalent_diagrams(before, after, Budget(max_nodes=1, insert_slack=0))
            good = (
                before != after
                and one_step
                and verdict.status == EQUIVALENT
                and len(verdict.trace) == 1
                and verdict.trace.replay() == after
            )
            res.record(good, (str(w), site.rule, site.position))
    return res


def pv_presentation(n_values=(2, 3, 4)) -> SuiteResult:
    with _Timer(SuiteResult("pv_presentation")) as res:
        for n in n_values:
            report = verify_pv_presentation(n)
            for check in report.checks:
                res.record(check.status == "pass", check.to_json())
    return res


def classical_genus(max_n: int = 3, max_len: int = 6) -> SuiteResult:
    with _Timer(SuiteResult("classical_genus")) as res:
        for n in range(1, max_n + 1):
            alphabet = [sigma(i, e) for i in range(1, n) for e in (1, -1)]
            for length in range(max_len + 1):
                if not alphabet and length:
                    break
                for letters in itertools.product(alphabet, repeat=length):
                    w = BraidWord(n, letters)
                    res.record(canonical_genus(w) == 0, str(w))
    return res


def genus_vm_invariance(trials: int = 500, seed: int = 0, max_n: int = 5, max_len: int = 25) -> SuiteResult:
    rng = random.Random(seed)
    with _Timer(SuiteResult("genus_vm_invariance")) as res:
        for _ in range(trials):
            w = random_word(rng, rng.randint(2, max_n), rng.randint(0, max_len))
            (v,) = vm_mutate(rng, w, rng.randint(1, 20))[-1:]
            res.record(canonical_genus(v) == canonical_genus(w), (str(w), str(v)))
    return res


def omega_invariants(trials: int = 1000, seed: int = 0, max_n: int = 5, max_arrows: int = 12) -> SuiteResult:
    """Perm, writhe and pair writhes survive random applicable Omega moves."""
    rng = random.Random(seed)
    with _Timer(SuiteResult("omega_invariants")) as res:
        while res.total < trials:
            n = rng.randint(2, max_n)
            g = random_diagram(rng, n, rng.randint(0, max_arrows), pure=rng.random() < 0.5)
            # bias toward diagrams with deletions and Omega3 blocks
            if rng.random() < 0.5:
                g = word_to_gauss(random_word(rng, n, rng.randint(0, 3 * max_arrows // 2)))
            sites = enumerate_sites(g, len(g.arrows) + 2)
            if not sites:
                continue
            site = rng.choice(sites)
            h = apply_omega(g, site)
            good = (
                h.perm == g.perm
                and sign_sum(h) == sign_sum(g)
                and pair_writhes(h, ordered=False) == pair_writhes(g, ordered=False)
            )
            res.record(good, (str(g), site.to_json()))
    return res


SUITES = {
    "roundtrip": roundtrip,
    "vm": vm_invariance,
    "r3": r3_correspondence,
    "genus-classical": classical_genus,
    "genus-vm": genus_vm_invariance,
    "omega-invariants": omega_invariants,
}
