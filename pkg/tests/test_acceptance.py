"""Acceptance gate.

Run ``python3 tests/test_acceptance.py`` for one PASS/FAIL line per
criterion, or ``pytest tests/test_acceptance.py -s`` to see the same lines
under pytest.
"""

import json
import random
import sys
import time
from pathlib import Path

import pytest

from vbraid import checks
from vbraid.gauss import canonical_form, gauss_from_json, gauss_to_json, parse_gauss, to_text, word_to_gauss
from vbraid.moves import MoveTrace, canonical_step, enumerate_sites
from vbraid.sampling import random_word
from vbraid.search import EQUIVALENT, INEQUIVALENT, Budget, r_equivalent_bounded, r_equivalent_diagrams
from vbraid.surface import RibbonGraph, canonical_genus
from vbraid.word import parse_word, to_text as word_text, word_from_json, word_to_json

GOLDEN = Path(__file__).parent / "golden"


def _suite(result, limit=None):
    ok = result.ok and (limit is None or result.seconds < limit)
    return ok, f"{result.passed}/{result.total} in {result.seconds:.2f}s"


def c1_roundtrip():
    return _suite(checks.roundtrip(trials=1000, seed=0, max_n=6, max_arrows=20), limit=10.0)


def c2_vm_canonical():
    res = checks.vm_invariance(words=500, mutations=20, seed=0, max_n=5, max_len=25)
    ok, detail = _suite(res)
    return ok and res.total == 10_000, detail


def c3_r3_correspondence():
    res = checks.r3_correspondence(trials=200, seed=0)
    ok, detail = _suite(res)
    return ok and res.total == 200, detail


def c4_pv_presentation():
    res = checks.pv_presentation((2, 3, 4))
    ok, detail = _suite(res, limit=1.0)
    # n=2: nothing; n=3: 6 triangles; n=4: 24 triangles + 24 commutations
    return ok and res.total == 6 + 48, detail


def c5_genus_golden():
    values = {
        ("s1 t1", 2): 0,
        ("t1 s1 t1 s1", 2): 0,  # frozen from the hand-traced rotation system
    }
    bad = [w for (w, n), g in values.items() if canonical_genus(parse_word(w, n)) != g]
    classical = checks.classical_genus(max_n=3, max_len=6)
    return not bad and classical.ok, f"golden mismatches={bad}, classical {classical.passed}/{classical.total}"


def c6_genus_vm():
    res = checks.genus_vm_invariance(trials=500, seed=0)
    ok, detail = _suite(res)
    return ok and res.total == 500, detail


def c7_search_soundness():
    invariants = checks.omega_invariants(trials=1000, seed=0)
    rng = random.Random(0)
    equivalent = replayed = wrong = 0
    for _ in range(100):
        n = rng.randint(2, 4)
        g = canonical_form(word_to_gauss(random_word(rng, n, rng.randint(0, 8))))
        target = g
        for _ in range(rng.randint(1, 3)):
            sites = enumerate_sites(target, len(target.arrows) + 2)
            if sites:
                target = canonical_step(target, rng.choice(sites))
        verdict = r_equivalent_diagrams(g, target, Budget(max_nodes=500))
        wrong += verdict.status == INEQUIVALENT
        if verdict.status == EQUIVALENT:
            equivalent += 1
            replayed += MoveTrace(g, verdict.trace.sites).replay() == target
    braid = r_equivalent_bounded(parse_word("s1 s2 s1", 3), parse_word("s2 s1 s2", 3))
    braid_ok = braid.status == EQUIVALENT and len(braid.trace) == 1
    ok = invariants.ok and invariants.total == 1000 and equivalent == replayed and not wrong and braid_ok
    return ok, (
        f"invariants {invariants.passed}/{invariants.total}, "
        f"traces replayed {replayed}/{equivalent}, false certificates {wrong}, braid pair length {len(braid.trace or [])}"
    )


def c8_serialization():
    def same(name, parse, dump):
        text = (GOLDEN / name).read_text()
        return dump(parse(text.rstrip("\n"))) + "\n" == text

    cases = {
        "word.txt": same("word.txt", lambda t: parse_word(t, 4), word_text),
        "word.json": same("word.json", lambda t: word_from_json(t), lambda w: json.dumps(word_to_json(w))),
        "gauss.txt": same("gauss.txt", parse_gauss, to_text),
        "gauss.json": same("gauss.json", gauss_from_json, lambda g: json.dumps(gauss_to_json(g))),
        "ribbon": (GOLDEN / "ribbon_s1_t1.txt").read_text()
        == RibbonGraph.from_text((GOLDEN / "ribbon_s1_t1.txt").read_text()).to_text(),
        "trace": same(
            "trace_braid_relation.json",
            lambda t: MoveTrace.from_json(
                canonical_form(word_to_gauss(parse_word("s1 s2 s1", 3))), json.loads(t)["trace"]
            ),
            lambda tr: json.dumps({"verdict": "equivalent", "nodes": 1, "trace": tr.to_json()}),
        ),
    }
    bad = [k for k, v in cases.items() if not v]
    return not bad, f"{len(cases) - len(bad)}/{len(cases)} bit-exact"


CRITERIA = [
    ("1 roundtrip", c1_roundtrip),
    ("2 vm canonical form", c2_vm_canonical),
    ("3 R3 <-> Omega3", c3_r3_correspondence),
    ("4 PV presentation", c4_pv_presentation),
    ("5 genus golden values", c5_genus_golden),
    ("6 genus vm-invariance", c6_genus_vm),
    ("7 search soundness", c7_search_soundness),
    ("8 serialization", c8_serialization),
]


def run_criterion(name, fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    print(f"{'PASS' if ok else 'FAIL'} criterion {name}: {detail} [{time.perf_counter() - t0:.2f}s]")
    return ok


@pytest.mark.parametrize("name, fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, fn):
    assert run_criterion(name, fn)


if __name__ == "__main__":
    results = [run_criterion(name, fn) for name, fn in CRITERIA]
    sys.exit(0 if all(results) else 1)
