"""Acceptance criteria, one test per criterion, all exact integer checks.

Each test prints a ``PASS``/``FAIL`` line; the lines are also collected and
repeated in the terminal summary.  ``python -m tests.test_acceptance`` runs
the whole list without pytest.
"""
import subprocess
import sys

import pytest

from lexsmd import verify
from lexsmd.boundary import star_transform, strong_resolving_graph, strong_resolving_tf_graph
from lexsmd.constructions import complete, complete_multipartite, cycle, grid, join, lexicographic_product, path, union
from lexsmd.corpus import all_graphs, connected_graphs
from lexsmd.graph import is_isomorphic
from lexsmd.smd import K1, formula_bounded_degree, formula_no_true_twins, route_and_evaluate, smd_bruteforce, smd_via_sr

pytestmark = pytest.mark.acceptance

RESULTS: list[str] = []


def _both_routes(g, want, label, bad):
    pipe, brute = smd_via_sr(g), smd_bruteforce(g)[0]
    if not pipe == brute == want:
        bad.append(f"{label}: want {want}, pipeline {pipe}, brute {brute}")


def family_catalogue():
    bad: list[str] = []
    _both_routes(complete_multipartite((2, 2, 2)), 3, "K_{2,2,2}", bad)
    _both_routes(complete_multipartite((3, 3)), 4, "K_{3,3}", bad)
    for n in range(2, 9):
        _both_routes(path(n), 1, f"P_{n}", bad)
    for k in range(2, 6):
        _both_routes(cycle(2 * k), k, f"C_{2 * k}", bad)
        _both_routes(cycle(2 * k + 1), k + 1, f"C_{2 * k + 1}", bad)
    for r, t in ((2, 2), (2, 3), (3, 3)):
        _both_routes(grid(r, t), 2, f"P_{r}□P_{t}", bad)
    return 24, bad


def sr_graph_p4_p3():
    bad = []
    g, h = path(4), path(3)
    sr, _ = strong_resolving_graph(lexicographic_product(g, h))
    want = union(lexicographic_product(complete(2), union(complete(2), complete(1))), complete(2), complete(2))
    if not is_isomorphic(sr, want):
        bad.append("(P4∘P3)_SR not isomorphic to (K2∘(K2∪K1)) ∪ K2 ∪ K2")
    r = formula_no_true_twins(g, h)
    product = lexicographic_product(g, h)
    values = (r.case_id, r.value, smd_via_sr(product), smd_bruteforce(product)[0])
    if values != ("T5.i", 6, 6, 6):
        bad.append(f"case/formula/pipeline/brute = {values}")
    return 2, bad


def sr_graph_fan_p4():
    bad = []
    g = join(K1, union(complete(1), complete(2)))
    h = path(4)
    product = lexicographic_product(g, h)
    sr, _ = strong_resolving_graph(product)
    if not is_isomorphic(sr, union(lexicographic_product(path(3), path(4)), path(4))):
        bad.append("SR graph not isomorphic to (P3∘P4) ∪ P4")
    if not is_isomorphic(strong_resolving_tf_graph(g)[0], path(3)):
        bad.append("G_SRS not isomorphic to P3")
    if not is_isomorphic(star_transform(h), path(4)):
        bad.append("(P4)* not isomorphic to P4")
    r = formula_bounded_degree(g, h)
    values = (r.case_id, r.value, smd_via_sr(product))
    if values != ("T11.ii", 10, 10):
        bad.append(f"case/formula/pipeline = {values}")
    return 4, bad


def _run_check(name, **options):
    records = list(verify.verify_corpus(name, **options))
    return records, [f"{r.check} {r.instance} {r.detail}" for r in records if not r.ok]


def oellermann_exhaustive():
    records, bad = _run_check("oellermann", max_n=7)
    want = sum(len(connected_graphs(n)) for n in range(2, 8))
    if len(records) != want:
        bad.append(f"checked {len(records)} graphs, expected {want}")
    return len(records), bad


def gallai_geller():
    gallai, bad = _run_check("gallai", max_n=7)
    geller, bad2 = _run_check("geller", count=200, max_product=60)
    if len(gallai) < sum(len(all_graphs(n)) for n in range(1, 8)):
        bad.append("Gallai did not cover the corpus")
    if len(geller) < 200:
        bad.append(f"only {len(geller)} Geller pairs")
    return len(gallai) + len(geller), bad + bad2


def claim1_lemmas():
    claim, bad = _run_check("claim1", count=100)
    lemmas, bad2 = _run_check("lemmas", count=100)
    if min(len(claim), len(lemmas)) < 100:
        bad.append("fewer than 100 instances")
    return len(claim) + len(lemmas), bad + bad2


def remark1():
    records, bad = _run_check("remark1", max_n=6)
    parts = {r.check for r in records}
    if parts != {"remark1.i", "remark1.ii", "remark1.iii"}:
        bad.append(f"parts exercised: {sorted(parts)}")
    return len(records), bad


def theorem_sweep():
    records, bad = _run_check("theorems", max_g=5, max_h=4, brute_product=12)
    seen = {key.split(":")[0].split(".")[0] for r in records for key in r.detail["formulas"]}
    if not {"T5", "T7", "T9", "T11", "T13", "C10", "C12"} <= seen:
        bad.append(f"theorems exercised: {sorted(seen)}")
    if not any(r.detail["brute"] is not None for r in records):
        bad.append("no brute-force comparisons ran")
    return len(records), bad


def corollary10():
    records, bad = _run_check("corollary10", sizes=(2, 3, 4), brute_product=12)
    return len(records), bad


def open_case():
    bad = []
    count = 0
    r = route_and_evaluate(join(K1, complete(2)), join(K1, union(K1, K1)), "bruteforce")
    if (r.case_id, r.value, r.bruteforce_value) != ("PIPELINE_ONLY", 5, 5):
        bad.append(f"K3 with K1+N2: {r.to_dict()}")
    for n in range(2, 5):
        for g in connected_graphs(n):
            if not g.has_true_twins():
                continue
            for m in range(3, 12 // n + 1):
                for h in all_graphs(m):
                    if h.max_degree != m - 1 or h.is_complete():
                        continue
                    r = route_and_evaluate(g, h, "bruteforce", brute_limit=12)
                    count += 1
                    if r.case_id != "PIPELINE_ONLY" or r.value != r.bruteforce_value or r.discrepancy:
                        bad.append(f"{verify._pair_name(g, h)}: {r.to_dict()}")
    return count + 1, bad


def graph6_and_cli():
    records, bad = _run_check("graph6", max_n=6)
    argv = [sys.executable, "-m", "lexsmd", "verify", "corpus", "--check", "geller", "--count", "25", "--seed", "7", "--json"]
    runs = [subprocess.run(argv, capture_output=True, check=False) for _ in range(2)]
    if runs[0].returncode != 0 or runs[0].stdout != runs[1].stdout or not runs[0].stdout:
        bad.append("CLI output differs between runs with the same seed")
    table = [sys.executable, "-m", "lexsmd", "families", "--table"]
    if subprocess.run(table, capture_output=True).stdout != subprocess.run(table, capture_output=True).stdout:
        bad.append("families table differs between runs")
    return len(records) + 2, bad


CRITERIA = [
    (1, "family catalogue by pipeline and brute force", family_catalogue),
    (2, "(P4∘P3)_SR shape and dim_s = 6", sr_graph_p4_p3),
    (3, "((K1+(K1∪K2))∘P4)_SR shape and dim_s = 10", sr_graph_fan_p4),
    (4, "Oellermann identity, all connected graphs n <= 7", oellermann_exhaustive),
    (5, "Gallai on the corpus, Geller on 200 random pairs", gallai_geller),
    (6, "product distances and MMD pairs on 100 instances each", claim1_lemmas),
    (7, "G* identities on connected graphs n <= 6", remark1),
    (8, "theorem sweep G <= 5, H <= 4", theorem_sweep),
    (9, "dim_s(K_n∘N_n') = n(n'-1) for n, n' in {2, 3, 4}", corollary10),
    (10, "open case routes to PIPELINE_ONLY and matches brute force", open_case),
    (11, "graph6 round trip n <= 6 and CLI determinism", graph6_and_cli),
]


def run_criterion(number, title, fn):
    checked, bad = fn()
    line = f"{'PASS' if not bad else 'FAIL'} criterion {number}: {title} ({checked} checks, {len(bad)} failures)"
    print(line)
    for b in bad[:10]:
        print(f"    {b}")
    RESULTS.append(line)
    return bad


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_acceptance(number, title, fn):
    bad = run_criterion(number, title, fn)
    assert not bad, "\n".join(bad[:10])


if __name__ == "__main__":
    failed = sum(bool(run_criterion(*c)) for c in CRITERIA)
    sys.exit(1 if failed else 0)
