"""Acceptance criteria 1-8. Each test prints one PASS/FAIL line."""

import itertools
import subprocess
import sys
import time

import pytest

from conftest import atlas
from fallcolor.colorings import Coloring, classify
from fallcolor.graph import cartesian_product, complete, cycle, disjoint_union, empty_graph, path
from fallcolor.report import CHAIN, PARAMETERS, parameter_report
from fallcolor.solvers import Status, achromatic_edge_bound, chromatic_number, fall_spectrum
from fallcolor.theorems import path_complete_coloring, theorem3_verify
from fallcolor.verification import additivity, composition, restriction, Deadline
from oracle import oracle


@pytest.fixture
def verdict(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nCRITERION {number}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail

    return emit


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def test_criterion_1_reference_values(verdict):
    rows, ok = [], True
    for (a, b), chi_want, chi_f_want in (((4, 5), 3, 4), ((5, 5), 3, 5)):
        g = cartesian_product(cycle(a), cycle(b))
        (chi, spec), seconds = timed(lambda: (chromatic_number(g), fall_spectrum(g)))
        good = (
            chi.exact
            and spec.status is Status.EXACT
            and chi.value == chi_want
            and spec.chi_f == chi_f_want
            and seconds <= 60
        )
        ok &= good
        rows.append(f"C{a}xC{b}: chi={chi.value} chi_f={spec.chi_f} ({seconds:.2f}s)")
    verdict(1, ok, "; ".join(rows))


def test_criterion_2_nonexistence(verdict):
    rows, ok = [], True
    for name, g in (("C5", cycle(5)), ("K2+K1", disjoint_union([complete(2), empty_graph(1)]))):
        spec, seconds = timed(fall_spectrum, g)
        good = spec.status is Status.EXACT and spec.values == () and seconds <= 1
        ok &= good
        rows.append(f"Fall({name})={list(spec.values)} ({seconds:.3f}s)")
    verdict(2, ok, "; ".join(rows))


def test_criterion_3_join_composition(verdict):
    composed = composition(seed=0, tuples=200)
    restricted = restriction(max_vertices=10)
    failures = len(composed["failures"]) + len(restricted["failures"])
    ok = composed["tuples"] == 200 and restricted["joins"] > 0 and failures == 0
    verdict(
        3,
        ok,
        f"{composed['tuples']} composed tuples, {restricted['colorings']} fall colorings of "
        f"{restricted['joins']} joins restricted, {failures} failures",
    )


def test_criterion_4_join_additivity(verdict):
    rows, seconds = timed(additivity, Deadline(0))
    bad = [r for r in rows if r["status"] != "PASS"]
    pairs = {tuple(r["parts"]) for r in rows}
    covered = {r["parameter"] for r in rows}
    ok = not bad and len(pairs) == 28 and covered == set(PARAMETERS) and seconds <= 600
    verdict(4, ok, f"{len(rows)} equalities over {len(pairs)} pairs, {len(bad)} not holding ({seconds:.1f}s)")


def test_criterion_5_gap_construction(verdict):
    report, seconds = timed(theorem3_verify, 3)
    gaps = []
    ok = seconds <= 900
    for step in range(1, 8):
        e = report.entry(step)
        ok &= e.status.startswith("VERIFIED") and e.gap >= 4
        gaps.append(f"{step}:{e.gap}")
    s2, s3, s5, s7 = (report.entry(i) for i in (2, 3, 5, 7))
    ok &= (s2.param_low.value, s2.param_high.value) == (2, 6)
    ok &= (s3.param_low.value, s3.param_high.value) == (2, 6)
    ok &= s5.param_high.value == 6 and s5.param_low.upper <= 2
    ok &= (s7.param_low.value, s7.param_high.value) == (2, 6)
    # Step 8: edge bound refutes the vertices reading, a complete 7-coloring supports the edges reading
    ok &= achromatic_edge_bound(path(21)) == 6 and report.entry(8, "vertices").status == "REFUTED"
    witness = path_complete_coloring(22, 7)
    ok &= witness is not None and classify(path(22), witness).complete and witness.k == 7
    ok &= report.entry(8, "edges").status.startswith("VERIFIED")
    verdict(
        5,
        ok,
        f"gaps {' '.join(gaps)}; psi(P21)<=6 refutes vertex reading; complete 7-coloring of P22 valid ({seconds:.2f}s)",
    )


def test_criterion_6_oracle_equivalence(verdict):
    graphs = atlas(6, connected_only=True)
    mismatches = []
    for g in graphs:
        expected = oracle(g.adj)
        rep = parameter_report(g)
        for name in PARAMETERS:
            if rep.status[name] is not Status.EXACT or rep.values[name] != expected.get(name):
                mismatches.append((g.name, name))
    ok = len(graphs) >= 50 and not mismatches
    verdict(6, ok, f"{len(graphs)} connected graphs x {len(PARAMETERS)} parameters, {len(mismatches)} mismatches")


def test_criterion_7_invariants(verdict):
    colorings = violations = 0
    for g in atlas(5):
        for k in range(1, g.n + 1):
            for colors in itertools.product(range(1, k + 1), repeat=g.n):
                r = classify(g, Coloring(k, colors))
                colorings += 1
                chain = (
                    (not r.fall or r.b_coloring)
                    and (not r.b_coloring or r.partial_grundy)
                    and (not r.partial_grundy or r.complete)
                    and (not r.fall or r.grundy)
                    and (not r.grundy or r.partial_grundy)
                )
                violations += not chain
    solved = 0
    extra = [cycle(n) for n in range(3, 10)] + [path(n) for n in range(1, 10)]
    for g in atlas(6) + extra:
        rep = parameter_report(g)
        solved += 1
        v = rep.values
        for low, high in CHAIN:
            if v[low] is not None and v[high] is not None and v[low] > v[high]:
                violations += 1
        if not all(v["chi"] <= k <= g.min_degree + 1 for k in v["fall_spectrum"]):
            violations += 1
    verdict(
        7, violations == 0, f"{colorings} colorings classified, {solved} graphs solved, {violations} violations"
    )


def test_criterion_8_determinism(verdict, tmp_path):
    outputs = []
    for name in ("first.json", "second.json"):
        target = tmp_path / name
        subprocess.run(
            [sys.executable, "-m", "fallcolor", "verify-paper", "--out", str(target)], check=True
        )
        outputs.append(target.read_bytes())
    same = outputs[0] == outputs[1]
    verdict(8, same, f"two verify-paper runs, {len(outputs[0])} bytes each, identical={same}")
