"""Acceptance gate.  Each criterion prints one PASS/FAIL line."""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from gwdeg import linalg
from gwdeg.degree import (
    PointSpec,
    direct_pipeline,
    global_degree,
    jacobian_transfer,
    trace_pipeline,
    verify_trace_theorem,
)
from gwdeg.errors import DegenerateForm
from gwdeg.fields import FieldDescriptor
from gwdeg.gw import GramMatrix, GWClass, Verdict, diagonalize, gw_equal, hilbert_symbol, relevant_places
from gwdeg.parser import parse_polynomial
from gwdeg.transfer import TransferContext, trace_form

from conftest import FIXTURES, all_fixture_names, load_fixture
from oracles import hilbert_oracle, trace_matrix_form, univariate_scheja_storch

QQ = FieldDescriptor.rationals()

# (residue degree, multiplicity of the canonical point) for every fixture point
EXPECTED = {
    ("biquadratic.yaml", "c"): (4, 1),
    ("cube_root_two.yaml", "cbrt2"): (3, 1),
    ("double_zero.yaml", "origin"): (1, 2),
    ("f3_cubic.yaml", "root"): (3, 1),
    ("f3_plane.yaml", "p"): (2, 1),
    ("f3_quadratic.yaml", "root"): (2, 1),
    ("f5_quadratic.yaml", "root"): (2, 1),
    ("f7_quadratic.yaml", "root"): (2, 1),
    ("f5_quartic.yaml", "root"): (4, 1),
    ("f7_double.yaml", "root"): (2, 2),
    ("f7_double.yaml", "one"): (1, 1),
    ("gaussian.yaml", "i"): (2, 1),
    ("gaussian_squared.yaml", "i"): (2, 2),
    ("golden_pair.yaml", "g"): (2, 1),
    ("golden_pair.yaml", "h"): (2, 1),
    ("mixed_univariate.yaml", "one"): (1, 2),
    ("mixed_univariate.yaml", "i"): (2, 1),
    ("quartic_two.yaml", "root"): (4, 1),
    ("rational_plane.yaml", "a"): (1, 1),
    ("rational_plane.yaml", "b"): (1, 1),
    ("rational_plane.yaml", "c"): (2, 1),
    ("sextic_point.yaml", "z"): (6, 1),
    ("twin_gaussian.yaml", "diag"): (2, 1),
    ("twin_gaussian.yaml", "antidiag"): (2, 1),
}


def report(capsys, name, ok, detail=""):
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
    assert ok, detail


@pytest.fixture(scope="module")
def corpus():
    """Run both pipelines on every fixture point once."""
    start = time.perf_counter()
    runs = []
    for name in all_fixture_names():
        prob = load_fixture(name)
        for p in prob.points:
            runs.append((name, prob, p, verify_trace_theorem(prob.polynomials, p, prob.seed)))
    return runs, time.perf_counter() - start


def test_theorem_corpus(capsys, corpus):
    runs, seconds = corpus
    names = {name for name, *_ in runs}
    required = {
        "gaussian.yaml", "cube_root_two.yaml", "quartic_two.yaml", "sextic_point.yaml",
        "golden_pair.yaml", "f3_quadratic.yaml", "f5_quadratic.yaml", "f7_quadratic.yaml",
        "mixed_univariate.yaml", "rational_plane.yaml",
    }
    bad = [(n, p.name, r.verdict, {k: str(v) for k, v in r.errors.items()})
           for n, _, p, r in runs if r.verdict is not Verdict.EQUAL]
    rational = [1 for _, prob, p, _ in runs if p.residue_field == prob.field]
    ok = len(names) >= 12 and required <= names and not bad and seconds < 60 and rational
    report(
        capsys,
        "Trace-theorem corpus",
        ok,
        f"{len(names)} fixtures, {len(runs)} points, {len(rational)} rational, "
        f"{seconds:.2f}s, non-Equal: {bad}",
    )


def _fr(G):
    return [[Fraction(x.coords[0]) for x in row] for row in G.entries]


def test_hand_oracles(capsys):
    failures = []
    # direct Gram of x^2 at 0
    f = [parse_polynomial("x^2", ("x",), QQ)]
    got = _fr(direct_pipeline(f, PointSpec(QQ, [0])).gram)
    if not (got == univariate_scheja_storch([0, 0, 1]) == [[0, 1], [1, 0]]):
        failures.append(("x^2", got))
    # direct Gram of x^3 - 2 at its cubic point
    Ka = QQ.extend("a", [-2, 0, 0, 1])
    f = [parse_polynomial("x^3 - 2", ("x",), QQ)]
    got = _fr(direct_pipeline(f, PointSpec(Ka, [Ka.gen])).gram)
    want = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    if not (got == univariate_scheja_storch([-2, 0, 0, 1]) == want):
        failures.append(("x^3 - 2", got))
    # trace Gram of <2i>
    Ki = QQ.extend("i", [1, 0, 1])
    got = _fr(trace_form(GramMatrix(Ki, [[2 * Ki.gen]]), TransferContext(QQ, Ki)))
    if not (got == trace_matrix_form([0, 2], [1, 0, 1]) == [[0, -4], [-4, 0]]):
        failures.append(("<2i>", got))
    # trace Gram of <3 a^2>
    a = Ka.gen
    got = _fr(trace_form(GramMatrix(Ka, [[3 * a * a]]), TransferContext(QQ, Ka)))
    want = [[0, 18, 0], [18, 0, 0], [0, 0, 36]]
    if not (got == trace_matrix_form([0, 0, 3], [-2, 0, 0, 1]) == want):
        failures.append(("<3a^2>", got))
    report(capsys, "Hand-oracle Gram equalities", not failures, str(failures) if failures else "4/4 exact")


def test_rank_law(capsys, corpus):
    runs, _ = corpus
    bad = []
    for name, prob, p, r in runs:
        d, mult = EXPECTED[(name, p.name)]
        ranks = (
            r.lhs.gw_class.rank,
            r.rhs.gw_class.rank,
            r.lhs.local_dim,
            p.degree_over(prob.field) * r.rhs.inner.local_dim,
            d * mult,
        )
        if len(set(ranks)) != 1:
            bad.append((name, p.name, ranks))
    missing = set(EXPECTED) - {(n, p.name) for n, _, p, _ in runs}
    report(capsys, "Rank law", not bad and not missing, f"{len(runs)} points; bad={bad} missing={missing}")


def test_jacobian_law(capsys, corpus):
    runs, _ = corpus
    checked, bad = 0, []
    for name, prob, p, r in runs:
        if r.rhs.inner.local_dim != 1:
            continue
        checked += 1
        v = gw_equal(jacobian_transfer(prob.polynomials, p), r.lhs.gw_class)
        if v is not Verdict.EQUAL:
            bad.append((name, p.name, v))
    report(capsys, "Simple-zero Jacobian law", checked > 0 and not bad, f"{checked} simple zeros; bad={bad}")


def test_additivity(capsys, corpus):
    runs, _ = corpus
    by_fixture = {}
    for name, prob, p, r in runs:
        by_fixture.setdefault(name, (prob, []))[1].append(r.lhs.gw_class)
    checked, bad = 0, []
    for name, (prob, classes) in sorted(by_fixture.items()):
        if not prob.complete:
            continue
        checked += 1
        total = GWClass(prob.field, [])
        for c in classes:
            total = total + c
        v = gw_equal(global_degree(prob.polynomials), total)
        if v is not Verdict.EQUAL:
            bad.append((name, v))
    report(capsys, "Additivity", checked >= 4 and not bad, f"{checked} complete fixtures; bad={bad}")


def _random_diagonalizations(count, rng):
    fields = [QQ, FieldDescriptor.prime(3), FieldDescriptor.prime(5), FieldDescriptor.prime(7),
              QQ.extend("i", [1, 0, 1])]
    done, failures = 0, []
    while done < count:
        F = rng.choice(fields)
        n = rng.randint(1, 6)
        zero_diag = rng.random() < 0.3
        G = [[F.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                v = 0 if (i == j and zero_diag) else rng.randint(-6, 6)
                if F.is_extension:
                    v = F.from_coords([v, rng.randint(-2, 2)])
                G[i][j] = G[j][i] = F(v)
        if linalg.det(G).is_zero():
            try:
                diagonalize(G)
                failures.append(("degenerate accepted", G))
            except DegenerateForm:
                pass
            continue
        d = diagonalize(G)
        P = d.transform
        # P^T G P computed entrywise from scratch
        for i in range(n):
            for j in range(n):
                acc = F.zero
                for a in range(n):
                    for b in range(n):
                        acc = acc + P[a][i] * G[a][b] * P[b][j]
                if acc != (d.diagonal[i] if i == j else F.zero):
                    failures.append((G, i, j))
        done += 1
    return failures


def test_gw_self_checks(capsys):
    rng = random.Random(2024)
    diag_fail = _random_diagonalizations(500, rng)
    hilbert_fail = []
    for place in ["inf", 2, 3, 5, 7]:
        for a in range(-20, 21):
            for b in range(-20, 21):
                if a and b and hilbert_symbol(a, b, place) != hilbert_oracle(a, b, place):
                    hilbert_fail.append((a, b, place))
    product_fail = []
    for _ in range(100):
        a = Fraction(rng.choice([-1, 1]) * rng.randint(1, 10 ** 4), rng.randint(1, 300))
        b = Fraction(rng.choice([-1, 1]) * rng.randint(1, 10 ** 4), rng.randint(1, 300))
        prod = 1
        for v in relevant_places([a, b]):
            prod *= hilbert_symbol(a, b, v)
        if prod != 1:
            product_fail.append((a, b))
    ok = not diag_fail and not hilbert_fail and not product_fail
    report(
        capsys,
        "GW layer self-checks",
        ok,
        f"500 diagonalizations ({len(diag_fail)} bad), 8000 Hilbert symbols "
        f"({len(hilbert_fail)} bad), 100 product formulas ({len(product_fail)} bad)",
    )


def _cli_json(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "gwdeg", *argv, "--json"], capture_output=True
    )
    return proc.returncode, proc.stdout


def test_determinism(capsys):
    mismatched = []
    runs = 0
    for name in all_fixture_names():
        path = str(FIXTURES / name)
        for argv in (("verify", path, "--seed", "5"), ("global", path)):
            first, second = _cli_json(*argv), _cli_json(*argv)
            runs += 1
            if first != second or first[0] != 0:
                mismatched.append(argv)
            json.loads(first[1])
    report(capsys, "Determinism", not mismatched, f"{runs} command pairs byte-identical; bad={mismatched}")
