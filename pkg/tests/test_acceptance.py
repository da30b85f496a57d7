"""Acceptance suite: one test per headline guarantee.  Each criterion
prints a single PASS/FAIL line with its runtime; the lines are echoed
after the run summary via the conftest terminal-summary hook."""

import random
import time
from math import comb

from pureres.bott import bott_cohomology, det_bott_scan, line_bundle_oracle, pushforward_profile, scan_ranks
from pureres.exactness import verify_exactness
from pureres.partitions import conjugate, dim_gl, dim_super, pieri_expand, trim
from pureres.resolutions import (
    alpha,
    base_weight,
    betti_F,
    betti_F_super,
    betti_H,
    betti_H_super,
    check_herzog_kuhl,
    degrees,
    duality_check,
    gamma,
    herzog_kuhl_primitive,
    hilbert_M_euler,
    hilbert_M_strips,
    module_profile,
    multiple_of_primitive,
    super_degree_data,
)

from conftest import ACCEPTANCE_LINES
from oracles import random_degrees


def report(label, ok, t0, budget, note=""):
    dt = time.perf_counter() - t0
    line = f"criterion {label}: {'PASS' if ok and dt < budget else 'FAIL'} ({dt:.2f}s)"
    if note:
        line += f"  {note}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, label
    assert dt < budget, f"{label} exceeded {budget}s budget ({dt:.2f}s)"


def test_01_primitive_vectors():
    t0 = time.perf_counter()
    ok = (
        herzog_kuhl_primitive((0, 3, 4, 7)) == (1, 7, 7, 1)
        and herzog_kuhl_primitive((0, 4, 9, 13)) == (5, 13, 13, 5)
        and herzog_kuhl_primitive((0, 1, 4, 6)) == (5, 8, 5, 2)
    )
    report("01 primitive vectors", ok, t0, 1.0)


def test_02_f_multiples():
    t0 = time.perf_counter()
    ok = (
        multiple_of_primitive(betti_F((0, 3, 4, 7))) == 6
        and multiple_of_primitive(betti_F((0, 4, 9, 13))) == 18
    )
    report("02 F-multiples 6 and 18", ok, t0, 1.0)


def test_03_h_multiples():
    t0 = time.perf_counter()
    ok = (
        multiple_of_primitive(betti_H((0, 3, 4, 7))) == 50
        and multiple_of_primitive(betti_H((0, 4, 9, 13))) == 9075
    )
    report("03 H-multiples 50 and 9075", ok, t0, 5.0)


def test_04_example_discrepancy_audit():
    # Both constructions for d = (0, 1, 4, 6) must be internally consistent
    # (ranks on the Herzog-Kuhl ray, integral multiple, HK equations hold).
    # The published claim of multiple 5 for this ray disagrees with the
    # dimension oracle; a flagged discrepancy is the passing outcome here.
    t0 = time.perf_counter()
    d = (0, 1, 4, 6)
    tf, th = betti_F(d), betti_H(d)
    mf, mh = multiple_of_primitive(tf), multiple_of_primitive(th)
    consistent = (
        check_herzog_kuhl(tf, len(d) - 1)
        and check_herzog_kuhl(th, len(d) - 1)
        and mf >= 1
        and mh >= 1
    )
    claimed = 5
    note = (
        f"computed multiples F={mf}, H={mh} vs published claim {claimed}: "
        + ("agreement" if mf == claimed else "DISCREPANCY flagged (tables internally consistent)")
    )
    report("04 example audit d=(0,1,4,6)", consistent, t0, 5.0, note=note)


def test_05_weight_goldens():
    t0 = time.perf_counter()
    d1 = degrees((0, 2, 3, 2, 1))
    d2 = degrees((0, 2, 3, 1, 2))
    ok = [alpha(d1, i) for i in range(5)] == [
        (3, 1, 0, 0),
        (5, 1, 0, 0),
        (5, 4, 0, 0),
        (5, 4, 2, 0),
        (5, 4, 2, 1),
    ] and [alpha(d2, i) for i in range(5)] == [
        (3, 1, 1, 0),
        (5, 1, 1, 0),
        (5, 4, 1, 0),
        (5, 4, 2, 0),
        (5, 4, 2, 2),
    ]
    report("05 weight goldens", ok, t0, 1.0)


def test_06_property_suite():
    t0 = time.perf_counter()
    rng = random.Random(600)
    ok = True
    for _ in range(100):
        d = random_degrees(rng, 6, 40)
        m = len(d) - 1
        tf = betti_F(d)
        th = betti_H(d)
        # purity: strictly increasing twists, one generator degree per term
        ok &= tf.twists == d and all(
            th.twists[i] < th.twists[i + 1] for i in range(m)
        )
        # Herzog-Kuhl equations at the stated codimensions
        ok &= check_herzog_kuhl(tf, m) and check_herzog_kuhl(th, th.params["s"])
        # both tables are integral multiples of the primitive vector
        ok &= multiple_of_primitive(tf) >= 1 and multiple_of_primitive(th) >= 1
        # gamma is the conjugate of the d_0-normalized alpha
        ok &= all(
            gamma(d, i) == conjugate(tuple(a - d[0] for a in alpha(d, i)))
            for i in range(m + 1)
        )
        # Pieri dimension-sum identity on the base weight
        lam = trim(base_weight(d))
        e = rng.randint(0, 5)
        ok &= sum(dim_gl(mu, m) for mu in pieri_expand(lam, e, m)) == dim_gl(
            lam, m
        ) * comb(m + e - 1, e)
        if not ok:
            break
    report("06 property suite (100 random d)", ok, t0, 30.0)


def test_07_hilbert_consistency():
    t0 = time.perf_counter()
    rng = random.Random(700)
    ok = True
    for _ in range(40):
        d = random_degrees(rng, 4, 14)
        top = alpha(d, 1)[0]
        for k in range(d[0], d[-1] + 6):
            he, hs = hilbert_M_euler(d, k), hilbert_M_strips(d, k)
            ok &= he == hs
            if k >= top:
                ok &= he == 0
        p = module_profile(d)
        ok &= p.socle_dim == betti_F(d).ranks[-1]
        if not ok:
            break
    report("07 Hilbert consistency", ok, t0, 30.0)


def test_08_duality():
    t0 = time.perf_counter()
    ok = duality_check(degrees((0, 2, 3, 1, 3, 2))).passed
    rng = random.Random(800)
    count = 0
    while count < 30:
        m = rng.randint(1, 5)
        half = [rng.randint(1, 4) for _ in range(m // 2)]
        mid = [rng.randint(1, 4)] if m % 2 else []
        e = (rng.randint(0, 3),) + tuple(half + mid + half[::-1])
        d = degrees(e)
        ok &= duality_check(d).passed
        count += 1
        if not ok:
            break
    report("08 duality (palindromic e)", ok, t0, 30.0)


def test_09_bott():
    t0 = time.perf_counter()
    ok = True
    # exhaustive m = 2 agreement with the line-bundle oracle
    for a in range(-10, 11):
        o = bott_cohomology((0,), -a, 2)
        h0, h1 = line_bundle_oracle(a)
        if o.vanishes:
            ok &= (h0, h1) == (0, 0)
        else:
            got = dim_gl(o.weight, 2)
            ok &= (got, 0) == (h0, h1) if o.h_degree == 0 else (0, got) == (h0, h1)
    # free / two-term pushforward branches on 50 random weights
    rng = random.Random(900)
    for _ in range(50):
        m = rng.randint(2, 5)
        lam = tuple(
            sorted((rng.randint(0, 4) for _ in range(m - 1)), reverse=True)
        )
        p = pushforward_profile(lam, m)
        ok &= (p.kind == "free") == bott_cohomology(lam, 1, m).vanishes
    # the determinantal scan regenerates the H-table ranks
    for d in ((0, 3, 4, 7), (0, 1, 2, 3), (0, 2, 3, 5)):
        s = det_bott_scan(d)
        ok &= scan_ranks(s) == dict(enumerate(betti_H(d).ranks))
    report("09 Bott algorithm", ok, t0, 30.0)


def test_10_super():
    t0 = time.perf_counter()
    ok = True
    # graded symmetric and exterior squares
    for m in range(4):
        for n in range(4):
            ok &= dim_super((2,), m, n) == comb(m + 1, 2) + m * n + comb(n, 2)
            ok &= dim_super((1, 1), m, n) == comb(m, 2) + m * n + comb(n + 1, 2)
    # even specialization reproduces the classical finite tables
    d = (0, 2, 3, 5)
    lam = trim(base_weight(d))
    ts = betti_F_super(lam, 2, 3, 0, N=8)
    cl = betti_F(d)
    ok &= all(
        ts.rows[i].rank == cl.rows[i].rank and ts.rows[i].twist == cl.rows[i].twist
        for i in range(4)
    ) and all(r.rank == 0 for r in ts.rows[4:])
    th = betti_H_super(lam, 2, (3, 0), (2, 0), N=8)
    ok &= th.kind == "H_super"
    # twists become consecutive (linear) after the nonzero parts run out
    rng = random.Random(1000)
    for _ in range(20):
        lam = trim(
            sorted((rng.randint(0, 4) for _ in range(rng.randint(0, 4))), reverse=True)
        )
        e1 = rng.randint(1, 4)
        sd = super_degree_data(lam, e1)
        s = len(lam) + 1
        ok &= all(sd.e(i) == 1 for i in range(s + 1, s + 6))
        # per-degree Euler nonnegativity: the complex resolves a module
        m, n = rng.randint(1, 2), rng.randint(1, 2)
        t = betti_F_super(lam, e1, m, n, N=14)
        for k in range(11):
            total = sum(
                (-1) ** row.i * row.rank * dim_super((k - row.twist,), m, n)
                for row in t.rows
                if k >= row.twist
            )
            ok &= total >= 0
        if not ok:
            break
    report("10 super tables", ok, t0, 30.0)


def test_11_exactness_certificates():
    t0 = time.perf_counter()
    corpus = ((0, 1, 2, 3), (0, 2), (0, 1, 3), (0, 2, 3), (0, 2, 3, 4), (0, 1, 2, 4))
    ok = True
    for d in corpus:
        cert = verify_exactness(d, k_max=d[-1] + 2)
        ok &= cert.passed
        if not ok:
            break
    report("11 exactness certificates (6 instances)", ok, t0, 300.0)
