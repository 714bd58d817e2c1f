"""Acceptance criteria 1-10, one test each.

Every test prints a PASS/FAIL line and records it for the summary that
pytest prints at the end of the run.  Time limits are asserted, not just
reported.
"""
import contextlib
import io
import itertools
import json
import math
import random
import time
from fractions import Fraction as F

import pytest

from lsf import braid, cli, homology, seifert, twistalex
from lsf.laurent import KnotPoly1, breadth

from conftest import ACCEPTANCE, L7A5, TREFOIL


@contextlib.contextmanager
def criterion(number, note, limit=None):
    start = time.perf_counter()
    passed = False
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
        passed = True
    finally:
        elapsed = time.perf_counter() - start
        ACCEPTANCE.append((number, passed, elapsed, note))
        print(f"criterion {number}: {'PASS' if passed else 'FAIL'} ({elapsed:.2f}s) {note}")


def test_criterion_01_l7a5_pipeline():
    with criterion(1, "L7a5 Torres, Case3 slope 2, bound n+1, finite window", limit=1.0):
        report = twistalex.torres_verify(L7A5, 1)
        assert report.t1 and report.t2 and report.t3 and report.parity
        assert breadth(L7A5, "y") == 2
        case = twistalex.classify_family(L7A5, 1)
        assert case.tag is twistalex.CaseTag.Case3_GenusUnbounded and case.slope == 2
        assert all(twistalex.genus_lower_bound(L7A5, 1, n) == n + 1 for n in range(1, 101))
        window = twistalex.lspace_window(L7A5, 1, 0, (-50, 50))
        assert not window.unbounded and len(window.members) < 101


def test_criterion_02_halves_family():
    with criterion(2, "S2(-1;1/2,1/2,r) family: members LSpace, limit S2(-1;1/2,1/2) NotLSpace", limit=1.0):
        fam = seifert.SeifertFamily(-1, (F(1, 2), F(1, 2)), 1, 0, 0, 1)
        report = seifert.classify_family(fam, (-1000, 1000))
        verdicts = dict(report.members)
        assert all(v.verdict == seifert.LSPACE for n, v in verdicts.items() if n != 0)
        assert verdicts[0].verdict == seifert.LSPACE and verdicts[0].certificate == "degenerate"
        assert str(report.limit) == "S2(-1; 1/2, 1/2)"
        assert report.limit_verdict.verdict == seifert.NOT_LSPACE


def _random_form(rng):
    ratios = []
    for _ in range(rng.randint(3, 6)):
        d = rng.randint(2, 50)
        ratios.append(F(rng.randint(1, d - 1), d))
    return seifert.normalize(rng.randint(-7, 2), ratios)


def test_criterion_03_certificates_and_duality():
    with criterion(3, "Seifert certificates and duality on 10^4 random forms", limit=10.0):
        def verdict(b, *rs):
            return seifert.is_lspace(seifert.normalize(b, [F(r) for r in rs]))
        assert verdict(-2, "1/2", "2/3", "4/5").verdict == seifert.LSPACE
        v = verdict(-1, "1/2", "1/3", "1/7")
        assert v.verdict == seifert.NOT_LSPACE and (v.witness.a, v.witness.k) == (2, 5)
        v = verdict(-2, "1/2", "1/2", "1/2", "1/2")
        assert v.verdict == seifert.NOT_LSPACE and v.certificate == "branch(1)"
        rng = random.Random(1)
        for _ in range(10_000):
            f = _random_form(rng)
            assert seifert.is_lspace(f).verdict == seifert.is_lspace(f.dual()).verdict


def _random_family(rng):
    while True:
        t, u, v, w = (rng.randint(-10, 10) for _ in range(4))
        if abs(t * w - u * v) == 1:
            break
    while True:
        base = []
        for _ in range(rng.randint(2, 5)):
            d = rng.randint(2, 20)
            base.append(F(rng.randint(1, d - 1), d))
        fam = seifert.SeifertFamily(rng.randint(-6, 3), tuple(base), t, u, v, w)
        if fam.total_fibers >= 4:
            return fam


def test_criterion_04_family_dichotomy():
    with criterion(4, "10^3 random families: tails settle, tail-LSpace iff limit LSpace", limit=120.0):
        rng = random.Random(4)
        for _ in range(1000):
            fam = _random_family(rng)
            report = seifert.classify_family(fam, (-1000, 1000))
            assert all(t.stable for t in report.tails), str(fam)
            tail_lspace = any(t.eventual == seifert.LSPACE for t in report.tails)
            assert tail_lspace == report.limit_verdict.is_lspace, str(fam)
            assert report.equivalence is True


def test_criterion_05_census():
    with criterion(5, "positive braid census for genus 0, 1, 2", limit=300.0):
        (unknot,) = braid.enumerate_genus(0)
        assert unknot.alexander == KnotPoly1.constant(1)
        (trefoil,) = braid.enumerate_genus(1)
        assert trefoil.alexander == TREFOIL
        genus2 = braid.enumerate_genus(2)
        assert braid.torus_alexander(5, 2) in {e.alexander for e in genus2}
        for g, entries in ((0, [unknot]), (1, [trefoil]), (2, genus2)):
            assert all(e.word.strands <= 2 * g + 1 and e.genus == g for e in entries)


def test_criterion_06_torus_grid():
    with criterion(6, "torus knot genus and Alexander polynomial, 2 <= q < |p| <= 8"):
        count = 0
        for p in itertools.chain(range(-8, -2), range(3, 9)):
            for q in range(2, abs(p)):
                if math.gcd(p, q) != 1:
                    continue
                w = braid.torus_braid(p, q)
                assert braid.genus_positive(w) == (abs(p) - 1) * (q - 1) // 2
                assert braid.burau_alexander(w) == braid.torus_alexander(abs(p), q)
                count += 1
        assert count > 0


def test_criterion_07_twisted_torus_gates():
    with criterion(7, "twisted torus braids: sign contract, knot closure, n=0 oracle"):
        for p, q in ((3, 2), (5, 2), (2, 3), (5, 3)):
            for n in range(-3, 4):
                for sign in (1, -1):
                    if sign < 0 and n > 2:
                        continue
                    w = braid.twisted_torus_braid(sign * p, q, n)
                    assert braid.is_knot(w)
                    if sign > 0:
                        assert w.is_positive if n >= 0 else w.is_negative
                    elif n <= 0:
                        assert w.is_negative
                    else:
                        assert w.is_positive or w.is_negative or not w.letters
                    if n == 0:
                        assert braid.burau_alexander(w) == braid.torus_alexander(p, q)


def _continuant(chain):
    # determinant of the tridiagonal chain matrix, by the three-term recurrence
    prev, cur = 1, chain[0]
    for a in chain[1:]:
        prev, cur = cur, a * cur - prev
    return cur


def test_criterion_08_homology_laws():
    with criterion(8, "lk^2 law, determinant-difference law, chain determinant law"):
        for w in range(1, 11):
            for m in range(-10, 11):
                s = homology.SurgeryDescription.of([[0, w], [w, 0]], [m, 0])
                assert homology.surgery_h1(s) == w * w
        rng = random.Random(8)
        for _ in range(1000):
            while True:
                p, q = rng.randint(2, 20), rng.randint(-20, 20)
                if math.gcd(p, q) == 1:
                    break
            a11, a12, a21 = (rng.randint(-20, 20) for _ in range(3))
            step = abs(p * (-a12 * a21 * p + a11 * q))
            assert step != 1
            dets = [homology.pseudoseiferter_det(a11, a12, a21, p, q, n) for n in range(1, 101)]
            off = sum(1 for a, b in zip(dets, dets[1:]) if abs(b - a) != step)
            assert off <= 1
        for p in range(-200, 201):
            for q in range(1, 201):
                r = F(p, q)
                chain = homology.rational_chain(r)
                assert abs(_continuant(chain)) == abs(r.numerator)
                if q <= 12 and abs(p) <= 30:
                    assert abs(homology.determinant(homology.chain_matrix(chain))) == abs(r.numerator)


def _brute_candidates(g):
    found = 0
    for v in itertools.product((-1, 0, 1), repeat=2 * g + 1):
        if v[0] == 0 or v != v[::-1] or sum(v) != 1:
            continue
        nz = [c for c in v if c]
        if nz[0] == 1 and all(a != b for a, b in zip(nz, nz[1:])):
            found += 1
    return found


def test_criterion_09_candidates():
    with criterion(9, "candidate counts 1, 1, 2 with brute force; trefoil staircase"):
        for g, count in ((0, 1), (1, 1), (2, 2)):
            assert len(twistalex.enumerate_candidates(g)) == count == _brute_candidates(g)
        assert twistalex.staircase(TREFOIL).generators == ((1, 0), (0, -1), (-1, -2))


def _cli_output(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(list(argv))
    assert code == 0
    return buf.getvalue()


def test_criterion_10_determinism(tmp_path):
    with criterion(10, "census and window sweeps identical for --jobs 1 and 8"):
        poly = tmp_path / "l7a5.json"
        poly.write_text(json.dumps(cli.poly2_json(L7A5)), encoding="utf-8")
        runs = (
            ["braid", "census", "--genus", "2"],
            ["alex", "window", "--poly2", f"@{poly}", "--omega", "1", "--r0", "0", "--window", "-50", "50"],
            ["seifert", "family", "--family", "-1; 1/2,1/3,1/5; 1,1,1,2", "--window", "-200", "200"],
        )
        for argv in runs:
            serial = _cli_output(*argv, "--jobs", "1")
            assert serial and serial == _cli_output(*argv, "--jobs", "8")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
