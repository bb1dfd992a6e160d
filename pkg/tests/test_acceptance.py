"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line
that is repeated in the terminal summary."""

import itertools
import math
import time
from fractions import Fraction

import pytest

from btcodes import catalog
from btcodes.agcode import (
    BlockPermutation, apply_block_perm, certify_block_transitive, eval_code, make_curve,
    min_distance_bruteforce, rational_points, rr_basis, split_points,
)
from btcodes.bounds import entropy_q, gv_tvz_crossing, tvz_ell
from btcodes.cli import run
from btcodes.ff import is_prime, legendre, make_field, prime_power
from btcodes.search import (
    CUBE, SQUARE, build_h_Rn, find_progression_primes, hasse_weil_quadratic, jacobi_product_hpj,
    residue_set, search_certificate, thm66_threshold,
)
from btcodes.towers import params_tame, params_wild


def test_criterion_1_f25_square_residues(record):
    t0 = time.perf_counter()
    F = catalog.f25()
    h = catalog.f25_poly()
    got = set(residue_set(h, 2))
    elapsed = time.perf_counter() - t0
    want = {F.parse(s) for s in ("1", "3", "a+1", "3a+4")}
    ok = got == want and elapsed < 0.1
    record("1", ok, f"S = {{{', '.join(map(str, sorted(got)))}}} in {elapsed:.4f}s")
    assert ok


def test_criterion_2_f64_cube_residues(record):
    t0 = time.perf_counter()
    n = len(residue_set(catalog.f64_poly(), 3))
    elapsed = time.perf_counter() - t0
    ok = n == 14 and elapsed < 0.5
    record("2", ok, f"#S = {n} in {elapsed:.4f}s")
    assert ok


def test_criterion_3_prime_field_values(record):
    checks = []
    for p, R, beta, val, root in [(13, (2, 3, 4, 5), 11, 3, 4), (17, (2, 3, 4, 5), 1, 13, 8),
                                  (19, (2, 3, 4, 6), 12, 4, 2), (23, (2, 3, 4, 5), 7, 3, 7)]:
        F = make_field(p)
        v = build_h_Rn(list(R), field=F)(beta)
        checks.append((p, v == val and F(root) ** 2 == v))
    ok = all(c for _, c in checks)
    record("3", ok, " ".join(f"F{p}:{'ok' if c else 'bad'}" for p, c in checks))
    assert ok


def _direct_symbol(p, j):
    # h(p - j) evaluated as an integer product, independent of the field code
    t = p - j
    val = (t + 1)
    for k in range(2, 6):
        val = val * (t - k) * (t - pow(k, -1, p)) % p
    return legendre(val, p)


@pytest.mark.xfail(strict=True, reason="primes 19 mod 220 give (h(p-2)/p) = -1; see the decisions ledger")
def test_criterion_4_progression_primes(record):
    t0 = time.perf_counter()
    ps = find_progression_primes(220, {1, 9, 11, 19}, 25)
    bad = [x.p for x in ps if _direct_symbol(x.p, 2) != 1]
    closed_ok = all(
        jacobi_product_hpj(p, j) == _direct_symbol(p, j)
        for p in range(37, 2001) if is_prime(p)
        for j in range(2, 8)
    )
    elapsed = time.perf_counter() - t0
    ok = not bad and closed_ok and elapsed < 5
    record("4", ok, f"closed form = direct for 37<=p<=2000, j=2..7: {closed_ok}; "
                    f"{len(ps) - len(bad)}/25 primes give +1, failures {bad[:4]}... (all 19 mod 220); {elapsed:.2f}s")
    assert ok


def test_criterion_4_closed_form_part(record):
    t0 = time.perf_counter()
    closed_ok = all(
        jacobi_product_hpj(p, j) == _direct_symbol(p, j)
        for p in range(37, 2001) if is_prime(p)
        for j in range(2, 8)
    )
    elapsed = time.perf_counter() - t0
    ok = closed_ok and elapsed < 5
    record("4.closed-form", ok, f"{elapsed:.2f}s")
    assert ok


def _m_wild(q, i):
    if i <= 2:
        e = 2 * i - 1
    else:
        e = 3 * i - 3
    if q % 2 == 0:
        e -= math.floor(i / 2)
    return q**e


def _m_tame(i):
    return 2**i if i <= 3 else (2 ** (2 * i - 3) if i <= 5 else 2 ** (3 * i - 8))


def test_criterion_5_tower_tables(record):
    delta = Fraction(1, 4)
    rows_ok = True
    for q in (3, 4, 5):
        for i in range(1, 9):
            row = params_wild(q, i, delta)
            m = _m_wild(q, i)
            rows_ok &= (row.m_i, row.n_i) == (m, (q * q - q) * m)
            rows_ok &= row.d_lower == delta * (q * q - q) * m
            rows_ok &= row.k_lower == ((1 - delta) * (q * q - q) - (q + Fraction(1, q**i))) * m
    for p in (13, 17):
        for i in range(1, 9):
            row = params_tame(p, i, delta)
            m = _m_tame(i)
            rows_ok &= (row.m_i, row.n_i) == (m, 2 * (p - 1) * m)
            rows_ok &= row.d_lower == 2 * delta * (p - 1) * m
            rows_ok &= row.k_lower == (2 * (1 - delta) * (p - 1) - (2 + Fraction(1, 2**i))) * m
    ident = all(1 - Fraction(q + 1 - 1, q * q - q) == 1 - Fraction(1, q - 1) for q in (3, 4, 5))
    ident &= all(1 - (Fraction(6, 2) - 1) / (2 * (p - 1)) == 1 - Fraction(1, p - 1) for p in (13, 17))
    ok = rows_ok and ident
    record("5", ok, f"rows {'exact' if rows_ok else 'differ'}, identities {'hold' if ident else 'fail'}")
    assert ok


def test_criterion_6_thresholds(record):
    table = {u: thm66_threshold(u, SQUARE).q_min for u in (2, 3, 4, 12)}
    table_ok = table == {2: 64, 3: 100, 4: 144, 12: 784}
    # the quadratic read with m = x = 2(u+2)
    quad_ok = all(hasse_weil_quadratic(2 * (u + 2), 2 * (u + 2), u) >= 0 for u in range(2, 21))
    odd_m = [hasse_weil_quadratic(2 * (u + 2), 2 * u + 5, u) for u in range(2, 21)]
    ok = table_ok and quad_ok
    record("6", ok, f"table {table}; quadratic >= 0 at x = m = 2(u+2) for 2<=u<=20: {quad_ok} "
                    f"(with m = 2u+5 it equals {set(odd_m)})")
    assert ok


SQUARE_FIELDS = (25, 27, 29, 49, 81, 121, 125, 127)
CUBE_FIELDS = (25, 31, 49, 64, 121, 127)
LINE_FIELDS = (7, 8, 9, 16, 25, 27)
WORD_BUDGET = 2**18


def _check_curve(curve, failures):
    F, g = curve.field, curve.genus
    pts = rational_points(curve)
    if (pts.n_rational - F.q - 1) ** 2 > 4 * g * g * F.q:
        failures.append(f"Hasse-Weil q={F.q}")
    sp = split_points(curve)
    if curve.n > 1 and [b for b, _ in sp] != residue_set(curve.h, curve.n):
        failures.append(f"Kummer q={F.q}")
    if curve.n > 1:
        for r in range(2 * g - 1, 4 * g + 11):
            if len(rr_basis(curve, r)) != r + 1 - g:
                failures.append(f"RR q={F.q} r={r}")
    betas = [b for b, _ in sp]
    n_c = curve.n * len(betas)
    codes = 0
    for r in range(0, n_c):
        k = len(rr_basis(curve, r))
        if F.q**k > WORD_BUDGET:
            break
        if r % 2 and r > 3:
            continue
        code = eval_code(curve, betas, r)
        d = min_distance_bruteforce(code)
        codes += 1
        if code.dimension < r + 1 - g or d < n_c - r:
            failures.append(f"Goppa q={F.q} r={r}")
        if g == 0 and d != code.length - code.dimension + 1:
            failures.append(f"MDS q={F.q} r={r}")
        if not apply_block_perm(code, BlockPermutation.rotation(code.block_structure)):
            failures.append(f"rotation q={F.q} r={r}")
        if not certify_block_transitive(code).ok:
            failures.append(f"transitive q={F.q} r={r}")
    return codes


def test_criterion_7_constructive_suite(record):
    t0 = time.perf_counter()
    failures: list[str] = []
    curves = codes = 0
    for q in SQUARE_FIELDS:
        F = make_field(*prime_power(q))
        cert = search_certificate(F, range(1, 30), SQUARE, coprime=True)
        codes += _check_curve(make_curve(F, 2, cert.h), failures)
        curves += 1
    for q in CUBE_FIELDS:
        F = make_field(*prime_power(q))
        cert = search_certificate(F, range(1, 30), CUBE, coprime=True)
        codes += _check_curve(make_curve(F, 3, cert.h), failures)
        curves += 1
    for q in LINE_FIELDS:
        codes += _check_curve(make_curve(make_field(*prime_power(q)), 1), failures)
        curves += 1
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    record("7", ok, f"{curves} curves, {codes} codes, {elapsed:.1f}s, failures: {failures[:5]}")
    assert ok


def test_criterion_8_bound_calculus(record):
    tvz_ok = tvz_ell(49) == Fraction(5, 6)
    cross = {q: gv_tvz_crossing(q) for q in (9, 16, 49, 64, 81)}
    cross_ok = all(cross[q] for q in (49, 64, 81)) and not cross[9] and not cross[16]
    ent_ok = all(entropy_q(0, q) == 0 and abs(entropy_q(1 - 1 / q, q) - 1) < 1e-12 for q in (2, 3, 9, 49, 64, 81))
    ok = tvz_ok and cross_ok and ent_ok
    shown = {q: [(round(a, 4), round(b, 4)) for a, b in v] for q, v in cross.items()}
    record("8", ok, f"tvz(49)=5/6 {tvz_ok}; crossings {shown}; entropy endpoints {ent_ok}")
    assert ok


def test_criterion_9_flags(record, capsys):
    import io
    buf = io.StringIO()
    code = run(["repro", "printed-ells"], stdout=buf)
    ells = buf.getvalue()
    buf = io.StringIO()
    code2 = run(["repro", "gs-genus"], stdout=buf)
    genus = buf.getvalue()
    ok = (
        code == 0 and code2 == 0
        and "FLAG\tf25-square ell\tformula=1/8 printed=1/4" in ells
        and "FLAG\tf64-cube ell\tformula=11/48 printed=9/48" in ells
        and "FLAG\todd-step genus" in genus and "standard=" in genus and "printed=" in genus
    )
    record("9", ok, "three discrepancies flagged with both readings, exit 0")
    assert ok
