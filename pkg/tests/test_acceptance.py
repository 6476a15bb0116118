"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get a PASS/FAIL line per
criterion in the terminal summary.
"""
import io
import random
from fractions import Fraction

from golden import CBRT2_ROWS, CBRT2_WORDS, SQRT2_ROWS, SQRT2_WORDS, as_scaled_int, places
from rootcount.approximation import INFINITY, approximants, decimal
from rootcount.counts import identity, incidence, power_counts
from rootcount.serialize import read_csv, read_jsonl, write_csv, write_jsonl
from rootcount.spectral import (
    dominant_eigenvalue_root_family,
    integer_root_floor,
    is_primitive,
    perron_residual,
    perron_vector_root_family,
    power_iteration,
)
from rootcount.words import (
    RuleSet,
    count,
    format_rules,
    format_word,
    iterate_words,
    make_root_rules,
    parse_rules,
)


def within_one_ulp(r, printed):
    if printed == "infinity":
        return r is INFINITY
    rendered = decimal(r, places(printed))
    return abs(as_scaled_int(rendered) - as_scaled_int(printed)) <= 1


def test_c01_sqrt2_count_table():
    rows = list(approximants(2, 2, max_iters=16))[1:]
    assert [r.counts for r in rows] == [g[:2] for g in SQRT2_ROWS]
    assert rows[-1].counts == (665857, 470832)
    for row, golden in zip(rows, SQRT2_ROWS):
        assert within_one_ulp(row.ratios[0], golden[2]), (row.iter, golden[2])


def test_c02_cbrt2_count_table():
    rows = list(approximants(3, 2, max_iters=15))[1:]
    assert [r.counts for r in rows] == [g[:3] for g in CBRT2_ROWS]
    assert rows[-1].counts == (68283, 54189, 43011)
    for row, golden in zip(rows, CBRT2_ROWS):
        for j in range(2):
            assert within_one_ulp(row.ratios[j], golden[3 + j]), (row.iter, j)


def test_c03_word_goldens():
    for m, golden in [(2, SQRT2_WORDS), (3, CBRT2_WORDS)]:
        words, _ = iterate_words(make_root_rules(m, 2), (0,), 4)
        assert format_word(words[4], m) == golden[4]
    assert SQRT2_WORDS[4] == "01100100010110001010110001100"
    assert CBRT2_WORDS[4] == "011212200122002000101"


def test_c04_oracle_equivalence_random_rules():
    rng = random.Random(20260417)
    depths_checked = 0
    for _ in range(100):
        m = rng.randint(1, 5)
        rules = RuleSet(
            tuple(tuple(rng.randrange(m) for _ in range(rng.randint(1, 6))) for _ in range(m))
        )
        seed = tuple(rng.randrange(m) for _ in range(rng.randint(1, 8)))
        words, _ = iterate_words(rules, seed, depth=60, length_cap=10**5)
        mat = incidence(rules)
        v0 = count(seed, m)
        for d, word in enumerate(words):
            assert count(word, m) == power_counts(mat, v0, d)
            depths_checked += 1
    assert depths_checked > 500


def test_c05_eigenvalue_exactness():
    for m in range(2, 7):
        for N in range(1, 21):
            x = dominant_eigenvalue_root_family(m, N, 30).mantissa - 10**30
            assert x == integer_root_floor(N, m, 30)
            assert x**m <= N * 10 ** (30 * m) < (x + 1) ** m
    for m in range(2, 6):
        for N in range(2, 11):
            res = power_iteration(incidence(make_root_rules(m, N)), tol=1e-12)
            exact = dominant_eigenvalue_root_family(m, N, 30).as_fraction()
            assert abs(Fraction(res.eigenvalue) - exact) <= Fraction(1, 10**9), (m, N)


def test_c06_eigenvector_residual():
    d = 20
    for m in range(2, 7):
        for N in range(1, 21):
            mat = incidence(make_root_rules(m, N))
            lam = dominant_eigenvalue_root_family(m, N, d).as_fraction()
            vec = [c.as_fraction() for c in perron_vector_root_family(m, N, d)]
            assert perron_residual(mat, lam, vec) <= Fraction(m * (N + 1), 10**19), (m, N)


def test_c07_primitivity():
    for m in range(1, 9):
        for N in range(1, 9):
            assert is_primitive(incidence(make_root_rules(m, N))), (m, N)
    for m in range(2, 9):
        assert not is_primitive(identity(m))
    for m in range(2, 9):
        zero_radicand = RuleSet(tuple((j, j + 1) for j in range(m - 1)) + ((m - 1,),))
        assert not is_primitive(incidence(zero_radicand)), m


def test_c08_convergence_thresholds():
    eps = Fraction(1, 10**8)
    for m in range(2, 6):
        for N in range(2, 11):
            rows = approximants(m, N, max_iters=200)
            hit = next(
                (r.iter for r in rows if r.abs_errors[0] is not None and r.abs_errors[0] < eps),
                None,
            )
            assert hit is not None and hit <= 200, (m, N)
    # calibrated constant: n1^2 |r0^2 - 2| is exactly 1 on every row (Pell identity)
    pell_c = 1
    for row in list(approximants(2, 2, max_iters=40))[2:]:
        n1 = row.counts[1]
        assert n1**2 * row.abs_errors[0] <= pell_c


def test_c09a_perfect_cube_limit():
    rows = list(approximants(3, 8, max_iters=100))
    assert rows[100].abs_errors[0] < Fraction(1, 10**12)
    assert abs(rows[100].ratios[0] - 2) < Fraction(1, 10**12)


def test_c09b_perfect_cube_error_strictly_decreasing():
    rows = list(approximants(3, 8, max_iters=100))
    errs = [r.abs_errors[0] for r in rows]
    rises = [i for i in range(6, 101) if not errs[i] < errs[i - 1]]
    assert not rises, f"|r0^3 - 8| fails to decrease at i = {rises[:6]} ..."


def test_c10_round_trips():
    for m in range(1, 7):
        for N in (1, 2, 9):
            rules = make_root_rules(m, N)
            assert parse_rules(format_rules(rules)) == rules
    for m, N in [(2, 2), (3, 2), (4, 5)]:
        rows = list(approximants(m, N, max_iters=50))
        buf = io.StringIO()
        write_csv(rows, m, buf)
        assert read_csv(buf.getvalue()) == rows
        buf = io.StringIO()
        write_jsonl(rows, buf)
        assert read_jsonl(buf.getvalue()) == rows
    assert decimal(Fraction(17, 12), 16) == "1.4166666666666667"
