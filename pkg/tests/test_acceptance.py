"""Acceptance battery: every criterion at its stated scope and tolerance.

Each test runs one criterion from symplectic_ice.acceptance (the same code
the ``suite`` subcommand runs), prints its one-line report, and asserts it
passed.  All checks are exact equality except the Monte Carlo criterion
(5 standard errors per pooled outcome, aggregate chi-square below the
0.999 quantile) and the stated runtime budgets.
"""

from symplectic_ice import acceptance as acc


def _run(criterion, **kwargs):
    result = criterion(**kwargs)
    print()
    print(result.line)
    assert result.passed, result.line
    return result


def test_criterion_01_uncolored_ybe():
    # 4 vertex pairs x 64 boundary combos x 20 points, exact, < 1 s
    res = _run(acc.criterion_1_ybe_uncolored)
    assert res.seconds < 1.0


def test_criterion_02_lemma_ybe():
    # 64 combos x 20 random (t1, t2, q) + the fish specialization
    _run(acc.criterion_2_ybe_lemma)


def test_criterion_03_caduceus():
    # 16 combos x 20 points x both caps, exact scalar; unit-scalar spot value
    _run(acc.criterion_3_caduceus)


def test_criterion_04_fish():
    # 4 boundary pairs x 20 points x both caps with the stated factors
    _run(acc.criterion_4_fish)


def test_criterion_05_colored_ybe():
    # both colored families, three crossing kinds, 4^6 combos x 5 points
    _run(acc.criterion_5_ybe_colored)


def test_criterion_06_reflection():
    # signed 5^4 over 5 labels, positive 3^4 over 3 labels, x 10 points
    _run(acc.criterion_6_reflection)


def test_criterion_07_functional():
    # figure instance + n <= 2, L <= 5 sweeps: normalized invariance under
    # every generator, enumeration == transfer, < 30 s
    res = _run(acc.criterion_7_functional)
    assert res.seconds < 30.0


def test_criterion_08_closed_form():
    # closed form == enumeration for n <= 2, L <= 5, all lambda, all sigma
    # with sigma(i) = -tau(i)
    _run(acc.criterion_8_closed_form)


def test_criterion_09_recursions():
    # all hypothesis-satisfying (sigma, i) at n = 2, L = 4, 10 points,
    # three-way enumeration, both signed recursions + the positive one
    _run(acc.criterion_9_recursions)


def test_criterion_10_demazure_lusztig():
    # operator spot values, quadratic relation on monomials of degree <= 3,
    # u-variable coefficient identities, and the normalized recursion
    _run(acc.criterion_10_demazure_lusztig)


def test_criterion_11_stochasticity():
    # every stochastic row sums to exactly 1; all ordinary-vertex weights
    # lie in [0, 1] at 100 random regime points
    _run(acc.criterion_11_stochasticity)


def test_criterion_12_monte_carlo():
    # n in {1, 2}, L = 4, q = 1/2, z = 3/4, 10^5 seeded samples per family;
    # pooled z < 5, chi-square below the 0.999 quantile; exhaustive path
    # sum reproduces Z exactly for n = 1, L <= 2; < 60 s
    res = _run(acc.criterion_12_monte_carlo)
    assert res.seconds < 60.0
