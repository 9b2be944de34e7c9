"""Acceptance checklist, one test per criterion, one line per sub-check.

Criterion 3 contains two sub-checks that are implemented as printed and
are expected to fail: the printed mixed-zeta numerator contradicts its
own defining sum (the t^2 coefficient must be N-2, not N-1), and the
claimed blanket RH failure does not hold at desk scale for q in
{2,3,4}.  See the README's known-red section; the checks are asserted
as stated rather than weakened.
"""

import time

from nazeta import acceptance


def _run(fn, budget=None):
    start = time.time()
    result = fn()
    elapsed = time.time() - start
    print()
    print(result.render())
    print(f"  ({elapsed:.2f}s)")
    if budget is not None:
        assert elapsed < budget, f"runtime {elapsed:.1f}s over budget {budget}s"
    return result


def test_criterion_1_mass_triple_agreement():
    result = _run(acceptance.criterion_1, budget=5.0)
    assert result.passed


def test_criterion_2_rank2_elliptic_pure_zeta():
    result = _run(acceptance.criterion_2)
    assert result.passed


def test_criterion_3_counterexamples():
    result = _run(acceptance.criterion_3)
    assert result.passed


def test_criterion_4_group_zeta_rank_one():
    result = _run(acceptance.criterion_4)
    assert result.passed


def test_criterion_5_symbolic_identity_suite():
    result = _run(acceptance.criterion_5, budget=60.0)
    assert result.passed


def test_criterion_6_residue_route_oracle():
    result = _run(acceptance.criterion_6, budget=30.0)
    assert result.passed


def test_criterion_7_number_field_volumes():
    result = _run(acceptance.criterion_7)
    assert result.passed


def test_criterion_8_uniformity_rank_two():
    result = _run(acceptance.criterion_8)
    assert result.passed


def test_criterion_9_property_suites():
    result = _run(acceptance.criterion_9)
    assert result.passed
