from dataclasses import replace

import pytest

from sic.mechanism.coding import ALG1, ALG2, SQRTN, Coding
from sic.model.coding import CodingMatrix
from sic.mechanism.payment import vcg_payment, alg3_payment, sqrtn_payment, threshold_of, recovers
from sic.utils.handlers import ApproximateSolverError, MonotonicityViolationError, PaymentPreconditionError

MICRO = 1_000_000


def test_vcg_alg1_overlap_low(overlap_low):
    inst, reports = overlap_low
    assert vcg_payment(reports, inst.wants, 2, ALG1) == 400_000
    assert vcg_payment(reports, inst.wants, 3, ALG1) == 500_000
    with pytest.raises(PaymentPreconditionError):
        vcg_payment(reports, inst.wants, 0, ALG1)


def test_vcg_uncoded_client(make_reports):
    reports = make_reports([1_300_000, 200_000], [set(), set()])
    assert vcg_payment(reports, [0, 1], 0, ALG1) == MICRO


def test_vcg_rejects_approximate_scheme(path_deviation):
    inst, reports = path_deviation
    with pytest.raises(ApproximateSolverError):
        vcg_payment(reports, inst.wants, 0, ALG2)

    # the non-truthful pairing: paying 0.45 with a true valuation of 0.55
    assert vcg_payment(reports, inst.wants, 0, ALG2, allow_approximate=True) == 450_000


def test_alg3_path_four(path_four, path_deviation):
    inst, reports = path_deviation
    assert alg3_payment(reports, inst.wants, 0) == 600_000
    assert threshold_of(ALG2, reports, inst.wants, 0) == 600_000

    inst, reports = path_four
    assert alg3_payment(reports, inst.wants, 1) == 450_000
    assert threshold_of(ALG2, reports, inst.wants, 1) == 450_000
    with pytest.raises(PaymentPreconditionError):
        alg3_payment(reports, inst.wants, 0)


def test_alg3_uncoded(make_reports):
    reports = make_reports([MICRO, 500_000], [set(), {0}])
    assert alg3_payment(reports, [0, 1], 0) == MICRO


def test_alg3_lone_two_cycle(make_reports):
    # admission bar: the pair is selected once 1 - v0 + 1 - v1 <= 1
    reports = make_reports([700_000, 600_000], [{1}, {0}])
    assert alg3_payment(reports, [0, 1], 0) == 400_000
    assert threshold_of(ALG2, reports, [0, 1], 0) == 400_000


def test_threshold_alg1_overlap_low(overlap_low):
    inst, reports = overlap_low
    # tie at 0.4 is resolved against the zero-weight edge
    assert threshold_of(ALG1, reports, inst.wants, 2) == 400_001
    assert threshold_of(ALG1, reports, inst.wants, 3) == 500_001
    assert threshold_of(ALG1, reports, inst.wants, 0) == MICRO


def test_threshold_uncoded_bound(make_reports):
    reports = make_reports([500_000, 500_000], [set(), set()])
    # every bid of at least 1 is served uncoded
    assert threshold_of(ALG2, reports, [0, 1], 0) == MICRO
    assert recovers(ALG2, reports.replace(0, valuation=MICRO), [0, 1], 0)


def test_threshold_verify_grid(overlap_low):
    inst, reports = overlap_low
    grid = [0, 399_999, 400_000, 400_001, 700_000, MICRO, 2 * MICRO]
    assert threshold_of(ALG1, reports, inst.wants, 2, verify_grid=grid) == 400_001


def test_threshold_detects_non_step(make_reports):
    def _odd(reports, _wants):
        # recovers only for bids in [0.3, 0.6)
        bid = reports[0].valuation
        rows = [frozenset({0})] if 300_000 <= bid < 600_000 else []
        return Coding(matrix=CodingMatrix.from_supports(rows))

    scheme = replace(ALG2, name='odd', solve=_odd)
    reports = make_reports([500_000, 0], [set(), set()])
    with pytest.raises(MonotonicityViolationError):
        threshold_of(scheme, reports, [0, 1], 0, verify_grid=[0, 300_000, 700_000])


def test_sqrtn_lone_two_cycle(make_reports):
    reports = make_reports([700_000, 600_000], [{1}, {0}])
    assert sqrtn_payment(reports, [0, 1], 0) == 400_000
    assert sqrtn_payment(reports, [0, 1], 1) == 300_000


def test_sqrtn_uncoded(make_reports):
    reports = make_reports([1_500_000, 100_000], [set(), set()])
    assert sqrtn_payment(reports, [0, 1], 0) == MICRO
    with pytest.raises(PaymentPreconditionError):
        sqrtn_payment(reports, [0, 1], 1)


def test_alg3_equals_threshold(random_instances):
    for inst in random_instances(100, sizes=[3, 4, 5, 6, 7], side_sizes=[1, 2, 3], seed=31):
        reports = inst.truthful_reports()
        coding = ALG2.solve(reports, inst.wants)
        for i in range(inst.n):
            if recovers(ALG2, reports, inst.wants, i, coding):
                threshold = threshold_of(ALG2, reports, inst.wants, i)
                assert threshold - 1 <= alg3_payment(reports, inst.wants, i, coding) <= threshold


def test_alg1_vcg_equals_threshold(random_instances):
    for inst in random_instances(100, sizes=[3, 4, 6, 8], side_sizes=[1, 2, 3], seed=32):
        reports = inst.truthful_reports()
        coding = ALG1.solve(reports, inst.wants)
        for i in range(inst.n):
            if recovers(ALG1, reports, inst.wants, i, coding):
                threshold = threshold_of(ALG1, reports, inst.wants, i)
                assert threshold - 1 <= vcg_payment(reports, inst.wants, i, ALG1, coding) <= threshold


def test_sqrtn_threshold_is_step(random_instances):
    grid = list(range(0, 1_000_001, 125_000))
    for inst in random_instances(20, sizes=[4, 5, 6], side_sizes=[1, 2, 3], seed=33):
        reports = inst.truthful_reports()
        for i in range(inst.n):
            threshold_of(SQRTN, reports, inst.wants, i, verify_grid=grid)
