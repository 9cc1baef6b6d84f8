from sic.config.hardcoded import MICRO, THRESHOLD_SENTINEL
from sic.core.decode import can_decode
from sic.core.welfare import welfare
from sic.graph.cycles import min_cost_cycle, min_cost_cycle_through
from sic.graph.dependency import build_dependency_graph, cycle_cost
from sic.mechanism.coding import Coding, CodingScheme, ALG2, SQRTN
from sic.model.instance import ReportProfile
from sic.utils.debug import log
from sic.utils.handlers import ApproximateSolverError, MonotonicityViolationError, PaymentPreconditionError


def recovers(scheme: CodingScheme, reports: ReportProfile, wants: (list, tuple), i: int,
             coding: Coding = None) -> bool:
    if coding is None:
        coding = scheme.solve(reports, wants)

    return can_decode(reports[i].side_info, coding.matrix, wants[i], scheme.mode)


def _require_recovered(scheme: CodingScheme, reports: ReportProfile, wants: (list, tuple), i: int,
                       coding: Coding = None) -> Coding:
    if coding is None:
        coding = scheme.solve(reports, wants)

    if not recovers(scheme, reports, wants, i, coding):
        raise PaymentPreconditionError(
            f"Client {i} does not recover its chunk with scheme '{scheme.name}' and must not be charged"
        )

    return coding


def vcg_payment(
        reports: ReportProfile, wants: (list, tuple), i: int, scheme: CodingScheme,
        coding: Coding = None, allow_approximate: bool = False,
) -> int:
    # externality: optimum without client i minus the others' welfare at the chosen code
    if not scheme.optimal and not allow_approximate:
        raise ApproximateSolverError(f"Scheme '{scheme.name}' is not optimal and cannot back a VCG payment")

    coding = _require_recovered(scheme, reports, wants, i, coding)
    zeroed = reports.replace(i, valuation=0)
    best = welfare(zeroed.valuations, zeroed.sides, wants, scheme.solve(zeroed, wants).matrix, scheme.mode)
    others = welfare(zeroed.valuations, zeroed.sides, wants, coding.matrix, scheme.mode)
    payment = best - others
    log(f"VCG payment of client {i} with '{scheme.name}': {payment}", level=7)
    return payment


def alg3_payment(reports: ReportProfile, wants: (list, tuple), i: int, coding: Coding = None) -> int:
    """
    Threshold of client i under the greedy min-cost scheme.
    Out-arcs of i cost 1, the greedy selection is replayed and every iteration bounds the payment by
    the cost gap between the best cycle through i and the cycle selected instead.
    Once no admissible cycle is left the admission bar (cost 1) is the competitor.
    """
    _require_recovered(ALG2, reports, wants, i, coding)
    g = build_dependency_graph(reports, wants)
    override = {(i, j): MICRO for j in g.successors(i)}
    payment = MICRO

    while True:
        through = min_cost_cycle_through(g, i, cost_override=override)
        if through is None:
            break

        selected = min_cost_cycle(g, cost_override=override, max_cost=MICRO)
        bar = MICRO if selected is None else cycle_cost(selected, g, override)
        payment = min(payment, cycle_cost(through, g, override) - bar)
        if selected is None:
            break

        g = g.without(selected.vertices)

    log(f"Alg3 payment of client {i}: {payment}", level=7)
    return payment


def threshold_of(
        scheme: CodingScheme, reports: ReportProfile, wants: (list, tuple), i: int,
        verify_grid: (list, tuple) = None,
) -> int:
    # smallest micro bid recovering client i, others frozen
    def _recovers(bid: int) -> bool:
        return recovers(scheme, reports.replace(i, valuation=bid), wants, i)

    if _recovers(0):
        threshold = 0

    else:
        low, high = 0, MICRO
        while high - low > 1:
            mid = (low + high) // 2
            if _recovers(mid):
                high = mid

            else:
                low = mid

        threshold = high
        if high == MICRO and not _recovers(MICRO):
            log(f"Client {i} is not recovered by '{scheme.name}' at any bid up to 1", level=6)
            threshold = THRESHOLD_SENTINEL

    if verify_grid is not None:
        for bid in sorted(set(verify_grid)):
            if bid >= 0 and _recovers(bid) != (bid >= threshold):
                raise MonotonicityViolationError(
                    f"Recovery of client {i} with '{scheme.name}' is not a step at {threshold}: bid {bid}"
                )

    return threshold


def sqrtn_payment(reports: ReportProfile, wants: (list, tuple), i: int, coding: Coding = None) -> int:
    _require_recovered(SQRTN, reports, wants, i, coding)
    return threshold_of(SQRTN, reports, wants, i)
