from fractions import Fraction
from math import comb, log2

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jetmetric.artin import jet
from jetmetric.errors import DimensionZeroError, NilpotencyOneError
from jetmetric.presentation import parse_presentation
from jetmetric.slopes import (
    defect_at,
    delta0,
    delta0_at_order,
    eps0,
    eps0_at_order,
    length_model,
    log2_decimal,
    quasi_dimension,
    rho,
    round_log2,
    slope_trace,
)

KX = parse_presentation("ring Q[x]\ngraded\nideal: ;")
KXY = parse_presentation("ring Q[x, y]\ngraded\nideal: ;")
KXYZ = parse_presentation("ring Q[x, y, z]\ngraded\nideal: ;")
CUSP = parse_presentation("ring Q[x, y]\nlocal\nideal: y^2 - x^3")


def test_round_log2_powers_of_two():
    for k in range(0, 12):
        assert round_log2(Fraction(2 ** k)) == k


def test_round_log2_boundary_is_decided_exactly():
    # the cut sits at sqrt(2) * 2^k; 181/128 is just below, 182/128 above
    assert round_log2(Fraction(181, 128)) == 0
    assert round_log2(Fraction(182, 128)) == 1


@given(st.fractions(min_value="1/1000", max_value=1000))
@settings(max_examples=80, deadline=None)
def test_round_log2_matches_float_rounding_away_from_ties(ratio):
    k = round_log2(ratio)
    # exact inequality that defines the rounding
    assert Fraction(2) ** (2 * k - 1) <= ratio * ratio < Fraction(2) ** (2 * k + 1)


def test_log2_decimal_is_deterministic_and_close():
    d = log2_decimal(Fraction(22100, 2925))
    assert str(d) == "2.917537839808"
    assert abs(float(d) - log2(22100 / 2925)) < 1e-11


def test_delta0_of_plane_jet_10():
    val = delta0(jet(KXY, 10))
    assert val.length == 55 and val.half_length == 15
    assert val.ratio == Fraction(11, 3)
    assert val.rounded() == 2


def test_delta0_rejects_nilpotency_one():
    point = parse_presentation("ring Q[x]\ngraded\nideal: x")
    with pytest.raises(NilpotencyOneError):
        delta0(jet(point, 5))


def test_length_model_of_graded_plane_matches_jets():
    m = length_model(KXY)
    for n in range(1, 12):
        assert m.length(n) == jet(KXY, n).dim == comb(n + 1, 2)
    assert (m.dim, m.mult) == (2, 1)


def test_length_model_of_local_cusp_is_certified():
    m = length_model(CUSP)
    assert m.source == "local-fitted"
    for n in range(1, 9):
        assert m.length(n) == jet(CUSP, n).dim == 2 * n - 1
    assert m.length(100) == 199
    assert (m.dim, m.mult) == (1, 2)


def test_nilpotency_at_tracks_jet_order():
    m = length_model(CUSP)
    for n in (3, 5, 9):
        from jetmetric.artin import nilpotency_index
        assert m.nilpotency_at(n) == nilpotency_index(jet(CUSP, n))


def test_delta0_at_order_agrees_with_jets():
    m = length_model(KXYZ)
    for n in (4, 10, 50):
        want = delta0(jet(KXYZ, n, capacity=30000)).ratio
        assert delta0_at_order(m, n).ratio == want


def test_frozen_three_variable_ratio_at_order_50():
    m = length_model(KXYZ)
    v = delta0_at_order(m, 50)
    assert v.ratio == Fraction(22100, 2925)
    assert v.rounded() == 3


def test_eps0_square_orders_on_the_line():
    for n in range(2, 13):
        assert eps0(jet(KX, n * n)) == 1


def test_eps0_at_order_plane_large():
    val = eps0_at_order(length_model(KXY), 10**4)
    assert val == Fraction(10201, 20002)
    assert abs(val - Fraction(1, 2)) <= Fraction(1, 20)


def test_rho_of_free_rings():
    assert (rho(KX).value, rho(KX).attained) == (Fraction(0), True)
    r2 = rho(KXY)
    assert (r2.value, r2.argmax_n) == (Fraction(1), 1)
    r3 = rho(KXYZ)
    assert r3.value == Fraction(5)
    assert r3.argmax_n == 1
    assert r3.tail_limit == Fraction(3)


def test_rho_of_the_cusp_is_one_half():
    r = rho(CUSP)
    assert r.value == Fraction(1, 2)
    assert r.tail_limit == Fraction(-1, 2)


def test_rho_rejects_dimension_zero(fat_point):
    with pytest.raises(DimensionZeroError):
        rho(fat_point)


def test_defect_is_bounded_by_rho_everywhere():
    for p in (KX, KXY, KXYZ, CUSP):
        r = rho(p)
        m = length_model(p)
        for n in range(1, 201):
            assert abs(defect_at(m, n)) <= r.value
        if r.attained:
            assert abs(defect_at(m, r.argmax_n)) == r.value


def test_rho_bound_is_tight():
    # shrinking the bound by any amount breaks it at the attained order
    for p in (KXY, KXYZ, CUSP):
        r = rho(p)
        m = length_model(p)
        smaller = r.value - Fraction(1, 1000)
        assert abs(defect_at(m, r.argmax_n)) > smaller


def test_quasi_dimension_frozen_cases():
    qd, cert = quasi_dimension(CUSP)
    assert qd == 1
    assert cert == {"n_used": 6, "rho_value": Fraction(1, 2), "satisfied": True}
    qd3, cert3 = quasi_dimension(KXYZ)
    assert qd3 == 3
    assert cert3["n_used"] == 50 and cert3["satisfied"]


def test_rounding_lemma_window_for_the_plane():
    m = length_model(KXY)
    for n in range(10, 61, 2):
        assert delta0_at_order(m, n).rounded() == 2


def test_trace_of_delta0_converges_to_dimension():
    tr = slope_trace(KXY, "delta0", [4, 8, 16, 32])
    assert [v.rounded() for v in tr.values] == [2, 2, 2, 2]
    assert tr.limit_claim == (Fraction(2), "dimension")


def test_trace_of_eps0_names_its_limit():
    tr = slope_trace(KXYZ, "eps0", [16, 64])
    assert tr.limit_claim[1] == "multiplicity over dim factorial"


def test_trace_of_hilbert_reports_agreement_order():
    tr = slope_trace(CUSP, "hilbert", [3, 5, 7])
    assert tr.agreement_order is not None
    assert tr.agreement_order >= 3
