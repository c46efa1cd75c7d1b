"""Tests for the per-case certificates (k = 2..9, n >= 40)."""

import json
import math
from fractions import Fraction

import pytest

from binconc import (
    CK_REFERENCE,
    K4_ANCHOR,
    K9_ANCHOR,
    CaseKind,
    DomainError,
    case5_chain,
    certificates_to_jsonl,
    ck_constant,
    closed_form_f,
    f,
    sufficient_sum,
    verify_all_cases,
)
from binconc.cases import K2_LIMIT_FLOOR, falling_product_vs_power

# frozen during development from the defining expressions
CK_FROZEN = {
    5: 1.8029889496508438,
    6: 1.5280616772761608,
    7: 1.2619281794802844,
    8: 1.012130521014383,
}
K4_ANCHOR_FROZEN = 1.4263520055165015
K9_ANCHOR_FROZEN = 1.252765394924744


class TestClosedForms:
    @pytest.mark.parametrize("n,k", [(40, 2), (40, 3), (40, 4), (100, 4), (257, 3)])
    def test_equal_to_window_sum(self, n, k):
        assert closed_form_f(n, k) == f(n, k)

    def test_sweep_small_range(self):
        for n in range(40, 140):
            for k in (2, 3, 4):
                assert closed_form_f(n, k) == f(n, k)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            closed_form_f(39, 2)
        with pytest.raises(DomainError):
            closed_form_f(40, 5)


class TestCkConstants:
    @pytest.mark.parametrize("k", [5, 6, 7, 8])
    def test_frozen_values(self, k):
        assert ck_constant(k) == pytest.approx(CK_FROZEN[k], abs=1e-12)

    @pytest.mark.parametrize("k", [5, 6, 7, 8])
    def test_reference_anchors(self, k):
        assert abs(ck_constant(k) - CK_REFERENCE[k]) <= 5e-6

    def test_all_exceed_one(self):
        assert all(ck_constant(k) > 1 for k in (5, 6, 7, 8))

    def test_domain_error(self):
        with pytest.raises(DomainError):
            ck_constant(9)


class TestCase5Chain:
    def test_integer_products(self):
        for n in (40, 61, 500):
            for i in range(7, 12):
                prod, power = falling_product_vs_power(n, i)
                assert prod >= power

    def test_i11_reduces_to_linear(self):
        # (n-2)(n-10) >= (n-9)^2 is exactly 6n >= 61
        for n in range(11, 200):
            assert ((n - 2) * (n - 10) >= (n - 9) ** 2) == (6 * n >= 61)

    def test_anchor_at_hundred(self):
        value = sufficient_sum(100, 9)
        assert value == pytest.approx(K9_ANCHOR_FROZEN, abs=1e-12)
        assert abs(value - K9_ANCHOR) <= 5e-6

    def test_certificate_branches(self):
        low = case5_chain(40)
        assert low.verdict
        assert low.rhs == Fraction(61, 100)
        assert low.lhs.as_fraction() > Fraction(61, 100)
        high = case5_chain(100)
        assert high.verdict
        assert high.rhs == 1.0
        assert high.lhs == pytest.approx(K9_ANCHOR_FROZEN, abs=1e-12)

    def test_exact_sixty_one_percent_bound(self):
        for n in (40, 70, 99):
            assert f(n, 9).as_fraction() > Fraction(61, 100)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            case5_chain(39)


class TestConstantAnchors:
    def test_k2_limit(self):
        assert K2_LIMIT_FLOOR == pytest.approx(10 / (3 * math.e), abs=0)
        assert K2_LIMIT_FLOOR > 1

    def test_k4_anchor(self):
        value = (32 / 3 + 96 / 5) * (36 / 39) ** 38
        assert value == pytest.approx(K4_ANCHOR_FROZEN, abs=1e-12)
        assert abs(value - K4_ANCHOR) <= 5e-6

    def test_k3_floor(self):
        value = 4.5 * (37 / 39) ** 38 + (63 / 8) * (38 / 39) * math.exp(-2)
        assert value == pytest.approx(1.647165593822074, abs=1e-12)
        assert value > 1


class TestVerifyAllCases:
    def test_all_hold_to_one_hundred(self):
        certs = verify_all_cases(100)
        assert certs and all(c.verdict for c in certs)
        kinds = {c.case_id for c in certs}
        assert kinds == set(CaseKind)

    def test_window_claims_are_integer_inequalities(self):
        certs = {(c.n_lo, c.case_id.k, c.check): c for c in verify_all_cases(41)}
        low = certs[(40, 2, "window_width")]
        assert low.lhs == 76 and low.verdict  # 40 < 2*38 < 160
        high = certs[(40, 9, "window_width")]
        assert high.lhs == 279 and high.verdict  # 160 < 9*31 < 360

    def test_jsonl_round_trip(self):
        certs = verify_all_cases(42)
        lines = certificates_to_jsonl(certs).splitlines()
        assert len(lines) == len(certs)
        for line in lines:
            record = json.loads(line)
            assert {"case_id", "n", "lhs", "rhs", "verdict"} <= record.keys()
            assert record["verdict"] is True

    def test_domain_error(self):
        with pytest.raises(DomainError):
            verify_all_cases(39)


class TestMonotonicityGrids:
    """Numeric spot checks on geometric grids (not symbolic proofs)."""

    GRID = list(range(40, 201)) + [256, 512, 1024, 4096, 16384, 131072, 1000000]

    def test_shifted_base_increasing_for_k5_to_8(self):
        for k in (5, 6, 7, 8):
            values = [(x - 2) * math.log1p(-(k - 1) / (x - 1)) for x in self.GRID]
            assert all(a < b for a, b in zip(values, values[1:]))

    def test_k9_base_increasing_from_hundred(self):
        grid = [x for x in self.GRID if x >= 100]
        values = [(x - 2) * math.log1p(-8 / (x - 1)) for x in grid]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_k2_ratio_decreasing(self):
        values = [(x - 2) * math.log1p(-1 / (x - 1)) for x in self.GRID]
        assert all(a > b for a, b in zip(values, values[1:]))
