import random

import pytest

from reciprocity.corpus import random_factored_rational, random_rational_pair
from reciprocity.curve import (
    AdeleVector,
    Place,
    RationalFunction,
    divisor_of,
    local_expansion,
    relevant_places,
    residue_pairing_sum,
    sigma_perp_forward,
    trace_residue_at_place,
    verify_gf_global,
    verify_residue_theorem,
    verify_residues_local_data,
    verify_wrl,
    verify_wrl_local_data,
    wrl_local_factor,
)
from reciprocity.errors import DomainError, FactorError, TowerError
from reciprocity.fields import QQ, ExtensionField, PrimeField, lift
from reciprocity.laurent import LaurentSeries
from reciprocity.poly import Polynomial
from reciprocity.symbols import residue_coefficient


def rf(field, num_ints, den_ints=(1,)):
    return RationalFunction(
        field,
        Polynomial.from_int_coeffs(field, num_ints),
        Polynomial.from_int_coeffs(field, den_ints),
    )


class TestPlacesAndDivisors:
    def test_relevant_places_examples(self, Q, F3):
        f, g = rf(Q, (0, 1)), rf(Q, (1, -1))
        names = [str(p) for p in relevant_places(f, g)]
        assert names == ["(x)", "(x - 1)", "infinity"]

        h = rf(F3, (1, 0, 1))
        names3 = [str(p) for p in relevant_places(h, rf(F3, (1,)))]
        assert names3 == ["(x^2 + 1)", "infinity"]

        assert [str(p) for p in relevant_places(rf(Q, (1,)), rf(Q, (1,)))] == ["infinity"]

    def test_place_validation(self, F3):
        with pytest.raises(DomainError):
            Place.finite(Polynomial.from_int_coeffs(F3, [2, 0, 1]))  # splits over F3
        p = Place.finite(Polynomial.from_int_coeffs(F3, [1, 0, 1]))
        assert p.degree == 2
        assert p.residue_field.order == 9

    def test_residue_field_over_q_limited(self, Q):
        p = Place.finite(Polynomial.from_int_coeffs(Q, [1, 0, 1]))
        with pytest.raises(TowerError):
            p.residue_field

    def test_divisor_examples(self, Q, F3):
        d = divisor_of(rf(Q, (0, 1)))
        assert d.degree == 0
        assert d.multiplicity(Place.infinity(Q)) == -1
        assert divisor_of(rf(Q, (5,))).data == {}

        h = RationalFunction(
            F3,
            Polynomial.from_int_coeffs(F3, (1, 0, 1)),
            Polynomial.from_int_coeffs(F3, (0, 1)),
        )
        dh = divisor_of(h)
        assert dh.degree == 0
        inf = Place.infinity(F3)
        assert dh.multiplicity(inf) == -1

    def test_divisor_degree_zero_random(self, rng, F5, F7):
        for field in (F5, F7):
            for _ in range(40):
                f, _ = random_rational_pair(rng, field, 5)
                assert divisor_of(f).degree == 0


class TestLocalExpansion:
    def test_examples(self, Q):
        x = RationalFunction.x(Q)
        one = RationalFunction.constant(Q, 1)
        at_zero = Place.finite(Polynomial.x(Q))
        assert local_expansion(one / x, at_zero, 5).known_coefficient(-1) == 1
        inf = Place.infinity(Q)
        e = local_expansion(x, inf, 5)
        assert e.known_coefficient(-1) == 1 and len(e.coeffs) == 1
        geom = local_expansion(one / (one - x), at_zero, 5)
        assert geom == LaurentSeries(Q, {i: 1 for i in range(5)}, 5)

    def test_higher_degree_place_refused(self, F3):
        h = rf(F3, (1,), (1, 0, 1))
        p = Place.finite(Polynomial.from_int_coeffs(F3, [1, 0, 1]), check=False)
        with pytest.raises(DomainError):
            local_expansion(h, p, 5)

    def test_valuation_and_unit_value(self, F3):
        p = Place.finite(Polynomial.from_int_coeffs(F3, [1, 0, 1]), check=False)
        h = rf(F3, (1, 0, 1), (0, 1))  # (x^2+1)/x
        assert h.valuation_at(p) == 1
        assert h.valuation_at(Place.infinity(F3)) == -1
        u = rf(F3, (0, 1)).unit_value_at(p)  # x mod x^2+1
        assert u == Polynomial.x(F3)


class TestWRL:
    def test_local_factor_examples(self, Q):
        x = RationalFunction.x(Q)
        g = RationalFunction.constant(Q, 1) - x
        at_zero = Place.finite(Polynomial.x(Q))
        inf = Place.infinity(Q)
        assert wrl_local_factor(x, g, at_zero) == 1
        assert wrl_local_factor(x, g, inf) == 1
        at_one = Place.finite(Polynomial.from_int_coeffs(Q, [-1, 1]))
        assert wrl_local_factor(x, g, at_one) == 1

    def test_degree_two_factor(self, F3):
        f = rf(F3, (1, 0, 1))
        p = Place.finite(Polynomial.from_int_coeffs(F3, [1, 0, 1]), check=False)
        assert wrl_local_factor(f, f, p) == 1

    def test_verify_examples(self, Q):
        x = RationalFunction.x(Q)
        one = RationalFunction.constant(Q, 1)
        assert verify_wrl(x, one - x).verified
        assert verify_wrl(x, x).verified
        f = (x**2 + 3) / (x - 1)
        assert verify_wrl(f, RationalFunction.constant(Q, 7)).verified

    def test_verify_random_f5_f7(self, rng, F5, F7):
        for field in (F5, F7):
            for i in range(40):
                f, g = random_rational_pair(rng, field, 5, force_higher_place=(i % 5 == 0))
                rep = verify_wrl(f, g)
                assert rep.verified, rep.text()

    def test_verify_factored_q(self, rng, Q):
        for _ in range(15):
            f = random_factored_rational(rng)
            g = random_factored_rational(rng)
            rep = verify_wrl(f, g)
            assert rep.verified, rep.text()

    def test_uncertified_辞factorization_rejected(self, Q):
        hard = rf(Q, (1, 1, 0, 0, 1))  # x^4+x+1: cannot certify automatically
        with pytest.raises(FactorError):
            relevant_places(hard, rf(Q, (1,)))


class TestResidueTheorem:
    def test_examples(self, Q, F3):
        x = RationalFunction.x(Q)
        one = RationalFunction.constant(Q, 1)
        rep = verify_residue_theorem(one / x, x)
        assert rep.verified
        by_place = {r["place"]: r["residue"] for r in rep.places}
        assert by_place["(x)"] == "1" and by_place["infinity"] == "-1"

        assert verify_residue_theorem(x**2 + x, x**3).verified

        h = rf(F3, (1,), (1, 0, 1))
        rep3 = verify_residue_theorem(h, RationalFunction.x(F3))
        assert rep3.verified
        assert all(r["residue"] == "0" for r in rep3.places)

    def test_trace_residue_examples(self, Q):
        x = RationalFunction.x(Q)
        one = RationalFunction.constant(Q, 1)
        h = one / x
        assert trace_residue_at_place(h, Place.finite(Polynomial.x(Q))) == 1
        assert trace_residue_at_place(h, Place.infinity(Q)) == -1

    def test_random(self, rng, F5, F7):
        for field in (F5, F7):
            for i in range(40):
                f, g = random_rational_pair(rng, field, 5, force_higher_place=(i % 5 == 0))
                rep = verify_residue_theorem(f, g)
                assert rep.verified, rep.text()

    def test_random_factored_q(self, rng, Q):
        for _ in range(15):
            f = random_factored_rational(rng)
            g = random_factored_rational(rng)
            assert verify_residue_theorem(f, g).verified

    def test_consistency_degree_one(self, rng, F5):
        # at degree-1 places the residue is the z^{-1} coefficient of the expansion
        z_series = LaurentSeries.monomial(F5, 1)
        for _ in range(20):
            f, g = random_rational_pair(rng, F5, 4)
            h = f * g.derivative()
            for place in relevant_places(f, g):
                if place.is_infinite or place.degree != 1:
                    continue
                direct = trace_residue_at_place(h, place)
                exp = local_expansion(h, place, 2)
                assert residue_coefficient(exp, z_series, F5) == direct

    def test_precision_independence(self, rng, F5):
        for _ in range(10):
            f, g = random_rational_pair(rng, F5, 4)
            h = f * g.derivative()
            for place in relevant_places(f, g):
                if place.degree != 1 and not place.is_infinite:
                    continue
                if place.is_infinite:
                    a = local_expansion(h, place, 3)
                    b = local_expansion(h, place, 6)
                else:
                    a = local_expansion(h, place, 2)
                    b = local_expansion(h, place, 4)
                assert a.agrees_with(b)


class TestBaseChangeOracle:
    @pytest.mark.parametrize("p", [3, 5])
    def test_higher_degree_residues_split(self, p, rng):
        field = PrimeField(p)
        for _ in range(10):
            f, g = random_rational_pair(rng, field, 4)
            h = f * g.derivative()
            for place in relevant_places(f, g):
                if place.is_infinite or place.degree == 1:
                    continue
                base_value = trace_residue_at_place(h, place)
                ext = ExtensionField(p, [c.data for c in place.poly.coeffs])
                num_k = Polynomial(ext, [lift(c, ext) for c in h.num.coeffs])
                den_k = Polynomial(ext, [lift(c, ext) for c in h.den.coeffs])
                h_k = RationalFunction(ext, num_k, den_k)
                modulus_k = Polynomial(ext, [lift(c, ext) for c in place.poly.coeffs])
                from reciprocity.factor import poly_factor

                fac = poly_factor(modulus_k)
                assert all(q.degree == 1 for q, _, _ in fac)
                total = ext.zero()
                for q, mult, _ in fac:
                    assert mult == 1
                    split_place = Place.finite(q, check=False)
                    total = total + trace_residue_at_place(h_k, split_place)
                assert total == lift(base_value, ext)


class TestLocalDataMode:
    def test_wrl_and_residues_from_expansions(self, rng, F5):
        # build raw local data from an honest rational pair with linear places
        x = RationalFunction.x(F5)
        one = RationalFunction.constant(F5, 1)
        f = x**2 * (one - x)
        g = (one + x) / x
        entries_f = []
        prec = 12
        for place in relevant_places(f, g):
            assert place.degree == 1 or place.is_infinite
            entries_f.append((F5, local_expansion(f, place, prec), local_expansion(g, place, prec)))
        rep = verify_wrl_local_data(entries_f, F5)
        assert rep.verified, rep.text()
        rep2 = verify_residues_local_data(entries_f, F5)
        assert rep2.verified, rep2.text()


class TestSigmaPerp:
    def test_rational_default_true(self, Q):
        x = RationalFunction.x(Q)
        one = RationalFunction.constant(Q, 1)
        adele = AdeleVector(one / x)
        assert sigma_perp_forward(adele, [x, x**2, one / (one - x)])

    def test_constant_perturbation_true(self, Q):
        x = RationalFunction.x(Q)
        one = RationalFunction.constant(Q, 1)
        at_one = Place.finite(Polynomial.from_int_coeffs(Q, [-1, 1]))
        adele = AdeleVector(one / x, {at_one: LaurentSeries.constant(Q, 9, 8)})
        # tests regular at the perturbed place
        assert sigma_perp_forward(adele, [x, x**2 + x])

    def test_nonconstant_perturbation_detected(self, Q):
        x = RationalFunction.x(Q)
        one = RationalFunction.constant(Q, 1)
        at_one = Place.finite(Polynomial.from_int_coeffs(Q, [-1, 1]))
        adele = AdeleVector(one / x, {at_one: LaurentSeries.monomial(Q, -1, 1, 8)})
        assert not sigma_perp_forward(adele, [x])

    def test_bad_component_places_rejected(self, F3, Q):
        deg2 = Place.finite(Polynomial.from_int_coeffs(F3, [1, 0, 1]), check=False)
        with pytest.raises(DomainError):
            AdeleVector(RationalFunction.x(F3), {deg2: LaurentSeries.one(F3)})
        with pytest.raises(DomainError):
            AdeleVector(RationalFunction.x(Q), {Place.infinity(Q): "not a series"})


class TestGlobalGF:
    def test_examples(self, Q):
        x = RationalFunction.x(Q)
        one = RationalFunction.constant(Q, 1)
        rep = verify_gf_global([[1, 0], [0, 1]], [[1, 0], [0, 1]], one / x, x)
        assert rep.verified and rep.global_value == "0"
        nil = verify_gf_global([[0, 1], [0, 0]], [[0, 1], [0, 0]], one / x, x)
        assert nil.verified  # tr(ST) = 0
        rep2 = verify_gf_global(
            [[1, 2], [0, 3]], [[1, 1], [4, 0]], one / (x - 1), x**2
        )
        assert rep2.verified

    def test_random(self, rng, F5):
        for i in range(15):
            f, g = random_rational_pair(rng, F5, 4, force_higher_place=(i % 4 == 0))
            s = [[F5.random_element(rng) for _ in range(2)] for _ in range(2)]
            t = [[F5.random_element(rng) for _ in range(2)] for _ in range(2)]
            rep = verify_gf_global(s, t, f, g)
            assert rep.verified, rep.text()
