import itertools
import random
from fractions import Fraction

import pytest

from lorentzpoly.certify import (
    InertiaSignature,
    SymmetricMatrix,
    bivariate_ulc,
    characteristic_polynomial,
    discrete_root_log_concavity,
    inertia,
    is_m_convex,
    lorentzian_certify,
    m_convex_failure,
    numeric_log_concavity_spot,
    quadratic_form_matrix,
    root_direction_violations,
    verify_certificate,
)
from lorentzpoly.oracles import inertia_by_sturm_bracketing
from lorentzpoly.polynomials import Polynomial, normalize, parse_polynomial
from lorentzpoly.schubert import Permutation, schubert
from lorentzpoly.symmetric import schur
from lorentzpoly.sweeps import partitions_within


def poly(text):
    return parse_polynomial(text)


def random_symmetric(rng, n, style="dense"):
    if style == "low_rank":
        k = rng.randint(0, max(0, n - 1))
        rows = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)]
                for _ in range(k)]
        out = [[sum(rows[t][i] * rows[t][j] for t in range(k)) for j in range(n)]
               for i in range(n)]
        return SymmetricMatrix(out)
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            value = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            if style == "sparse" and rng.random() < 0.5:
                value = Fraction(0)
            out[i][j] = out[j][i] = value
    return SymmetricMatrix(out)


class TestMConvexity:
    def test_unit_vectors(self):
        assert is_m_convex({(1, 0), (0, 1)})

    def test_gap_with_witness(self):
        witness = m_convex_failure({(2, 0), (0, 2)})
        assert witness == ((2, 0), (0, 2), 1)

    def test_empty_and_singleton(self):
        assert is_m_convex(set())
        assert is_m_convex({(3, 1, 0)})

    def test_mixed_arity_rejected(self):
        with pytest.raises(ValueError):
            is_m_convex({(1, 0), (0, 1, 0)})

    def test_unequal_total_degree_fails(self):
        assert not is_m_convex({(1, 0), (0, 0)})

    def test_schur_supports(self):
        for lam in partitions_within(6, 3):
            assert is_m_convex(schur(lam, 3).support())


class TestInertia:
    def test_identity(self):
        m = SymmetricMatrix([[1, 0], [0, 1]])
        assert inertia(m) == InertiaSignature(2, 0, 0)

    def test_off_diagonal_pair(self):
        m = SymmetricMatrix([[0, 1], [1, 0]])
        assert inertia(m) == InertiaSignature(1, 1, 0)

    def test_display_quadratic_form(self):
        m = quadratic_form_matrix(schur((2, 0), 2))
        assert m == SymmetricMatrix([[1, Fraction(1, 2)], [Fraction(1, 2), 1]])
        # characteristic polynomial (t - 3/2)(t - 1/2) = 3/4 - 2t + t^2
        assert characteristic_polynomial(m) == [Fraction(3, 4), Fraction(-2), Fraction(1)]
        assert inertia(m) == InertiaSignature(2, 0, 0)

    def test_zero_matrix(self):
        m = SymmetricMatrix([[0, 0], [0, 0]])
        assert inertia(m) == InertiaSignature(0, 0, 2)

    def test_repeated_eigenvalues(self):
        m = SymmetricMatrix([[2, 0, 0], [0, 2, 0], [0, 0, -1]])
        assert inertia(m) == InertiaSignature(2, 1, 0)
        assert inertia_by_sturm_bracketing(m) == InertiaSignature(2, 1, 0)

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError):
            SymmetricMatrix([[0, 1], [2, 0]])

    def test_agrees_with_sturm_bracketing(self):
        rng = random.Random(59)
        for trial in range(60):
            n = rng.randint(1, 5)
            style = ("dense", "sparse", "low_rank")[trial % 3]
            m = random_symmetric(rng, n, style)
            assert inertia(m) == inertia_by_sturm_bracketing(m)


class TestQuadraticForm:
    def test_single_cross_term(self):
        m = quadratic_form_matrix(poly("vars: 2\nx1 x2"))
        assert m == SymmetricMatrix([[0, Fraction(1, 2)], [Fraction(1, 2), 0]])

    def test_zero_polynomial(self):
        m = quadratic_form_matrix(Polynomial.zero(3))
        assert inertia(m) == InertiaSignature(0, 0, 3)

    def test_wrong_degree_rejected(self):
        with pytest.raises(ValueError):
            quadratic_form_matrix(poly("vars: 2\nx1"))


class TestCertifier:
    def test_quadratic_counterexample(self):
        cert = lorentzian_certify(schur((2, 0), 2))
        assert not cert.is_lorentzian
        assert cert.failure.kind == "hessian_failure"
        assert cert.failure.multiset == ()
        assert cert.failure.inertia == InertiaSignature(2, 0, 0)

    def test_normalized_large_schur(self):
        cert = lorentzian_certify(normalize(schur((3, 1, 1, 1, 1), 5)))
        assert cert.is_lorentzian
        assert cert.checks == (
            "homogeneous",
            "nonnegative_coefficients",
            "m_convex_support",
            "hessian_spectra",
        )

    def test_schubert_refutations(self):
        for line in ((1, 4, 2, 3), (1, 4, 3, 2)):
            cert = lorentzian_certify(schubert(Permutation(line)))
            assert not cert.is_lorentzian
            assert cert.failure.kind == "hessian_failure"

    def test_not_homogeneous(self):
        cert = lorentzian_certify(poly("vars: 2\nx1 + x1 x2"))
        assert cert.failure.kind == "not_homogeneous"
        assert cert.failure.degrees == (1, 2)

    def test_negative_coefficient(self):
        cert = lorentzian_certify(poly("vars: 2\nx1 x2 - x2^2"))
        assert cert.failure.kind == "negative_coefficient"
        assert cert.failure.exponent == (0, 2)

    def test_support_gap(self):
        cert = lorentzian_certify(poly("vars: 2\nx1^2 + x2^2"))
        assert cert.failure.kind == "support_not_m_convex"

    def test_low_degree_conventions(self):
        assert lorentzian_certify(Polynomial.zero(3)).is_lorentzian
        assert lorentzian_certify(Polynomial.constant(2, 5)).is_lorentzian
        assert not lorentzian_certify(Polynomial.constant(2, -1)).is_lorentzian
        assert lorentzian_certify(poly("vars: 3\nx1 + x3")).is_lorentzian

    def test_multiset_reported_lexicographically_smallest(self):
        # the flat cubic passes homogeneity, signs and M-convexity, and both
        # first derivatives have two positive eigenvalues; d_1 must be named
        bad = poly("vars: 2\nx1^3 + x1^2 x2 + x1 x2^2 + x2^3")
        cert = lorentzian_certify(bad)
        assert cert.failure.kind == "hessian_failure"
        assert cert.failure.multiset == (1,)
        assert verify_certificate(bad, cert)

    def test_witnesses_reverify(self):
        cases = [
            schur((2, 0), 2),
            schubert(Permutation((1, 4, 2, 3))),
            schubert(Permutation((1, 4, 3, 2))),
            poly("vars: 2\nx1 + x1 x2"),
            poly("vars: 2\nx1 x2 - x2^2"),
            poly("vars: 2\nx1^2 + x2^2"),
        ]
        for p in cases:
            cert = lorentzian_certify(p)
            assert not cert.is_lorentzian
            assert verify_certificate(p, cert)

    def test_witness_against_wrong_polynomial_fails(self):
        cert = lorentzian_certify(schur((2, 0), 2))
        other = normalize(schur((2, 0), 2))
        assert not verify_certificate(other, cert)

    def test_derivative_closure(self):
        seeds = [normalize(schur(lam, 3)) for lam in partitions_within(5, 3)]
        for h in seeds:
            if not lorentzian_certify(h).is_lorentzian:
                continue
            for i in range(1, 4):
                assert lorentzian_certify(h.partial_derivative(i)).is_lorentzian

    def test_product_closure(self):
        lams = [lam for lam in partitions_within(4, 3)]
        rng = random.Random(3)
        pairs = [(rng.choice(lams), rng.choice(lams)) for _ in range(25)]
        pairs += [(lams[0], lams[0])]
        for lam, rho in pairs:
            a, b = schur(lam, 3), schur(rho, 3)
            assert lorentzian_certify(normalize(a * b)).is_lorentzian
            assert lorentzian_certify(normalize(a) * normalize(b)).is_lorentzian

    def test_certificate_json_schema(self):
        cert = lorentzian_certify(schur((2, 0), 2)).to_dict()
        assert set(cert) == {"verdict", "arity", "degree", "checks", "failure"}
        assert cert["verdict"] == "NotLorentzian"
        assert cert["failure"]["kind"] == "hessian_failure"
        assert set(cert["failure"]) == {"kind", "multiset", "inertia"}
        assert set(cert["failure"]["inertia"]) == {"positive", "negative", "zero"}
        good = lorentzian_certify(Polynomial.zero(2)).to_dict()
        assert good["verdict"] == "Lorentzian" and good["failure"] is None


class TestBivariateUlc:
    def test_perfect_square(self):
        assert bivariate_ulc(poly("vars: 2\nx1^2 + 2 x1 x2 + x2^2"))

    def test_flat_sequence_fails(self):
        assert not bivariate_ulc(poly("vars: 2\nx1^2 + x1 x2 + x2^2"))

    def test_internal_zero_fails(self):
        assert not bivariate_ulc(poly("vars: 2\nx1^2 + x2^2"))

    def test_preconditions(self):
        with pytest.raises(ValueError):
            bivariate_ulc(poly("vars: 3\nx1 x2 x3"))
        with pytest.raises(ValueError):
            bivariate_ulc(poly("vars: 2\nx1 + x1 x2"))
        with pytest.raises(ValueError):
            bivariate_ulc(poly("vars: 2\nx1^2 - x2^2"))

    def test_certifier_agreement_sample(self):
        rng = random.Random(101)
        for _ in range(120):
            d = rng.randint(0, 8)
            terms = {}
            for k in range(d + 1):
                if rng.random() < 0.35:
                    continue
                terms[(k, d - k)] = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            h = Polynomial(2, terms)
            assert bivariate_ulc(h) == lorentzian_certify(h).is_lorentzian


class TestDiscreteLogConcavity:
    def test_display_point(self):
        assert discrete_root_log_concavity(schur((2, 0), 2), (1, 1), 1, 2)

    def test_zero_boundary(self):
        assert discrete_root_log_concavity(schur((2, 0), 2), (2, 0), 1, 2)

    def test_requires_distinct_indices(self):
        with pytest.raises(ValueError):
            discrete_root_log_concavity(schur((2, 0), 2), (1, 1), 1, 1)

    def test_full_table_sweep(self):
        assert root_direction_violations(schur((2, 1), 3)) == []

    def test_detects_violation(self):
        # 1, 1, 3 along a root line is not log-concave at the middle point
        h = poly("vars: 2\nx1^2 + x1 x2 + 3 x2^2")
        violations = root_direction_violations(h)
        assert ((1, 1), 1, 2) in violations


class TestNumericSpot:
    def test_monomial_hessian(self):
        assert numeric_log_concavity_spot(poly("vars: 2\nx1 x2"), [(1, 1)])

    def test_normalized_schur_spot(self):
        h = normalize(schur((2, 0), 2))
        rng = random.Random(7)
        points = [
            (Fraction(rng.randint(1, 8), 2), Fraction(rng.randint(1, 8), 2))
            for _ in range(10)
        ]
        assert numeric_log_concavity_spot(h, points)

    def test_informational_on_unnormalized(self):
        # not certified Lorentzian, yet log-concavity can still hold pointwise;
        # record the outcome without asserting a particular verdict
        outcome = numeric_log_concavity_spot(schur((2, 0), 2), [(1, 1)])
        assert outcome in (True, False)

    def test_rejects_nonpositive_point(self):
        with pytest.raises(ValueError):
            numeric_log_concavity_spot(poly("vars: 2\nx1 x2"), [(0, 1)])
