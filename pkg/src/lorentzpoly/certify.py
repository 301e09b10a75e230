"""Exact decision procedures for the Lorentzian property and log-concavity.

A homogeneous polynomial of degree d with nonnegative coefficients is
Lorentzian when its support satisfies the symmetric exchange axiom
(M-convexity) and, for every multiset of d - 2 derivative indices, the
resulting quadratic form has at most one positive eigenvalue.  Degree at
most 1 and the zero polynomial are Lorentzian exactly when coefficients
are nonnegative and the support is M-convex.

Eigenvalue sign counts are computed exactly: scale the rational symmetric
matrix to integers (inertia is invariant under positive scaling), take the
characteristic polynomial by the Faddeev-LeVerrier recursion, strip the
power of t dividing it, and count sign variations of the remaining
coefficients.  Sign variations equal the positive-root count because a
symmetric matrix has an all-real spectrum.

Mixed partial derivatives commute, so derivative index sequences and
multisets give identical quadratic forms; the certifier therefore
enumerates sorted multisets only.  The quadratic form of the order-(d-2)
derivative is read off termwise from the coefficients of the input: for a
multiset with multiplicity vector a, the x_i x_j coefficient of the
derivative is coeff(a + e_i + e_j) (a_i + 1)(a_j + 1) prod_k a_k! and the
x_i^2 coefficient is coeff(a + 2 e_i) (a_i + 2)(a_i + 1) prod_k a_k! / 2.
Dropping the shared positive factor prod_k a_k! / 2 leaves an integer
matrix with the same inertia.  Witness re-verification goes the other way,
through the public derivative chain, so each verdict is covered by two
independent routes.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from . import univariate
from .polynomials import Polynomial

LORENTZIAN = "Lorentzian"
NOT_LORENTZIAN = "NotLorentzian"

CHECK_HOMOGENEOUS = "homogeneous"
CHECK_NONNEGATIVE = "nonnegative_coefficients"
CHECK_M_CONVEX = "m_convex_support"
CHECK_HESSIANS = "hessian_spectra"


# -- M-convexity ---------------------------------------------------------


def m_convex_failure(points):
    """First violation of the exchange axiom, or None when M-convex.

    A violation is a triple (alpha, beta, i) with alpha_i > beta_i and no
    index j with alpha_j < beta_j, alpha - e_i + e_j and beta - e_j + e_i
    both in the set.  Points are scanned in sorted order so the returned
    witness is deterministic.
    """
    pts = sorted(tuple(p) for p in points)
    if pts:
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise ValueError("mixed arity in support set")
    index = set(pts)

    def exchange_ok(alpha, beta, i):
        for j in range(len(alpha)):
            if alpha[j] >= beta[j]:
                continue
            moved_a = list(alpha)
            moved_a[i] -= 1
            moved_a[j] += 1
            if tuple(moved_a) not in index:
                continue
            moved_b = list(beta)
            moved_b[j] -= 1
            moved_b[i] += 1
            if tuple(moved_b) in index:
                return True
        return False

    for a_pos, alpha in enumerate(pts):
        for beta in pts[a_pos + 1 :]:
            for i in range(len(alpha)):
                if alpha[i] > beta[i]:
                    if not exchange_ok(alpha, beta, i):
                        return (alpha, beta, i + 1)
                elif beta[i] > alpha[i]:
                    if not exchange_ok(beta, alpha, i):
                        return (beta, alpha, i + 1)
    return None


def is_m_convex(points) -> bool:
    return m_convex_failure(points) is None


# -- exact symmetric matrices and inertia --------------------------------


class InertiaSignature(NamedTuple):
    positive: int
    negative: int
    zero: int

    def to_dict(self):
        return {"positive": self.positive, "negative": self.negative, "zero": self.zero}


class SymmetricMatrix:
    """Exactly symmetric rational matrix."""

    __slots__ = ("dimension", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(v) for v in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) differ")
        self.dimension = n
        self.rows = rows

    def entry(self, i: int, j: int) -> Fraction:
        """1-based access."""
        return self.rows[i - 1][j - 1]

    def __eq__(self, other):
        if not isinstance(other, SymmetricMatrix):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        return f"SymmetricMatrix({[list(r) for r in self.rows]})"


def _char_poly_int(rows) -> list:
    """det(tI - B) for an integer matrix B, ascending coefficients.

    Faddeev-LeVerrier: M_1 = B, c_k = -tr(M_k)/k, M_{k+1} = B(M_k + c_k I).
    All intermediate matrices and coefficients stay integral.
    """
    n = len(rows)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m_k = [row[:] for row in rows]
    for k in range(1, n + 1):
        trace = sum(m_k[i][i] for i in range(n))
        c, rem = divmod(-trace, k)
        assert rem == 0, "Faddeev-LeVerrier trace must divide exactly"
        coeffs[n - k] = c
        if k == n:
            break
        for i in range(n):
            m_k[i][i] += c
        m_k = [
            [sum(rows[i][t] * m_k[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return coeffs


def _integer_scaled(matrix: SymmetricMatrix):
    """Integer matrix L * M for the least positive L clearing denominators."""
    scale = 1
    for row in matrix.rows:
        for value in row:
            scale = scale * value.denominator // math.gcd(scale, value.denominator)
    return [[int(v * scale) for v in row] for row in matrix.rows], scale


def characteristic_polynomial(matrix: SymmetricMatrix) -> list:
    """Monic det(tI - M), ascending Fraction coefficients."""
    scaled, scale = _integer_scaled(matrix)
    coeffs = _char_poly_int(scaled)
    n = matrix.dimension
    # eigenvalues of L*M are L times those of M
    return [Fraction(c, scale ** (n - k)) for k, c in enumerate(coeffs)]


def _signature_from_char_coeffs(coeffs, n: int) -> InertiaSignature:
    reduced, zero = univariate.strip_zero_root([Fraction(c) for c in coeffs])
    positive = univariate.descartes_positive_roots(reduced)
    return InertiaSignature(positive, n - zero - positive, zero)


def inertia(matrix: SymmetricMatrix) -> InertiaSignature:
    """Exact eigenvalue sign counts (positive, negative, zero)."""
    scaled, _ = _integer_scaled(matrix)
    return _signature_from_char_coeffs(_char_poly_int(scaled), matrix.dimension)


def quadratic_form_matrix(q: Polynomial) -> SymmetricMatrix:
    """Symmetric matrix of a homogeneous quadratic: H_ii = coeff(x_i^2),
    H_ij = coeff(x_i x_j) / 2."""
    if q and q.homogeneous_degree() != 2:
        raise ValueError("polynomial must be homogeneous of degree 2 (or zero)")
    n = q.arity
    rows = [[Fraction(0)] * n for _ in range(n)]
    for exponent, coeff in q.terms.items():
        hot = [i for i, e in enumerate(exponent) if e]
        if len(hot) == 1:
            rows[hot[0]][hot[0]] = coeff
        else:
            i, j = hot
            rows[i][j] = coeff / 2
            rows[j][i] = coeff / 2
    return SymmetricMatrix(rows)


# -- certificates --------------------------------------------------------


@dataclass(frozen=True)
class NegativeCoefficient:
    exponent: tuple
    kind = "negative_coefficient"

    def to_dict(self):
        return {"kind": self.kind, "exponent": list(self.exponent)}


@dataclass(frozen=True)
class NotHomogeneous:
    degrees: tuple
    kind = "not_homogeneous"

    def to_dict(self):
        return {"kind": self.kind, "degrees": list(self.degrees)}


@dataclass(frozen=True)
class SupportNotMConvex:
    alpha: tuple
    beta: tuple
    index: int
    kind = "support_not_m_convex"

    def to_dict(self):
        return {
            "kind": self.kind,
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "index": self.index,
        }


@dataclass(frozen=True)
class HessianFailure:
    multiset: tuple
    inertia: InertiaSignature
    kind = "hessian_failure"

    def to_dict(self):
        return {
            "kind": self.kind,
            "multiset": list(self.multiset),
            "inertia": self.inertia.to_dict(),
        }


Failure = Union[NegativeCoefficient, NotHomogeneous, SupportNotMConvex, HessianFailure]


@dataclass(frozen=True)
class LorentzCertificate:
    verdict: str
    arity: int
    degree: Optional[int]
    checks: tuple
    failure: Optional[Failure] = None

    @property
    def is_lorentzian(self) -> bool:
        return self.verdict == LORENTZIAN

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "arity": self.arity,
            "degree": self.degree,
            "checks": list(self.checks),
            "failure": self.failure.to_dict() if self.failure else None,
        }


def _failure_certificate(poly, degree, checks, failure):
    return LorentzCertificate(NOT_LORENTZIAN, poly.arity, degree, tuple(checks), failure)


def _derivative_candidates(terms, n: int):
    """Multiplicity vectors a with |a| = d - 2 under some support point."""
    seen = set()
    for exponent in terms:
        for i in range(n):
            if exponent[i] == 0:
                continue
            for j in range(i, n):
                alpha = list(exponent)
                alpha[i] -= 1
                alpha[j] -= 1
                if alpha[i] >= 0 and alpha[j] >= 0:
                    seen.add(tuple(alpha))
    return seen


def _multiset_indices(alpha) -> tuple:
    """1-based derivative indices of a multiplicity vector, sorted."""
    out = []
    for i, reps in enumerate(alpha, start=1):
        out.extend([i] * reps)
    return tuple(out)


def lorentzian_certify(poly: Polynomial) -> LorentzCertificate:
    """Decide the Lorentzian property with a re-checkable witness on failure.

    Checks run in order: homogeneity, coefficient signs, M-convexity of the
    support, then the spectrum of every order-(d-2) derivative quadratic
    form.  The first failing multiset in lexicographic order is reported.
    """
    checks = []
    degrees = sorted({sum(e) for e in poly.terms})
    if len(degrees) > 1:
        return _failure_certificate(
            poly, None, checks, NotHomogeneous((degrees[0], degrees[-1]))
        )
    checks.append(CHECK_HOMOGENEOUS)
    degree = degrees[0] if degrees else None

    for exponent in sorted(poly.terms):
        if poly.terms[exponent] < 0:
            return _failure_certificate(
                poly, degree, checks, NegativeCoefficient(exponent)
            )
    checks.append(CHECK_NONNEGATIVE)

    witness = m_convex_failure(poly.terms)
    if witness is not None:
        return _failure_certificate(
            poly, degree, checks, SupportNotMConvex(*witness)
        )
    checks.append(CHECK_M_CONVEX)

    if degree is not None and degree >= 2:
        n = poly.arity
        scale = 1
        for coeff in poly.terms.values():
            scale = scale * coeff.denominator // math.gcd(scale, coeff.denominator)
        coeffs = {e: int(c * scale) for e, c in poly.terms.items()}
        candidates = sorted(
            _derivative_candidates(coeffs, n), key=_multiset_indices
        )
        zero_row = [0] * n
        for alpha in candidates:
            matrix = [zero_row[:] for _ in range(n)]
            nonzero = False
            for i in range(n):
                up_i = alpha[:i] + (alpha[i] + 2,) + alpha[i + 1 :]
                c = coeffs.get(up_i)
                if c:
                    matrix[i][i] = c * (alpha[i] + 2) * (alpha[i] + 1)
                    nonzero = True
                for j in range(i + 1, n):
                    up = list(alpha)
                    up[i] += 1
                    up[j] += 1
                    c = coeffs.get(tuple(up))
                    if c:
                        value = c * (alpha[i] + 1) * (alpha[j] + 1)
                        matrix[i][j] = value
                        matrix[j][i] = value
                        nonzero = True
            if not nonzero:
                continue
            signature = _signature_from_char_coeffs(_char_poly_int(matrix), n)
            if signature.positive > 1:
                return _failure_certificate(
                    poly,
                    degree,
                    checks,
                    HessianFailure(_multiset_indices(alpha), signature),
                )
        checks.append(CHECK_HESSIANS)

    return LorentzCertificate(LORENTZIAN, poly.arity, degree, tuple(checks))


def verify_certificate(poly: Polynomial, certificate: LorentzCertificate) -> bool:
    """Re-check a failure witness through the public operations only.

    Hessian witnesses are re-derived with repeated partial derivatives and
    the quadratic form constructor, independently of the coefficient
    formula used inside ``lorentzian_certify``.
    """
    if certificate.is_lorentzian:
        return certificate.failure is None
    failure = certificate.failure
    if failure is None:
        return False
    if isinstance(failure, NotHomogeneous):
        lo, hi = failure.degrees
        present = {sum(e) for e in poly.terms}
        return lo in present and hi in present and lo != hi
    if isinstance(failure, NegativeCoefficient):
        return poly.coefficient(failure.exponent) < 0
    if isinstance(failure, SupportNotMConvex):
        support = poly.support()
        alpha, beta, index = failure.alpha, failure.beta, failure.index
        i = index - 1
        if alpha not in support or beta not in support or alpha[i] <= beta[i]:
            return False
        for j in range(len(alpha)):
            if alpha[j] >= beta[j]:
                continue
            moved_a = list(alpha)
            moved_a[i] -= 1
            moved_a[j] += 1
            moved_b = list(beta)
            moved_b[j] -= 1
            moved_b[i] += 1
            if tuple(moved_a) in support and tuple(moved_b) in support:
                return False
        return True
    if isinstance(failure, HessianFailure):
        derivative = poly
        for index in failure.multiset:
            derivative = derivative.partial_derivative(index)
        signature = inertia(quadratic_form_matrix(derivative))
        return signature == failure.inertia and signature.positive >= 2
    return False


# -- bivariate criterion and coefficient log-concavity --------------------


def bivariate_ulc(poly: Polynomial) -> bool:
    """Exact ultra-log-concavity test for bivariate homogeneous polynomials.

    With h = sum a_k x1^k x2^(d-k), requires the sequence a_0..a_d to have
    no internal zeros and a_k^2 / C(d,k)^2 >= (a_{k-1}/C(d,k-1)) *
    (a_{k+1}/C(d,k+1)) for 0 < k < d.  Serves as an independent oracle for
    ``lorentzian_certify`` on bivariate inputs.
    """
    if poly.arity != 2:
        raise ValueError("bivariate test requires arity 2")
    if not poly:
        return True
    d = poly.homogeneous_degree()
    if d is None:
        raise ValueError("polynomial must be homogeneous")
    seq = [poly.coefficient((k, d - k)) for k in range(d + 1)]
    if any(c < 0 for c in seq):
        raise ValueError("coefficients must be nonnegative")
    hot = [k for k, c in enumerate(seq) if c]
    if hot and hot[-1] - hot[0] + 1 != len(hot):
        return False  # internal zero
    for k in range(1, d):
        lhs = (seq[k] / math.comb(d, k)) ** 2
        rhs = (seq[k - 1] / math.comb(d, k - 1)) * (seq[k + 1] / math.comb(d, k + 1))
        if lhs < rhs:
            return False
    return True


def discrete_root_log_concavity(poly: Polynomial, mu, i: int, j: int) -> bool:
    """coeff(mu)^2 >= coeff(mu + e_i - e_j) * coeff(mu + e_j - e_i), exactly.

    Indices are 1-based; an exponent with a negative entry contributes 0.
    """
    if i == j:
        raise ValueError("indices must differ")
    mu = tuple(int(x) for x in mu)

    def coeff_at(shift_up, shift_down):
        e = list(mu)
        e[shift_up - 1] += 1
        e[shift_down - 1] -= 1
        if e[shift_down - 1] < 0:
            return Fraction(0)
        return poly.coefficient(e)

    center = poly.coefficient(mu) if all(x >= 0 for x in mu) else Fraction(0)
    return center * center >= coeff_at(i, j) * coeff_at(j, i)


def root_direction_violations(poly: Polynomial):
    """All (mu, i, j) where the root-direction log-concavity check fails.

    For each direction e_i - e_j the support splits into lines; every
    integer point of each line, padded by one step on both ends, is
    checked.  Points farther out have all three relevant coefficients zero,
    so this finite scan covers every mu in Z^n.
    """
    violations = []
    n = poly.arity
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            lines = {}
            for exponent in poly.terms:
                rest = tuple(
                    e for k, e in enumerate(exponent) if k not in (i - 1, j - 1)
                )
                key = (exponent[i - 1] + exponent[j - 1], rest)
                lines.setdefault(key, []).append(exponent)
            for members in lines.values():
                positions = sorted(e[i - 1] for e in members)
                base = members[0]
                total = base[i - 1] + base[j - 1]
                for t in range(positions[0] - 1, positions[-1] + 2):
                    mu = list(base)
                    mu[i - 1] = t
                    mu[j - 1] = total - t
                    if mu[j - 1] < 0 or t < 0:
                        continue
                    if not discrete_root_log_concavity(poly, mu, i, j):
                        violations.append((tuple(mu), i, j))
    return violations


# -- advisory numeric check ------------------------------------------------


def numeric_log_concavity_spot(poly: Polynomial, points, tol: float = 1e-8) -> bool:
    """Numerically test concavity of log(h) at strictly positive points.

    The Hessian of log h is assembled exactly as (h * H(h) - grad grad^T) / h^2
    with rational arithmetic, then its eigenvalues are taken in floating
    point and compared against ``tol``.  Advisory only; never a
    certification path.
    """
    import numpy as np

    if not poly:
        raise ValueError("polynomial must be nonzero")
    n = poly.arity
    grads = [poly.partial_derivative(i) for i in range(1, n + 1)]
    hess = [
        [grads[i].partial_derivative(j + 1) for j in range(n)] for i in range(n)
    ]
    for point in points:
        point = [Fraction(v) for v in point]
        if any(v <= 0 for v in point):
            raise ValueError("points must be strictly positive")
        value = poly.evaluate(point)
        assert value > 0, "nonzero nonnegative polynomial is positive on the open orthant"
        grad = [g.evaluate(point) for g in grads]
        matrix = np.array(
            [
                [
                    float(hess[i][j].evaluate(point) / value - grad[i] * grad[j] / value**2)
                    for j in range(n)
                ]
                for i in range(n)
            ]
        )
        eigenvalues = np.linalg.eigvalsh(matrix)
        if eigenvalues[-1] > tol:
            return False
    return True
