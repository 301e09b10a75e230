"""Independent cross-check routes for the primary algorithms.

Each function here recomputes something the main modules produce, by a
deliberately different method: Schur polynomials as a ratio of alternants
(versus tableau enumeration), characteristic polynomials by minor
expansion over column subsets (versus the Faddeev-LeVerrier recursion),
and eigenvalue sign counts by Sturm-chain interval bracketing refined
until every root is separated from zero (versus Descartes counting).
"""

import itertools
from fractions import Fraction

from . import univariate
from .certify import InertiaSignature, SymmetricMatrix
from .polynomials import Polynomial, divide_by_variable_difference
from .symmetric import Partition


def _alternant(exponents, m: int) -> Polynomial:
    """det(x_i^{a_j}) expanded as a signed permutation sum."""
    terms = {}
    for perm in itertools.permutations(range(m)):
        sign = 1
        for i in range(m):
            for j in range(i + 1, m):
                if perm[i] > perm[j]:
                    sign = -sign
        exponent = tuple(exponents[perm[i]] for i in range(m))
        terms[exponent] = terms.get(exponent, 0) + sign
    return Polynomial(m, {e: Fraction(c) for e, c in terms.items() if c})


def schur_bialternant(lam, m: int) -> Polynomial:
    """Schur polynomial as det(x_i^{lam_j + m - j}) / det(x_i^{m - j}).

    The denominator is the Vandermonde product of the x_i - x_j, divided
    out exactly one binomial at a time.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if len(lam) > m:
        return Polynomial.zero(m)
    numerator = _alternant([lam.part(j) + m - j for j in range(1, m + 1)], m)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            numerator = divide_by_variable_difference(numerator, i, j)
    return numerator


def characteristic_polynomial_by_minors(matrix: SymmetricMatrix) -> list:
    """det(tI - M) by expansion over column subsets, ascending coefficients.

    g[S] is the determinant of the submatrix of tI - M on rows 1..|S| and
    column set S, built up one row at a time with univariate coefficient
    lists in t.
    """
    n = matrix.dimension
    minors = {(): [Fraction(1)]}
    for size in range(1, n + 1):
        row = size - 1
        nxt = {}
        for cols in itertools.combinations(range(n), size):
            total = []
            for pos, col in enumerate(cols):
                entry = [-matrix.rows[row][col]]
                if col == row:
                    entry.append(Fraction(1))
                sub = minors[cols[:pos] + cols[pos + 1 :]]
                product = [Fraction(0)] * (len(entry) + len(sub) - 1)
                for a, ca in enumerate(entry):
                    for b, cb in enumerate(sub):
                        product[a + b] += ca * cb
                if pos % 2:
                    product = [-c for c in product]
                width = max(len(total), len(product))
                total = [
                    (total[k] if k < len(total) else Fraction(0))
                    + (product[k] if k < len(product) else Fraction(0))
                    for k in range(width)
                ]
            nxt[cols] = univariate.trim(total) or [Fraction(0)]
        minors = nxt
    return minors[tuple(range(n))]


def _bracket_sign_counts(squarefree):
    """(positive, negative) distinct-root counts for a squarefree polynomial.

    Roots are bracketed in disjoint rational intervals by bisection, each
    bracket refined until it lies entirely on one side of zero.
    """
    chain = univariate.sturm_chain(squarefree)
    bound = univariate.cauchy_root_bound(squarefree)
    positive = negative = 0
    queue = [(-bound, bound)]
    while queue:
        lo, hi = queue.pop()
        count = univariate.count_real_roots_in(squarefree, lo, hi, chain=chain)
        if count == 0:
            continue
        if count == 1 and lo >= 0:
            positive += 1
            continue
        if count == 1 and hi <= 0:
            negative += 1
            continue
        mid = Fraction(0) if lo < 0 < hi else (lo + hi) / 2
        queue.append((lo, mid))
        queue.append((mid, hi))
    return positive, negative


def inertia_by_sturm_bracketing(matrix: SymmetricMatrix) -> InertiaSignature:
    """Sign counts via square-free factorization and Sturm bracketing.

    The power of t is stripped first (zero count); each square-free factor
    of the rest has simple roots, which are isolated by bisection and
    classified by sign, weighted with the factor's multiplicity.
    """
    n = matrix.dimension
    coeffs = characteristic_polynomial_by_minors(matrix)
    reduced, zero = univariate.strip_zero_root(coeffs)
    positive = negative = 0
    if univariate.degree(reduced) >= 1:
        for factor, multiplicity in univariate.squarefree_decomposition(reduced):
            pos, neg = _bracket_sign_counts(factor)
            positive += multiplicity * pos
            negative += multiplicity * neg
    assert positive + negative + zero == n, "all eigenvalues of a symmetric matrix are real"
    return InertiaSignature(positive, negative, zero)
