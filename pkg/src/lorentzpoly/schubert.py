"""Permutation combinatorics and divided-difference polynomial generators.

Schubert polynomials descend from the staircase monomial of the longest
permutation via divided differences; Grothendieck polynomials use the
isobaric variant pi_i = d_i - d_i (x_{i+1} * .); key polynomials sort a
composition toward a partition applying d_i (x_i * .) at each ascent.
Both recursions are deterministic (the smallest usable index is always
chosen) and path-independent, which the tests verify directly.

Degree polynomials sum, over saturated chains of the Bruhat order, the
product of the linear forms x_i + ... + x_{j-1} attached to each cover by
the transposed positions i < j.
"""

import itertools

from .polynomials import (
    Polynomial,
    divide_by_variable_difference,
    normalize,
    swap_variables,
)


class Permutation:
    """A permutation of 1..n in one-line notation."""

    __slots__ = ("one_line",)

    def __init__(self, one_line):
        one_line = tuple(int(v) for v in one_line)
        n = len(one_line)
        if n == 0 or sorted(one_line) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {one_line}")
        self.one_line = one_line

    @property
    def n(self) -> int:
        return len(self.one_line)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    @classmethod
    def from_string(cls, text: str) -> "Permutation":
        """Accepts one-line notation as digits ('1432') or comma form ('1,4,3,2')."""
        text = text.strip()
        if "," in text:
            return cls(int(v) for v in text.split(","))
        return cls(int(ch) for ch in text)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.one_line == other.one_line

    def __hash__(self):
        return hash(self.one_line)

    def __repr__(self):
        return f"Permutation({''.join(str(v) for v in self.one_line)})"

    def __call__(self, i: int) -> int:
        """Value at position i (1-based)."""
        return self.one_line[i - 1]

    def length(self) -> int:
        """Number of inversions."""
        line = self.one_line
        return sum(
            1
            for i in range(len(line))
            for j in range(i + 1, len(line))
            if line[i] > line[j]
        )

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.one_line))

    def swap_positions(self, i: int, j: int) -> "Permutation":
        """Right multiplication by the transposition of positions i < j."""
        line = list(self.one_line)
        line[i - 1], line[j - 1] = line[j - 1], line[i - 1]
        return Permutation(line)

    def descents(self):
        """Positions i with w(i) > w(i+1)."""
        return [
            i + 1
            for i in range(len(self.one_line) - 1)
            if self.one_line[i] > self.one_line[i + 1]
        ]

    def ascents(self):
        """Positions i with w(i) < w(i+1)."""
        return [
            i + 1
            for i in range(len(self.one_line) - 1)
            if self.one_line[i] < self.one_line[i + 1]
        ]


def all_permutations(n: int):
    for line in itertools.permutations(range(1, n + 1)):
        yield Permutation(line)


def lehmer_code(w: Permutation) -> tuple:
    """L(w)_i = number of j > i with w(j) < w(i)."""
    line = w.one_line
    return tuple(
        sum(1 for j in range(i + 1, len(line)) if line[j] < line[i])
        for i in range(len(line))
    )


def permutation_from_code(code) -> Permutation:
    """Inverse of ``lehmer_code``."""
    code = list(code)
    available = list(range(1, len(code) + 1))
    line = []
    for c in code:
        if c >= len(available):
            raise ValueError(f"invalid Lehmer code {tuple(code)}")
        line.append(available.pop(c))
    return Permutation(line)


def grassmannian_for(kappa, m: int, n: int) -> Permutation:
    """The permutation in S_n with code (kappa_m, ..., kappa_1, 0, ..., 0).

    It has at most one descent, located at position m, and its Schubert
    polynomial equals the Schur polynomial of kappa in x_1 .. x_m.
    """
    parts = tuple(kappa.parts if hasattr(kappa, "parts") else kappa)
    parts = parts + (0,) * (m - len(parts))
    if len(parts) > m:
        raise ValueError(f"kappa has more than {m} parts")
    if n < m + parts[0]:
        raise ValueError(f"need n >= {m + parts[0]}, got {n}")
    code = tuple(parts[m - 1 - i] for i in range(m)) + (0,) * (n - m)
    w = permutation_from_code(code)
    assert all(d == m for d in w.descents())
    return w


def avoids_pattern(w: Permutation, pattern: Permutation) -> bool:
    """True when no subsequence of w is order-isomorphic to the pattern."""
    line = w.one_line
    k = pattern.n
    target = pattern.one_line
    for positions in itertools.combinations(range(len(line)), k):
        values = [line[p] for p in positions]
        ranks = sorted(range(k), key=lambda t: values[t])
        pattern_of_values = [0] * k
        for rank, t in enumerate(ranks, start=1):
            pattern_of_values[t] = rank
        if tuple(pattern_of_values) == target:
            return False
    return True


class BruhatCover:
    """A covering relation lower < upper = lower * t(i, j) with i < j."""

    __slots__ = ("lower", "upper", "i", "j")

    def __init__(self, lower: Permutation, upper: Permutation, i: int, j: int):
        if not (1 <= i < j <= lower.n):
            raise ValueError(f"bad transposition positions ({i}, {j})")
        if lower.swap_positions(i, j) != upper:
            raise ValueError("upper is not lower transposed at (i, j)")
        if upper.length() != lower.length() + 1:
            raise ValueError("not a covering relation: length must rise by 1")
        self.lower = lower
        self.upper = upper
        self.i = i
        self.j = j

    def __repr__(self):
        return f"BruhatCover({self.lower!r} < {self.upper!r} via ({self.i},{self.j}))"

    def chevalley_multiplicity(self, arity: int) -> Polynomial:
        """The linear form x_i + ... + x_{j-1} in the given arity."""
        terms = {}
        for k in range(self.i, self.j):
            exponent = [0] * arity
            exponent[k - 1] = 1
            terms[tuple(exponent)] = 1
        return Polynomial(arity, terms)


def bruhat_covers(w: Permutation):
    """All upward covers w < w t(i, j), ordered by (i, j)."""
    length = w.length()
    covers = []
    for i in range(1, w.n):
        for j in range(i + 1, w.n + 1):
            upper = w.swap_positions(i, j)
            if upper.length() == length + 1:
                covers.append(BruhatCover(w, upper, i, j))
    return covers


def _lower_covers(w: Permutation):
    length = w.length()
    out = []
    for i in range(1, w.n):
        for j in range(i + 1, w.n + 1):
            lower = w.swap_positions(i, j)
            if lower.length() == length - 1:
                out.append(BruhatCover(lower, w, i, j))
    return out


# -- operator machinery --------------------------------------------------


def divided_difference(poly: Polynomial, i: int) -> Polynomial:
    """(p - p with x_i, x_{i+1} swapped) / (x_i - x_{i+1}), exactly."""
    if not 1 <= i < poly.arity:
        raise ValueError(f"index {i} out of range 1..{poly.arity - 1}")
    numerator = poly - swap_variables(poly, i, i + 1)
    # the numerator is antisymmetric in x_i, x_{i+1}, so division is exact
    return divide_by_variable_difference(numerator, i, i + 1)


def demazure_pi(poly: Polynomial, i: int) -> Polynomial:
    """Isobaric operator pi_i p = d_i(p) - d_i(x_{i+1} p)."""
    if not 1 <= i < poly.arity:
        raise ValueError(f"index {i} out of range 1..{poly.arity - 1}")
    shifted = Polynomial.variable(poly.arity, i + 1) * poly
    return divided_difference(poly, i) - divided_difference(shifted, i)


def staircase_monomial(n: int) -> Polynomial:
    """x_1^{n-1} x_2^{n-2} ... x_{n-1}."""
    return Polynomial.monomial(n, tuple(range(n - 1, -1, -1)))


def _descent_recursion(w: Permutation, apply_op, top_value, cache):
    """Shared engine: walk up the weak order to the longest element.

    For a non-longest w the smallest ascent i gives w s_i of length + 1 and
    the generator of w is op_i applied to the generator of w s_i.
    """
    key = w.one_line
    if cache is not None and key in cache:
        return cache[key]
    ascents = w.ascents()
    if not ascents:
        result = top_value
    else:
        i = ascents[0]
        taller = w.swap_positions(i, i + 1)
        result = apply_op(_descent_recursion(taller, apply_op, top_value, cache), i)
    if cache is not None:
        cache[key] = result
    return result


def schubert(w: Permutation, cache: dict | None = None) -> Polynomial:
    """Schubert polynomial of w, via divided differences from the staircase."""
    return _descent_recursion(w, divided_difference, staircase_monomial(w.n), cache)


def grothendieck(w: Permutation, cache: dict | None = None) -> Polynomial:
    """Grothendieck polynomial of w, via isobaric operators from the staircase."""
    return _descent_recursion(w, demazure_pi, staircase_monomial(w.n), cache)


def schubert_dual(w: Permutation, cache: dict | None = None) -> Polynomial:
    """Normalized reflection x^(n-1,...,n-1) * S_w(1/x), then normalize."""
    n = w.n
    return normalize(schubert(w, cache).dualize((n - 1,) * n))


def grothendieck_component(w: Permutation, k: int, cache: dict | None = None) -> Polynomial:
    """Homogeneous piece of the Grothendieck polynomial in degree l(w) + k."""
    if k < 0:
        raise ValueError("component index must be nonnegative")
    return grothendieck(w, cache).homogeneous_component(w.length() + k)


def homogeneous_grothendieck(w: Permutation, cache: dict | None = None) -> Polynomial:
    """Degree-equalized Grothendieck polynomial in n + 1 variables (z last).

    Component k is weighted by (-1)^k z^(d - l - k) where d is the degree of
    the Grothendieck polynomial and l the length of w, so every term of the
    alternating sum reaches total degree d.
    """
    n = w.n
    g = grothendieck(w, cache)
    ell = w.length()
    d = g.total_degree() if g else ell
    total = Polynomial.zero(n + 1)
    for k in range(0, d - ell + 1):
        piece = g.homogeneous_component(ell + k).with_arity(n + 1)
        z_power = Polynomial.monomial(n + 1, (0,) * n + (d - ell - k,))
        total = total + piece * z_power * ((-1) ** k)
    return total


def key_polynomial(mu) -> Polynomial:
    """Key polynomial of a composition, by sorting toward a partition.

    A weakly decreasing mu gives the monomial x^mu; at the smallest ascent
    i the operator d_i (x_i * .) applied to the key of mu with positions
    i, i+1 swapped gives the key of mu.
    """
    mu = tuple(int(x) for x in mu)
    if any(x < 0 for x in mu):
        raise ValueError("composition entries must be nonnegative")
    n = len(mu)
    if n == 0:
        raise ValueError("empty composition")

    def build(comp):
        for i in range(n - 1):
            if comp[i] < comp[i + 1]:
                swapped = comp[:i] + (comp[i + 1], comp[i]) + comp[i + 2 :]
                inner = Polynomial.variable(n, i + 1) * build(swapped)
                return divided_difference(inner, i + 1)
        return Polynomial.monomial(n, comp)

    return build(mu)


def degree_polynomial(w: Permutation) -> Polynomial:
    """Sum over saturated Bruhat chains from the identity to w of the
    product of Chevalley multiplicities; a polynomial in n - 1 variables
    (one variable when n = 1, where the only chain is empty)."""
    arity = max(1, w.n - 1)

    def chains(u: Permutation) -> Polynomial:
        if u.is_identity():
            return Polynomial.constant(arity, 1)
        total = Polynomial.zero(arity)
        for cover in _lower_covers(u):
            total = total + cover.chevalley_multiplicity(arity) * chains(cover.lower)
        return total

    return chains(w)
