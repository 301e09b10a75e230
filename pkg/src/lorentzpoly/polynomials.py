"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial in ``m`` variables x1, ..., xm is a finite map from exponent
vectors (tuples of ``m`` nonnegative ints) to nonzero ``Fraction``
coefficients.  The zero polynomial is the empty map.  All arithmetic is
exact; nothing in this module touches floating point.

The module also provides the normalization operator ``normalize`` sending
each monomial x^mu to x^mu / mu! (componentwise factorials), its extension
``normalize_shifted`` to shifted Laurent polynomials (negative-exponent
terms are discarded before normalizing), and the canonical text format
used by the command line tools and the bundled corpus files.

Variable indices in the public API are 1-based, matching the x1, x2, ...
naming of the text format.
"""

import math
import re
from fractions import Fraction

Exponent = tuple[int, ...]

_ZERO = Fraction(0)


class PolynomialSyntaxError(ValueError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


def _factorial_product(exponent: Exponent) -> int:
    prod = 1
    for e in exponent:
        if e > 1:
            prod *= math.factorial(e)
    return prod


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples to nonzero Fractions and must be treated
    as read-only; every operation returns a fresh Polynomial.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms=None):
        if arity < 1:
            raise ValueError(f"arity must be positive, got {arity}")
        canonical: dict[Exponent, Fraction] = {}
        for exponent, coeff in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != arity:
                raise ValueError(
                    f"exponent {exponent} has length {len(exponent)}, expected {arity}"
                )
            if any(e < 0 for e in exponent):
                raise ValueError(f"negative exponent in {exponent}")
            coeff = Fraction(coeff)
            if coeff:
                canonical[exponent] = canonical.get(exponent, _ZERO) + coeff
                if not canonical[exponent]:
                    del canonical[exponent]
        self.arity = arity
        self.terms = canonical

    @classmethod
    def _raw(cls, arity: int, terms: dict) -> "Polynomial":
        # Internal fast path: terms must already be canonical.
        poly = object.__new__(cls)
        poly.arity = arity
        poly.terms = terms
        return poly

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "Polynomial":
        return cls(arity)

    @classmethod
    def constant(cls, arity: int, value) -> "Polynomial":
        return cls(arity, {(0,) * arity: Fraction(value)})

    @classmethod
    def variable(cls, arity: int, index: int) -> "Polynomial":
        """The polynomial x_index (index is 1-based)."""
        if not 1 <= index <= arity:
            raise ValueError(f"variable index {index} out of range 1..{arity}")
        exponent = [0] * arity
        exponent[index - 1] = 1
        return cls(arity, {tuple(exponent): Fraction(1)})

    @classmethod
    def monomial(cls, arity: int, exponent, coeff=1) -> "Polynomial":
        return cls(arity, {tuple(exponent): Fraction(coeff)})

    # -- basic queries ------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"Polynomial({self.arity}, {format_terms(self)!r})"

    def coefficient(self, exponent) -> Fraction:
        return self.terms.get(tuple(exponent), _ZERO)

    def support(self) -> frozenset:
        return frozenset(self.terms)

    def total_degree(self) -> int:
        """Max total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, index: int) -> int:
        """Max exponent of x_index across terms (0 for the zero polynomial)."""
        if not 1 <= index <= self.arity:
            raise ValueError(f"variable index {index} out of range 1..{self.arity}")
        if not self.terms:
            return 0
        i = index - 1
        return max(e[i] for e in self.terms)

    def homogeneous_degree(self):
        """Common total degree of all terms, or None if mixed or zero."""
        degrees = {sum(e) for e in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        out = dict(self.terms)
        for exponent, coeff in other.terms.items():
            acc = out.get(exponent, _ZERO) + coeff
            if acc:
                out[exponent] = acc
            else:
                out.pop(exponent, None)
        return Polynomial._raw(self.arity, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            if not scalar:
                return Polynomial._raw(self.arity, {})
            return Polynomial._raw(
                self.arity, {e: c * scalar for e, c in self.terms.items()}
            )
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exponent = tuple(a + b for a, b in zip(ea, eb))
                acc = out.get(exponent, _ZERO) + ca * cb
                if acc:
                    out[exponent] = acc
                else:
                    del out[exponent]
        return Polynomial._raw(self.arity, out)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "Polynomial":
        if power < 0:
            raise ValueError("negative powers are not supported")
        result = Polynomial.constant(self.arity, 1)
        for _ in range(power):
            result = result * self
        return result

    # -- calculus and structural operations ----------------------------

    def partial_derivative(self, index: int) -> "Polynomial":
        """Formal partial derivative with respect to x_index (1-based)."""
        if not 1 <= index <= self.arity:
            raise ValueError(f"variable index {index} out of range 1..{self.arity}")
        i = index - 1
        out: dict[Exponent, Fraction] = {}
        for exponent, coeff in self.terms.items():
            k = exponent[i]
            if k == 0:
                continue
            lowered = exponent[:i] + (k - 1,) + exponent[i + 1 :]
            out[lowered] = out.get(lowered, _ZERO) + coeff * k
        return Polynomial._raw(self.arity, {e: c for e, c in out.items() if c})

    def derivative(self, mu) -> "Polynomial":
        """Iterated derivative: apply d/dx_i exactly mu_i times for each i."""
        result = self
        for index, reps in enumerate(mu, start=1):
            for _ in range(reps):
                result = result.partial_derivative(index)
        return result

    def dualize(self, mu) -> "Polynomial":
        """Return x^mu * p(1/x1, ..., 1/xn); requires mu_i >= deg_{x_i}(p)."""
        mu = tuple(mu)
        if len(mu) != self.arity:
            raise ValueError(f"mu has length {len(mu)}, expected {self.arity}")
        for index in range(self.arity):
            bound = max((e[index] for e in self.terms), default=0)
            if mu[index] < bound:
                raise ValueError(
                    f"exponent deficit: mu[{index + 1}] = {mu[index]} < "
                    f"degree {bound} in x{index + 1}"
                )
        out = {
            tuple(m - e for m, e in zip(mu, exponent)): coeff
            for exponent, coeff in self.terms.items()
        }
        return Polynomial._raw(self.arity, out)

    def homogeneous_component(self, degree: int) -> "Polynomial":
        """Sum of the terms of total degree exactly ``degree``."""
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        out = {e: c for e, c in self.terms.items() if sum(e) == degree}
        return Polynomial._raw(self.arity, out)

    def specialize(self, assignments) -> "Polynomial":
        """Substitute variables exactly, keeping the ambient arity.

        ``assignments`` maps a 1-based variable index to either a rational
        constant or another variable named as ``"x<j>"``.
        """
        consts: dict[int, Fraction] = {}
        renames: dict[int, int] = {}
        for index, value in assignments.items():
            if not 1 <= index <= self.arity:
                raise ValueError(f"variable index {index} out of range 1..{self.arity}")
            if isinstance(value, str):
                match = re.fullmatch(r"x(\d+)", value)
                if not match or not 1 <= int(match.group(1)) <= self.arity:
                    raise ValueError(f"bad substitution target {value!r}")
                renames[index - 1] = int(match.group(1)) - 1
            else:
                consts[index - 1] = Fraction(value)
        out: dict[Exponent, Fraction] = {}
        for exponent, coeff in self.terms.items():
            reduced = list(exponent)
            for i, value in consts.items():
                k = reduced[i]
                if k:
                    coeff = coeff * value**k
                    reduced[i] = 0
                if not coeff:
                    break
            if not coeff:
                continue
            # renames act simultaneously: every power moves from its original
            # position, so swaps like {x1 -> x2, x2 -> x1} behave correctly
            new = [0] * self.arity
            for i, k in enumerate(reduced):
                if k:
                    new[renames.get(i, i)] += k
            key = tuple(new)
            acc = out.get(key, _ZERO) + coeff
            if acc:
                out[key] = acc
            else:
                del out[key]
        return Polynomial._raw(self.arity, out)

    def evaluate(self, point) -> Fraction:
        """Exact value at a point given as one rational per variable."""
        values = [Fraction(v) for v in point]
        if len(values) != self.arity:
            raise ValueError(f"point has length {len(values)}, expected {self.arity}")
        total = _ZERO
        for exponent, coeff in self.terms.items():
            term = coeff
            for value, k in zip(values, exponent):
                if k:
                    term *= value**k
            total += term
        return total

    def with_arity(self, arity: int) -> "Polynomial":
        """Embed into a larger variable set by zero-padding exponents."""
        if arity < self.arity:
            raise ValueError(f"cannot shrink arity {self.arity} to {arity}")
        pad = (0,) * (arity - self.arity)
        return Polynomial._raw(arity, {e + pad: c for e, c in self.terms.items()})


# -- variable swaps and exact division ---------------------------------


def swap_variables(poly: Polynomial, i: int, j: int) -> Polynomial:
    """Interchange x_i and x_j (1-based indices)."""
    if i == j:
        return poly
    a, b = i - 1, j - 1
    out = {}
    for exponent, coeff in poly.terms.items():
        e = list(exponent)
        e[a], e[b] = e[b], e[a]
        out[tuple(e)] = coeff
    return Polynomial._raw(poly.arity, out)


def divide_by_variable_difference(poly: Polynomial, i: int, j: int) -> Polynomial:
    """Exact quotient poly / (x_i - x_j); raises if the division is inexact.

    Synthetic division along the powers of x_i: writing
    poly = sum_k A_k x_i^k, the quotient B satisfies B_{k-1} = A_k + x_j B_k
    from the top power down, and the final remainder A_0 + x_j B_0 must
    vanish.
    """
    if i == j:
        raise ValueError("divisor x_i - x_j requires distinct variables")
    a, b = i - 1, j - 1
    levels: dict[int, dict[Exponent, Fraction]] = {}
    for exponent, coeff in poly.terms.items():
        k = exponent[a]
        stripped = exponent[:a] + (0,) + exponent[a + 1 :]
        levels.setdefault(k, {})[stripped] = coeff
    top = max(levels, default=0)
    quotient: dict[Exponent, Fraction] = {}
    carry: dict[Exponent, Fraction] = {}
    for k in range(top, 0, -1):
        layer = dict(carry)
        for exponent, coeff in levels.get(k, {}).items():
            acc = layer.get(exponent, _ZERO) + coeff
            if acc:
                layer[exponent] = acc
            else:
                del layer[exponent]
        for exponent, coeff in layer.items():
            quotient[exponent[:a] + (k - 1,) + exponent[a + 1 :]] = coeff
        carry = {}
        for exponent, coeff in layer.items():
            lifted = exponent[:b] + (exponent[b] + 1,) + exponent[b + 1 :]
            acc = carry.get(lifted, _ZERO) + coeff
            if acc:
                carry[lifted] = acc
    remainder = dict(carry)
    for exponent, coeff in levels.get(0, {}).items():
        acc = remainder.get(exponent, _ZERO) + coeff
        if acc:
            remainder[exponent] = acc
        else:
            del remainder[exponent]
    if remainder:
        raise ArithmeticError(f"inexact division by x{i} - x{j}")
    return Polynomial._raw(poly.arity, quotient)


# -- the normalization operator ----------------------------------------


def normalize(poly: Polynomial) -> Polynomial:
    """Send each coefficient c at exponent mu to c / mu! (componentwise)."""
    out = {
        exponent: coeff / _factorial_product(exponent)
        for exponent, coeff in poly.terms.items()
    }
    return Polynomial._raw(poly.arity, out)


class ShiftedLaurent:
    """A Laurent polynomial stored as x^(-shift) * body.

    ``body`` is an ordinary Polynomial and ``shift`` a tuple of nonnegative
    ints.  The stored pair is canonical: while the body is nonzero, no x_i
    divides every body term when shift_i > 0.  Construction canonicalizes.
    """

    __slots__ = ("shift", "body")

    def __init__(self, shift, body: Polynomial):
        shift = tuple(shift)
        if len(shift) != body.arity:
            raise ValueError(f"shift has length {len(shift)}, expected {body.arity}")
        if any(s < 0 for s in shift):
            raise ValueError("shift entries must be nonnegative")
        if not body.terms:
            self.shift = (0,) * body.arity
            self.body = body
            return
        reduction = tuple(
            min(s, min(e[i] for e in body.terms)) for i, s in enumerate(shift)
        )
        if any(reduction):
            body = Polynomial._raw(
                body.arity,
                {
                    tuple(e - r for e, r in zip(exponent, reduction)): coeff
                    for exponent, coeff in body.terms.items()
                },
            )
            shift = tuple(s - r for s, r in zip(shift, reduction))
        self.shift = shift
        self.body = body

    @property
    def arity(self) -> int:
        return self.body.arity

    @classmethod
    def from_laurent_terms(cls, arity: int, terms) -> "ShiftedLaurent":
        """Build from a map of (possibly negative) exponent tuples to coeffs."""
        terms = {tuple(e): Fraction(c) for e, c in terms.items() if Fraction(c)}
        shift = tuple(
            max(0, -min((e[i] for e in terms), default=0)) for i in range(arity)
        )
        body = Polynomial(
            arity,
            {tuple(e + s for e, s in zip(exponent, shift)): coeff
             for exponent, coeff in terms.items()},
        )
        return cls(shift, body)

    def laurent_terms(self):
        """Yield (exponent, coeff) pairs of the represented Laurent polynomial."""
        for exponent, coeff in self.body.terms.items():
            yield tuple(e - s for e, s in zip(exponent, self.shift)), coeff

    def __eq__(self, other) -> bool:
        if not isinstance(other, ShiftedLaurent):
            return NotImplemented
        return self.shift == other.shift and self.body == other.body

    __hash__ = None

    def __repr__(self) -> str:
        return f"ShiftedLaurent(shift={self.shift}, body={self.body!r})"


def normalize_shifted(laurent: ShiftedLaurent) -> Polynomial:
    """Drop terms with any negative exponent, then apply ``normalize``."""
    out: dict[Exponent, Fraction] = {}
    for exponent, coeff in laurent.laurent_terms():
        if all(e >= 0 for e in exponent):
            out[exponent] = coeff / _factorial_product(exponent)
    return Polynomial._raw(laurent.arity, out)


# -- text format --------------------------------------------------------
#
# poly     := ['-'] term (('+'|'-') term)*
# term     := [rational] var*          (at least one factor)
# rational := int | int '/' posint
# var      := 'x' index ['^' posint]
#
# Factors are whitespace-separated; '#' starts a comment running to end of
# line; the arity is declared by a leading header line "vars: n".  Canonical
# printing orders terms by descending total degree, ties broken by
# descending exponent tuple (graded lexicographic), with coefficients in
# lowest terms.

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<comment>#[^\n]*)|(?P<sign>[+-])"
    r"|(?P<var>x(?P<vindex>\d+)(\^(?P<vpow>\d+))?)"
    r"|(?P<rational>(?P<num>\d+)(/(?P<den>\d+))?)"
)


def _tokenize(text: str, line0: int):
    tokens = []
    line, col = line0, 1
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = match.lastgroup
        if kind in ("vindex", "vpow", "num", "den"):
            kind = "var" if kind in ("vindex", "vpow") else "rational"
        piece = match.group(0)
        if kind not in ("ws", "comment"):
            tokens.append((kind, match, line, col))
        newlines = piece.count("\n")
        if newlines:
            line += newlines
            col = len(piece) - piece.rfind("\n")
        else:
            col += len(piece)
        pos = match.end()
    return tokens


def parse_polynomial(text: str) -> Polynomial:
    """Parse the text format (header line ``vars: n`` followed by one polynomial)."""
    lines = text.split("\n")
    arity = None
    body_start = 0
    for lineno, raw in enumerate(lines):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        match = re.fullmatch(r"vars:\s*(\d+)", stripped)
        if not match:
            raise PolynomialSyntaxError(
                "expected header 'vars: n'", lineno + 1, raw.index(stripped[0]) + 1
            )
        arity = int(match.group(1))
        body_start = lineno + 1
        break
    if arity is None:
        raise PolynomialSyntaxError("missing header 'vars: n'", len(lines), 1)
    if arity < 1:
        raise PolynomialSyntaxError("arity must be positive", body_start, 1)
    body = "\n".join(lines[body_start:])
    tokens = _tokenize(body, body_start + 1)
    if not tokens:
        raise PolynomialSyntaxError("empty polynomial body", body_start + 1, 1)

    terms: dict[Exponent, Fraction] = {}
    idx = 0

    def parse_term(sign: int):
        nonlocal idx
        coeff = Fraction(sign)
        exponent = [0] * arity
        saw_factor = False
        if idx < len(tokens) and tokens[idx][0] == "rational":
            _, match, _, _ = tokens[idx]
            num = int(match.group("num"))
            den = int(match.group("den") or 1)
            if den == 0:
                raise PolynomialSyntaxError(
                    "zero denominator", tokens[idx][2], tokens[idx][3]
                )
            coeff *= Fraction(num, den)
            saw_factor = True
            idx += 1
        while idx < len(tokens) and tokens[idx][0] == "var":
            _, match, tline, tcol = tokens[idx]
            vindex = int(match.group("vindex"))
            vpow = int(match.group("vpow") or 1)
            if not 1 <= vindex <= arity:
                raise PolynomialSyntaxError(
                    f"variable x{vindex} out of range for vars: {arity}", tline, tcol
                )
            exponent[vindex - 1] += vpow
            saw_factor = True
            idx += 1
        if not saw_factor:
            where = tokens[idx] if idx < len(tokens) else tokens[-1]
            raise PolynomialSyntaxError("expected a term", where[2], where[3])
        key = tuple(exponent)
        terms[key] = terms.get(key, _ZERO) + coeff

    sign = 1
    if tokens[idx][0] == "sign":
        sign = -1 if tokens[idx][1].group(0) == "-" else 1
        idx += 1
    parse_term(sign)
    while idx < len(tokens):
        kind, match, tline, tcol = tokens[idx]
        if kind != "sign":
            raise PolynomialSyntaxError("expected '+' or '-' between terms", tline, tcol)
        idx += 1
        parse_term(-1 if match.group(0) == "-" else 1)
    return Polynomial(arity, terms)


def _term_order_key(exponent: Exponent):
    return (sum(exponent), exponent)


def format_terms(poly: Polynomial) -> str:
    """Canonical body text (no header)."""
    if not poly.terms:
        return "0"
    pieces = []
    for exponent in sorted(poly.terms, key=_term_order_key, reverse=True):
        coeff = poly.terms[exponent]
        factors = []
        for index, power in enumerate(exponent, start=1):
            if power == 1:
                factors.append(f"x{index}")
            elif power > 1:
                factors.append(f"x{index}^{power}")
        magnitude = abs(coeff)
        if factors and magnitude == 1:
            body = " ".join(factors)
        elif factors:
            body = f"{magnitude} " + " ".join(factors)
        else:
            body = str(magnitude)
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(pieces)


def format_polynomial(poly: Polynomial, header: bool = True) -> str:
    body = format_terms(poly)
    if header:
        return f"vars: {poly.arity}\n{body}\n"
    return body
