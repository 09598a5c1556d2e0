"""Exact rational generating functions and eventual-polynomial detection.

The generating function of a deterministic automaton is obtained by solving
(I - tM) u = chi_accept over the field of rational functions in t with exact
arithmetic, M being the transition-count matrix; the answer is the start
component. Count sequences of one-color quotients are eventually polynomial,
and the fit is located by finite differences over an explicit verification
window rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from .automata import DFA, standard_word_automaton
from .errors import DomainError, FitError
from .modules import MonomialSubmodule

# --- dense univariate polynomials over Fraction, low degree first ----------


def _trim(p: list[Fraction]) -> tuple[Fraction, ...]:
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def _padd(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _trim(out)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = Fraction(1) / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        coef = rem[i + len(b) - 1] * inv
        if coef:
            quo[i] = coef
            for j, cb in enumerate(b):
                rem[i + j] -= coef * cb
    return _trim(quo), _trim(rem)


def _pgcd(a, b):
    a, b = tuple(a), tuple(b)
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return ()
    inv = Fraction(1) / a[-1]
    return tuple(c * inv for c in a)


class _RatFn:
    """A rational function num/den, normalized with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Fraction(1),)):
        num = _trim([Fraction(c) for c in num])
        den = _trim([Fraction(c) for c in den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = (), (Fraction(1),)
            return
        g = _pgcd(num, den)
        if len(g) > 1:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
        inv = Fraction(1) / den[-1]
        self.num = tuple(c * inv for c in num)
        self.den = tuple(c * inv for c in den)

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        return _RatFn(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    def __sub__(self, other):
        return _RatFn(
            _padd(_pmul(self.num, other.den), _pneg(_pmul(other.num, self.den))),
            _pmul(self.den, other.den),
        )

    def __mul__(self, other):
        return _RatFn(_pmul(self.num, other.num), _pmul(self.den, other.den))

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return _RatFn(_pmul(self.num, other.den), _pmul(self.den, other.num))


@dataclass(frozen=True)
class RationalGF:
    """A reduced rational generating function with integer coefficients.

    Coefficient tuples run from the constant term up; the denominator has a
    positive nonzero constant term and gcd of all stored coefficients is 1.
    """

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self):
        if not self.denominator or self.denominator[0] == 0:
            raise DomainError("denominator must have a nonzero constant term")

    @classmethod
    def from_fractions(cls, num, den) -> "RationalGF":
        num = _trim([Fraction(c) for c in num])
        den = _trim([Fraction(c) for c in den])
        if not den:
            raise DomainError("zero denominator")
        if not num:
            return cls((0,), (1,))
        g = _pgcd(num, den)
        if len(g) > 1:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
        scale = 1
        for c in list(num) + list(den):
            scale = scale * c.denominator // gcd(scale, c.denominator)
        ni = [int(c * scale) for c in num]
        di = [int(c * scale) for c in den]
        content = 0
        for c in ni + di:
            content = gcd(content, c)
        ni = [c // content for c in ni]
        di = [c // content for c in di]
        if di[0] < 0:
            ni = [-c for c in ni]
            di = [-c for c in di]
        return cls(tuple(ni), tuple(di))

    def series(self, n_terms: int) -> list[Fraction]:
        """First n_terms Taylor coefficients at t = 0, exactly."""
        num = list(self.numerator) + [0] * n_terms
        den = self.denominator
        out = []
        for m in range(n_terms):
            c = Fraction(num[m])
            for k in range(1, min(m, len(den) - 1) + 1):
                c -= den[k] * out[m - k]
            out.append(c / den[0])
        return out

    def __str__(self):
        num = _format_poly(self.numerator)
        if self.denominator == (1,):
            return num
        den = _format_poly(self.denominator)
        if sum(1 for c in self.numerator if c) > 1:
            num = f"({num})"
        return f"{num}/({den})"


def _format_poly(coeffs) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            power = "t" if k == 1 else f"t^{k}"
            body = power if abs(c) == 1 else f"{abs(c)}*{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


def generating_function(dfa: DFA) -> RationalGF:
    """Solve (I - tM) u = chi_accept exactly; return the start component."""
    n = dfa.n_states
    counts = [[0] * n for _ in range(n)]
    for s in range(n):
        for t in dfa.transitions[s]:
            counts[s][t] += 1
    one = _RatFn((Fraction(1),))
    zero = _RatFn(())
    matrix = [
        [
            _RatFn(_padd((Fraction(1) if i == j else Fraction(0),), (Fraction(0), Fraction(-counts[i][j]))))
            for j in range(n)
        ]
        for i in range(n)
    ]
    rhs = [one if s in dfa.accepting else zero for s in range(n)]
    # forward elimination with first-nonzero pivoting
    for col in range(n):
        pivot = next(r for r in range(col, n) if matrix[r][col])
        matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        for r in range(col + 1, n):
            if matrix[r][col]:
                factor = matrix[r][col] / matrix[col][col]
                for k in range(col, n):
                    matrix[r][k] = matrix[r][k] - factor * matrix[col][k]
                rhs[r] = rhs[r] - factor * rhs[col]
    solution = [zero] * n
    for r in range(n - 1, -1, -1):
        acc = rhs[r]
        for k in range(r + 1, n):
            acc = acc - matrix[r][k] * solution[k]
        solution[r] = acc / matrix[r][r]
    u = solution[dfa.start]
    return RationalGF.from_fractions(u.num, u.den)


@dataclass(frozen=True)
class EventualPolynomial:
    """A polynomial valid for all arguments >= onset, coefficients low first."""

    onset: int
    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def predict(self, n: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * n + c
        return acc

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coefficients):
            if not c and len(self.coefficients) > 1:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                power = "n" if k == 1 else f"n^{k}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            if not terms:
                terms.append(body if c >= 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"


def fit_eventual_polynomial(counts, window: int) -> EventualPolynomial:
    """Locate the least onset and degree fitting the tail of a count sequence.

    A candidate (onset, degree k) is accepted when the (k+1)-st finite
    differences vanish at `window` consecutive places starting at the onset.
    Only degrees up to window // 2 are admitted; when nothing fits, a FitError
    reports "not eventually polynomial within budget" (the honest outcome for
    exponentially growing counts).
    """
    counts = [Fraction(c) for c in counts]
    max_deg = window // 2
    if window < 1:
        raise DomainError("verification window must be positive")
    for onset in range(len(counts)):
        for k in range(0, max_deg + 1):
            # need counts[onset .. onset + window + k]
            if onset + window + k >= len(counts):
                continue
            row = counts[onset:]
            for _ in range(k + 1):
                row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
            if len(row) >= window and all(c == 0 for c in row[:window]):
                return _newton_polynomial(counts, onset, k)
    raise FitError("not eventually polynomial within budget")


def _newton_polynomial(counts, onset: int, degree: int) -> EventualPolynomial:
    """Forward-difference interpolation on the nodes onset..onset+degree."""
    values = counts[onset : onset + degree + 1]
    diffs = [list(values)]
    for _ in range(degree):
        prev = diffs[-1]
        diffs.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    coeffs = [Fraction(0)] * (degree + 1)
    for j in range(degree + 1):
        # delta^j at onset, times binom(n - onset, j)
        basis = [Fraction(1)]
        for i in range(j):
            root = onset + i
            shifted = [Fraction(0)] + basis
            basis = [shifted[p] - root * (basis[p] if p < len(basis) else 0) for p in range(len(shifted))]
        lead = diffs[j][0] / factorial(j)
        for p, b in enumerate(basis):
            coeffs[p] += lead * b
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return EventualPolynomial(onset, tuple(coeffs))


@dataclass(frozen=True)
class HilbertResult:
    """Counts, generating function, and (for one color) the eventual polynomial."""

    counts: tuple[int, ...]
    gf: RationalGF
    polynomial: EventualPolynomial | None
    failure: str | None
    automaton_states: int
    fi_factor: int

    def fi_counts(self) -> tuple[int, ...]:
        """Dimensions on the unordered side: n! copies of the ordered ones."""
        return tuple(self.fi_factor * c for c in self.counts)


def hilbert_function(
    submodule: MonomialSubmodule,
    max_degree: int,
    fit_window: int = 6,
) -> HilbertResult:
    """Automaton counts, exact generating function, eventual polynomial.

    The counts are the dimensions of the quotient of the principal projective
    by the submodule (number of standard words per length). The polynomial
    fit is attempted for one color only; more colors grow exponentially and
    the failure is reported instead.
    """
    dfa = standard_word_automaton(submodule)
    counts = dfa.count_by_length(max_degree)
    gf = generating_function(dfa)
    polynomial = None
    failure = None
    if submodule.d == 1:
        try:
            polynomial = fit_eventual_polynomial(counts, fit_window)
        except FitError as exc:
            failure = str(exc)
    else:
        failure = f"eventual-polynomial fit attempted only for d=1 (got d={submodule.d})"
    return HilbertResult(
        counts=tuple(counts),
        gf=gf,
        polynomial=polynomial,
        failure=failure,
        automaton_states=dfa.n_states,
        fi_factor=factorial(submodule.src),
    )
