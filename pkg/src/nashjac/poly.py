"""Sparse multivariate polynomials with exact rational coefficients.

Exponents are plain tuples of non-negative ints.  Coefficients are kept as
``int`` whenever they are integral and as ``fractions.Fraction`` otherwise,
so integer inputs stay on the fast integer path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from numbers import Rational
from typing import Iterable, Mapping, Optional, Sequence, Tuple

from .errors import InputError

Exponent = Tuple[int, ...]


def _canon(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _canon(Fraction(c.numerator, c.denominator))
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


def order(exp: Sequence[int]) -> int:
    return sum(exp)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def exp_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def divides(a: Exponent, b: Exponent) -> bool:
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def multi_binom(top: Exponent, bottom: Exponent) -> int:
    r = 1
    for t, b in zip(top, bottom):
        r *= comb(t, b)
    return r


def multi_factorial(exp: Exponent) -> int:
    r = 1
    for e in exp:
        for k in range(2, e + 1):
            r *= k
    return r


@dataclass(frozen=True)
class WeightSystem:
    """Positive integer weights, one per variable."""

    weights: Tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if not w:
            raise InputError("weight system needs at least one weight")
        if any(x <= 0 for x in w):
            raise InputError(f"weights must be positive, got {w}")
        object.__setattr__(self, "weights", w)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    @property
    def total(self) -> int:
        return sum(self.weights)

    def degree(self, exp: Sequence[int]) -> int:
        return dot(exp, self.weights)


@dataclass(frozen=True)
class WeightedDegree:
    """Outcome of a weighted homogeneity query.

    ``low``/``high`` are the extreme term degrees; both are None for the zero
    polynomial.
    """

    low: Optional[int]
    high: Optional[int]

    @property
    def is_zero(self) -> bool:
        return self.low is None

    @property
    def homogeneous(self) -> bool:
        return self.low is not None and self.low == self.high

    @property
    def degree(self) -> int:
        if not self.homogeneous:
            raise ValueError("polynomial is not weighted homogeneous")
        return self.low


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables over Q."""

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] = (), nvars: Optional[int] = None):
        items = dict(terms).items() if not isinstance(terms, dict) else terms.items()
        clean = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            c = _canon(c)
            if c == 0:
                continue
            if any(x < 0 for x in e):
                raise InputError(f"negative exponent {e}")
            v = _canon(clean.get(e, 0) + c)
            if v:
                clean[e] = v
            else:
                clean.pop(e, None)
        if nvars is None:
            if not clean:
                raise InputError("nvars is required for the zero polynomial")
            nvars = len(next(iter(clean)))
        if nvars < 1:
            raise InputError("a polynomial needs at least one variable")
        for e in clean:
            if len(e) != nvars:
                raise InputError(f"exponent {e} does not have {nvars} entries")
        self._terms = clean
        self.nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p._terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        c = _canon(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=1) -> "Polynomial":
        return cls({tuple(exp): coeff}, len(exp))

    @classmethod
    def var(cls, i: int, nvars: int) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return cls._raw({tuple(e): 1}, nvars)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def exponents(self):
        return self._terms.keys()

    def coeff(self, exp: Sequence[int]):
        return self._terms.get(tuple(exp), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self.nvars in self._terms)

    def constant_term(self):
        return self._terms.get((0,) * self.nvars, 0)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise InputError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for e, c in small.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _canon(v)
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = _canon(c)
        if c == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw({e: _canon(v * c) for e, v in self._terms.items()}, self.nvars)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return Polynomial.zero(self.nvars)
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple([x + y for x, y in zip(e1, e2)])
                out[e] = get(e, 0) + c1 * c2
        return Polynomial._raw({e: _canon(c) for e, c in out.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise InputError("only non-negative integer powers are supported")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, exp: Exponent, c=1) -> "Polynomial":
        """Multiply by the single term c*x^exp."""
        c = _canon(c)
        if c == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(
            {tuple([x + y for x, y in zip(e, exp)]): _canon(v * c) for e, v in self._terms.items()},
            self.nvars,
        )

    # -- calculus -----------------------------------------------------------

    def divided_partial(self, delta: Sequence[int]) -> "Polynomial":
        """Hasse derivative: x^g maps to binom(g, delta) x^(g - delta)."""
        delta = tuple(delta)
        if len(delta) != self.nvars:
            raise InputError(f"derivative multi-index {delta} has wrong length")
        if any(x < 0 for x in delta):
            raise InputError(f"negative derivative multi-index {delta}")
        if not any(delta):
            return self
        out = {}
        for e, c in self._terms.items():
            if all(x >= y for x, y in zip(e, delta)):
                out[tuple(x - y for x, y in zip(e, delta))] = _canon(c * multi_binom(e, delta))
        return Polynomial._raw(out, self.nvars)

    def diff(self, i: int) -> "Polynomial":
        delta = [0] * self.nvars
        delta[i] = 1
        return self.divided_partial(delta)

    def weighted_degree(self, w) -> WeightedDegree:
        w = w.weights if isinstance(w, WeightSystem) else tuple(w)
        if len(w) != self.nvars:
            raise InputError(f"{len(w)} weights given for {self.nvars} variables")
        if not self._terms:
            return WeightedDegree(None, None)
        degs = [dot(e, w) for e in self._terms]
        return WeightedDegree(min(degs), max(degs))

    def homogeneous_part(self, w, degree: int) -> "Polynomial":
        w = w.weights if isinstance(w, WeightSystem) else tuple(w)
        return Polynomial._raw({e: c for e, c in self._terms.items() if dot(e, w) == degree}, self.nvars)

    def evaluate(self, point: Sequence):
        total = 0
        for e, c in self._terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= x ** k
            total += t
        return _canon(total) if isinstance(total, (int, Fraction)) else total

    def substitute_permutation(self, perm: Sequence[int]) -> "Polynomial":
        """Rename variable i to variable perm[i]."""
        out = {}
        for e, c in self._terms.items():
            new = [0] * self.nvars
            for i, k in enumerate(e):
                new[perm[i]] = k
            out[tuple(new)] = c
        return Polynomial._raw(out, self.nvars)

    # -- normalisation ------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self / c integral and primitive."""
        if not self._terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._terms.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(1 / self.content())

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises ArithmeticError otherwise."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = max(other._terms, key=lambda e: (sum(e), e))
        lc = other._terms[lead]
        rem = dict(self._terms)
        quot = {}
        while rem:
            top = max(rem, key=lambda e: (sum(e), e))
            if not divides(lead, top):
                raise ArithmeticError("division is not exact")
            q_exp = exp_sub(top, lead)
            r = rem[top]
            if isinstance(r, int) and isinstance(lc, int) and r % lc == 0:
                q_c = r // lc
            else:
                q_c = _canon(Fraction(r) / lc)
            quot[q_exp] = q_c
            for e, c in other._terms.items():
                t = exp_add(e, q_exp)
                v = rem.get(t, 0) - q_c * c
                if v:
                    rem[t] = _canon(v)
                else:
                    rem.pop(t, None)
        return Polynomial._raw(quot, self.nvars)

    # -- display ------------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lex order (display order)."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


ALIASES = ("x", "y", "z", "w")


def default_names(nvars: int, aliases: bool = True) -> Tuple[str, ...]:
    if aliases and nvars <= len(ALIASES):
        return ALIASES[:nvars]
    return tuple(f"x{i + 1}" for i in range(nvars))


def _format_coeff(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial, names: Optional[Sequence[str]] = None) -> str:
    """Render in the input grammar, e.g. ``2*x^2*y - 1/3*y^4``."""
    if names is None:
        names = default_names(p.nvars)
    if not p:
        return "0"
    parts = []
    for e, c in p.sorted_terms():
        c = Fraction(c)
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        if mag != 1 or not factors:
            factors.insert(0, _format_coeff(mag))
        parts.append((sign, "*".join(factors)))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# Module-level spellings of the core operations.

def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def divided_partial(p: Polynomial, delta: Sequence[int]) -> Polynomial:
    return p.divided_partial(delta)


def weighted_degree(p: Polynomial, w) -> WeightedDegree:
    return p.weighted_degree(w)


def from_terms(pairs: Iterable[Tuple[Sequence[int], object]], nvars: int) -> Polynomial:
    acc = {}
    for e, c in pairs:
        e = tuple(e)
        acc[e] = acc.get(e, 0) + c
    return Polynomial(acc, nvars)
