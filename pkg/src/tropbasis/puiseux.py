"""Truncated Puiseux series in ``t`` with rational exponents and coefficients.

A series is a finite list of ``(exponent, coefficient)`` terms plus an
optional truncation order ``O(t^order)``. ``order=None`` means the terms are
the exact element (a Puiseux polynomial); rationals embed that way. Only
inversion of a non-monomial produces a genuinely truncated series.

The degree map must never guess: asking for the degree (or zero-ness) of a
series whose known terms have all cancelled below its truncation order raises
:class:`PrecisionExhausted`.
"""

from fractions import Fraction
import re

from .errors import DivisionByZeroSeries, PrecisionExhausted, TropError
from .tropical import INF

DEFAULT_ORDER = Fraction(10)


def _lt(a, b):
    """``a < b`` with ``None`` as +infinity."""
    return b is None or (a is not None and a < b)


def _min_order(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class Puiseux:
    __slots__ = ("terms", "order")

    def __init__(self, terms=(), order=None):
        acc = {}
        for e, c in terms:
            e, c = Fraction(e), Fraction(c)
            acc[e] = acc.get(e, 0) + c
        order = None if order is None else Fraction(order)
        self.terms = tuple(
            (e, c) for e, c in sorted(acc.items()) if c != 0 and _lt(e, order)
        )
        self.order = order

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c):
        return cls([(0, c)])

    @classmethod
    def monomial(cls, c, e):
        return cls([(e, c)])

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Puiseux):
            return x
        if isinstance(x, str):
            return parse(x)
        return cls.const(x)

    # -- predicates ---------------------------------------------------------

    @property
    def exact(self):
        return self.order is None

    def is_zero(self):
        if self.terms:
            return False
        if self.order is None:
            return True
        raise PrecisionExhausted(f"series is O(t^{self.order}); zero-ness undecidable at this precision")

    def deg(self):
        """Lowest exponent, ``INF`` for the exact zero series."""
        if self.terms:
            return self.terms[0][0]
        if self.order is None:
            return INF
        raise PrecisionExhausted(f"all terms cancelled below t^{self.order}; degree unknown")

    def lead(self):
        if not self.terms:
            self.deg()
            raise DivisionByZeroSeries("zero series has no leading term")
        return self.terms[0]

    def is_constant(self):
        return self.exact and all(e == 0 for e, _ in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise TropError(f"{self} is not a rational constant")
        return self.terms[0][1] if self.terms else Fraction(0)

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self):
        return Puiseux([(e, -c) for e, c in self.terms], self.order)

    def __add__(self, other):
        other = Puiseux.coerce(other)
        return Puiseux(self.terms + other.terms, _min_order(self.order, other.order))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-Puiseux.coerce(other))

    def __rsub__(self, other):
        return Puiseux.coerce(other) - self

    def _val(self):
        """Lower bound for the valuation: leading exponent, else the truncation order."""
        return self.terms[0][0] if self.terms else self.order

    def __mul__(self, other):
        other = Puiseux.coerce(other)
        if (not self.terms and self.exact) or (not other.terms and other.exact):
            return Puiseux()
        # (F + O(t^a)) (G + O(t^b)) = FG + O(t^min(a + val g, b + val f))
        order = None
        if self.order is not None:
            order = self.order + other._val()
        if other.order is not None:
            order = _min_order(order, other.order + self._val())
        terms = [(e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms]
        return Puiseux(terms, order)

    __rmul__ = __mul__

    def inv(self, precision=DEFAULT_ORDER):
        """Multiplicative inverse.

        A monomial inverts exactly. Otherwise ``f = c t^e (1 + h)`` with ``h``
        of positive valuation and ``1/f = c^-1 t^-e sum (-h)^k``, kept to
        relative precision ``min(precision, order - e)``.
        """
        e, c = self.lead()
        if len(self.terms) == 1 and self.exact:
            return Puiseux([(-e, 1 / c)])
        rel = Fraction(precision)
        if self.order is not None:
            rel = min(rel, self.order - e)
        h = Puiseux([(ei - e, ci / c) for ei, ci in self.terms[1:]], rel)
        total = Puiseux.const(1) + Puiseux((), rel)
        power = Puiseux.const(1)
        neg_h = -h
        while True:
            power = Puiseux((power * neg_h).terms, rel)
            if not power.terms:
                break
            total = total + power
        return Puiseux([(ei - e, ci / c) for ei, ci in total.terms], rel - e)

    def __truediv__(self, other):
        return self * Puiseux.coerce(other).inv()

    def __rtruediv__(self, other):
        return Puiseux.coerce(other) * self.inv()

    def __pow__(self, k):
        out = Puiseux.const(1)
        for _ in range(k):
            out = out * self
        return out

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other):
        try:
            other = Puiseux.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.terms == other.terms and self.order == other.order

    def __hash__(self):
        return hash((self.terms, self.order))

    def __repr__(self):
        return f"Puiseux({self})"

    def __str__(self):
        parts = []
        for e, c in self.terms:
            if e == 0:
                parts.append(str(c))
                continue
            mono = "t" if e == 1 else (f"t^{e}" if e.denominator == 1 and e > 0 else f"t^({e})")
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        if self.order is not None:
            parts.append(f"O(t^({self.order}))")
        if not parts:
            return "0"
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


ZERO = Puiseux()
ONE = Puiseux.const(1)

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?
        (?P<t>t(?:\s*\^\s*(?:\((?P<pexp>-?\d+(?:/\d+)?)\)|(?P<exp>-?\d+(?:/\d+)?)))?)?
        \s*""",
    re.VERBOSE,
)


def parse(text):
    """Parse ``"1 - 2*t^(1/2) + 3/4*t^2"``; a bare rational is a constant."""
    s = text.strip()
    if not s:
        raise ValueError("empty series")
    pos = 0
    terms = []
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("t") is None):
            raise ValueError(f"cannot parse series term at {s[pos:]!r}")
        if terms and m.group("sign") is None:
            raise ValueError(f"missing operator before {s[pos:]!r}")
        c = Fraction(m.group("coef") or 1)
        if m.group("sign") == "-":
            c = -c
        if m.group("t"):
            e = Fraction(m.group("pexp") or m.group("exp") or 1)
        else:
            e = Fraction(0)
        terms.append((e, c))
        pos = m.end()
    return Puiseux(terms)


def deg(f):
    return Puiseux.coerce(f).deg()
