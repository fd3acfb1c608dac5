"""Exact polynomial and truncated-series arithmetic over the integers.

Everything here is dense and exact: coefficients are Python ints, division
is polynomial long division with a zero-remainder assertion, and no floating
point appears anywhere.  The three carriers are

  PolyQ        polynomials in q,
  PolyTQ       polynomials in t whose coefficients are PolyQ,
  TruncSeriesU power series in u mod u^(N+1) with PolyQ coefficients.

On top of them sit the classical q-objects: the finite products
(q)_n = (1-q)(1-q^2)...(1-q^n), Gaussian binomials and multinomials, the
t-ascending factorial (t;q)_n, and two truncated u-expansions used as exact
identity checks.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .errors import GmajError


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _sign_join(parts: list[tuple[int, str]]) -> str:
    """Render [(coeff, monomial), ...] as '2 + 2*q - q^3' style text."""
    if not parts:
        return "0"
    chunks: list[str] = []
    for i, (c, mono) in enumerate(parts):
        mag = abs(c)
        if mono == "":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            chunks.append("-" + body if c < 0 else body)
        else:
            chunks.append(("- " if c < 0 else "+ ") + body)
    return " ".join(chunks)


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


class PolyQ:
    """Dense polynomial in q with exact integer coefficients.

    Immutable; coeffs[k] is the coefficient of q^k and trailing zeros are
    stripped (the zero polynomial has an empty coefficient tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip(list(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("PolyQ is immutable")

    @classmethod
    def zero(cls) -> "PolyQ":
        return cls(())

    @classmethod
    def one(cls) -> "PolyQ":
        return cls((1,))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "PolyQ":
        if exp < 0:
            raise ValueError("negative exponent")
        return cls([0] * exp + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = PolyQ((other,))
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "PolyQ":
        return PolyQ([-c for c in self.coeffs])

    def __add__(self, other) -> "PolyQ":
        if isinstance(other, int):
            other = PolyQ((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(out)

    __radd__ = __add__

    def __sub__(self, other) -> "PolyQ":
        if isinstance(other, int):
            other = PolyQ((other,))
        return self + (-other)

    def __rsub__(self, other) -> "PolyQ":
        return (-self) + other

    def __mul__(self, other) -> "PolyQ":
        if isinstance(other, int):
            return PolyQ([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyQ.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return PolyQ(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "PolyQ":
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return PolyQ([0] * k + list(self.coeffs))

    def divexact(self, divisor: "PolyQ") -> "PolyQ":
        """Exact polynomial division; raises ArithmeticError on any remainder.

        A nonzero remainder here always indicates an arithmetic bug in the
        caller, never bad user input, hence ArithmeticError rather than a
        domain error.
        """
        d = divisor.coeffs
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        num = list(self.coeffs)
        if not num:
            return PolyQ.zero()
        dn = len(d) - 1
        lead = d[-1]
        qdeg = len(num) - 1 - dn
        if qdeg < 0:
            raise ArithmeticError("inexact polynomial division (degree)")
        out = [0] * (qdeg + 1)
        for i in range(qdeg, -1, -1):
            c = num[i + dn]
            if c % lead != 0:
                raise ArithmeticError("inexact polynomial division (coefficient)")
            f = c // lead
            out[i] = f
            if f:
                for j, dj in enumerate(d):
                    num[i + j] -= f * dj
        if any(num):
            raise ArithmeticError("inexact polynomial division (remainder)")
        return PolyQ(out)

    def __call__(self, x: int) -> int:
        """Evaluate at an integer point (Horner, exact)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def text(self, var: str = "q") -> str:
        parts = [(c, _power(var, k)) for k, c in enumerate(self.coeffs) if c]
        return _sign_join(parts)

    def __repr__(self) -> str:
        return f"PolyQ({self.text()})"


class PolyTQ:
    """Polynomial in t with PolyQ coefficients; rows[i] is the t^i coefficient."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[PolyQ] = ()):
        rs = [r if isinstance(r, PolyQ) else PolyQ(r) for r in rows]
        while rs and not rs[-1]:
            rs.pop()
        object.__setattr__(self, "rows", tuple(rs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyTQ is immutable")

    @classmethod
    def zero(cls) -> "PolyTQ":
        return cls(())

    @classmethod
    def one(cls) -> "PolyTQ":
        return cls((PolyQ.one(),))

    @classmethod
    def from_q(cls, p: PolyQ) -> "PolyTQ":
        return cls((p,))

    @property
    def t_degree(self) -> int:
        return len(self.rows) - 1

    def coeff(self, t_exp: int, q_exp: int) -> int:
        if t_exp >= len(self.rows):
            return 0
        row = self.rows[t_exp].coeffs
        return row[q_exp] if q_exp < len(row) else 0

    def __bool__(self) -> bool:
        return bool(self.rows)

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyQ):
            other = PolyTQ.from_q(other)
        if isinstance(other, int):
            other = PolyTQ.from_q(PolyQ((other,)))
        if not isinstance(other, PolyTQ):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other) -> "PolyTQ":
        if isinstance(other, (PolyQ, int)):
            other = PolyTQ.from_q(other if isinstance(other, PolyQ) else PolyQ((other,)))
        a, b = self.rows, other.rows
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, r in enumerate(b):
            out[i] = out[i] + r
        return PolyTQ(out)

    def __neg__(self) -> "PolyTQ":
        return PolyTQ([-r for r in self.rows])

    def __sub__(self, other) -> "PolyTQ":
        if isinstance(other, (PolyQ, int)):
            other = PolyTQ.from_q(other if isinstance(other, PolyQ) else PolyQ((other,)))
        return self + (-other)

    def __mul__(self, other) -> "PolyTQ":
        if isinstance(other, int):
            other = PolyTQ.from_q(PolyQ((other,)))
        if isinstance(other, PolyQ):
            other = PolyTQ.from_q(other)
        a, b = self.rows, other.rows
        if not a or not b:
            return PolyTQ.zero()
        out = [PolyQ.zero()] * (len(a) + len(b) - 1)
        for i, ra in enumerate(a):
            if ra:
                for j, rb in enumerate(b):
                    if rb:
                        out[i + j] = out[i + j] + ra * rb
        return PolyTQ(out)

    __rmul__ = __mul__

    def mul_truncated(self, other: "PolyTQ", max_t: int) -> "PolyTQ":
        """Product keeping only t-degrees <= max_t."""
        a, b = self.rows, other.rows
        out = [PolyQ.zero()] * (max_t + 1)
        for i, ra in enumerate(a):
            if i > max_t:
                break
            if ra:
                for j, rb in enumerate(b):
                    if i + j > max_t:
                        break
                    if rb:
                        out[i + j] = out[i + j] + ra * rb
        return PolyTQ(out)

    def truncate_t(self, max_t: int) -> "PolyTQ":
        return PolyTQ(self.rows[: max_t + 1])

    def at_t_one(self) -> PolyQ:
        """Evaluate at t = 1, leaving a polynomial in q."""
        acc = PolyQ.zero()
        for r in self.rows:
            acc = acc + r
        return acc

    def __call__(self, t: int, q: int) -> int:
        acc = 0
        for r in reversed(self.rows):
            acc = acc * t + r(q)
        return acc

    def text(self) -> str:
        parts = []
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row.coeffs):
                if c:
                    tp = _power("t", i)
                    qp = _power("q", j)
                    mono = "*".join(p for p in (tp, qp) if p)
                    parts.append((c, mono))
        return _sign_join(parts)

    def __repr__(self) -> str:
        return f"PolyTQ({self.text()})"


class TruncSeriesU:
    """Power series in u modulo u^(order+1), with PolyQ coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[PolyQ]):
        cs = list(coeffs)
        if len(cs) != order + 1:
            raise ValueError("need exactly order+1 coefficients")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeriesU is immutable")

    def coefficient(self, n: int) -> PolyQ:
        if n > self.order:
            raise IndexError("beyond truncation order")
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeriesU):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        inner = ", ".join(c.text() for c in self.coeffs)
        return f"TruncSeriesU(order={self.order}, [{inner}])"


@lru_cache(maxsize=None)
def q_pochhammer(n: int) -> PolyQ:
    """(q)_n = (1-q)(1-q^2)...(1-q^n), with (q)_0 = 1."""
    if n < 0:
        raise GmajError("q_pochhammer needs n >= 0")
    if n == 0:
        return PolyQ.one()
    prev = q_pochhammer(n - 1)
    return prev - prev.shift(n)


@lru_cache(maxsize=None)
def _q_multinomial_cached(parts: tuple[int, ...]) -> PolyQ:
    total = sum(parts)
    num = q_pochhammer(total)
    for p in parts:
        num = num.divexact(q_pochhammer(p))
    return num


def q_multinomial(parts: Iterable[int]) -> PolyQ:
    """Gaussian multinomial (q)_(sum parts) / prod (q)_part, exact.

    Symmetric in its arguments; its value at q = 1 is the ordinary
    multinomial coefficient.
    """
    ps = tuple(parts)
    if any(p < 0 for p in ps):
        raise GmajError("q_multinomial parts must be non-negative")
    return _q_multinomial_cached(tuple(sorted(ps)))


def q_binomial(n: int, k: int) -> PolyQ:
    """Gaussian binomial; zero polynomial outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return PolyQ.zero()
    return q_multinomial((k, n - k))


@lru_cache(maxsize=None)
def t_pochhammer(n: int) -> PolyTQ:
    """(t;q)_n = prod_{j=0}^{n-1} (1 - t*q^j), expanded exactly."""
    if n < 0:
        raise GmajError("t_pochhammer needs n >= 0")
    if n == 0:
        return PolyTQ.one()
    prev = t_pochhammer(n - 1)
    factor = PolyTQ((PolyQ.one(), -PolyQ.monomial(n - 1)))
    return prev * factor


def trunc_reciprocal_pochhammer(s: int, order: int) -> TruncSeriesU:
    """Series inverse of prod_{j=0}^{s} (1 - u*q^j), modulo u^(order+1).

    The u^n coefficient of the result equals the Gaussian binomial with
    arguments (s+n, n); that identity is asserted by the test suite, not
    assumed here.
    """
    if s < 0 or order < 0:
        raise GmajError("trunc_reciprocal_pochhammer needs s, order >= 0")
    # denominator coefficients up to u-degree min(s+1, order)
    denom = [PolyQ.one()]
    for j in range(s + 1):
        nxt = [PolyQ.zero()] * (len(denom) + 1)
        qj = PolyQ.monomial(j)
        for i, c in enumerate(denom):
            nxt[i] = nxt[i] + c
            nxt[i + 1] = nxt[i + 1] - c * qj
        denom = nxt
    out = [PolyQ.zero()] * (order + 1)
    out[0] = PolyQ.one()
    for n in range(1, order + 1):
        acc = PolyQ.zero()
        for k in range(1, min(n, len(denom) - 1) + 1):
            if denom[k]:
                acc = acc + denom[k] * out[n - k]
        out[n] = -acc
    return TruncSeriesU(order, out)


def trunc_pochhammer_expansion(s: int) -> TruncSeriesU:
    """Expand prod_{j=1}^{s} (1 + u*q^j) exactly (a degree-s polynomial in u)."""
    if s < 0:
        raise GmajError("trunc_pochhammer_expansion needs s >= 0")
    out = [PolyQ.one()] + [PolyQ.zero()] * s
    for j in range(1, s + 1):
        qj = PolyQ.monomial(j)
        for i in range(j, 0, -1):
            out[i] = out[i] + out[i - 1] * qj
    return TruncSeriesU(s, out)
