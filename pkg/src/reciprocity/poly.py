"""Dense univariate polynomials over any supported coefficient field.

Coefficients are AlgebraElements stored little-endian with no trailing
zeros.  Over a prime field the ring operations unwrap to int lists and run
through the kernel backend; other fields use the generic code paths.
"""

from __future__ import annotations

from fractions import Fraction

from . import _kernels
from .errors import NonUnitError
from .fields import AlgebraElement, BaseField, PrimeField
from .formatting import format_terms, split_sign


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: BaseField, coeffs):
        elems = []
        for c in coeffs:
            if not isinstance(c, AlgebraElement):
                c = field.coerce(c)
            elif c.ring != field:
                c = field.coerce(c)
            elems.append(c)
        while elems and elems[-1].is_zero():
            elems.pop()
        self.field = field
        self.coeffs = tuple(elems)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def one(cls, field):
        return cls(field, [1])

    @classmethod
    def constant(cls, field, c):
        return cls(field, [c])

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @classmethod
    def from_int_coeffs(cls, field, ints):
        return cls(field, [field.from_int(int(c)) for c in ints])

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coefficient(self, i: int) -> AlgebraElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def leading_coefficient(self) -> AlgebraElement:
        if not self.coeffs:
            return self.field.zero()
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def _ints(self) -> list[int]:
        return [c.data for c in self.coeffs]

    def _wrap_ints(self, ints) -> "Polynomial":
        f = self.field
        return Polynomial(f, [AlgebraElement(f, c) for c in ints])

    # -- arithmetic ----------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction, AlgebraElement)):
            return Polynomial(self.field, [other])
        return None

    def __add__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        if isinstance(self.field, PrimeField):
            return self._wrap_ints(_kernels.add(self._ints(), other._ints(), self.field.p))
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.field, [self.coefficient(i) + other.coefficient(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        if isinstance(self.field, PrimeField):
            return self._wrap_ints(_kernels.sub(self._ints(), other._ints(), self.field.p))
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.field, [self.coefficient(i) - other.coefficient(i) for i in range(n)])

    def __rsub__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        if isinstance(self.field, PrimeField):
            return self._wrap_ints(_kernels.mul(self._ints(), other._ints(), self.field.p))
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.field)
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if isinstance(self.field, PrimeField):
            q, r = _kernels.divmod_poly(self._ints(), other._ints(), self.field.p)
            return self._wrap_ints(q), self._wrap_ints(r)
        rem = list(self.coeffs)
        dd = other.degree
        if self.degree < dd:
            return Polynomial.zero(self.field), self
        inv_lead = other.leading_coefficient().inverse()
        q = [self.field.zero()] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c.is_zero():
                c = c * inv_lead
                q[k - dd] = c
                for j in range(dd + 1):
                    rem[k - dd + j] = rem[k - dd + j] - c * other.coeffs[j]
        return Polynomial(self.field, q), Polynomial(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_divide(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero() or self.is_monic():
            return self
        return self * self.leading_coefficient().inverse()

    def gcd(self, other: "Polynomial") -> "Polynomial":
        if isinstance(self.field, PrimeField):
            return self._wrap_ints(_kernels.gcd(self._ints(), other._ints(), self.field.p))
        a, b = self, other
        while not b.is_zero():
            a, b = b, (a % b).monic()
        return a.monic()

    def xgcd(self, other: "Polynomial"):
        """Monic g and s, t with s*self + t*other = g."""
        f = self.field
        r0, r1 = self, other
        s0, s1 = Polynomial.one(f), Polynomial.zero(f)
        t0, t1 = Polynomial.zero(f), Polynomial.one(f)
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        c = r0.leading_coefficient().inverse()
        return r0 * c, s0 * c, t0 * c

    def invmod(self, modulus: "Polynomial") -> "Polynomial":
        g, s, _ = self.xgcd(modulus)
        if g.degree != 0:
            raise NonUnitError("polynomial is not invertible modulo the given modulus")
        return s % modulus

    def pow_mod(self, e: int, modulus: "Polynomial") -> "Polynomial":
        if isinstance(self.field, PrimeField):
            return self._wrap_ints(
                _kernels.powmod(self._ints(), e, modulus._ints(), self.field.p)
            )
        if e < 0:
            return self.invmod(modulus).pow_mod(-e, modulus)
        result = Polynomial.one(self.field) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def derivative(self) -> "Polynomial":
        f = self.field
        return Polynomial(f, [f.from_int(i) * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        if not isinstance(x, AlgebraElement):
            x = self.field.coerce(x)
        acc = x.ring.zero() if x.ring != self.field else self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, a) -> "Polynomial":
        """p(x + a), by repeated synthetic division."""
        if not isinstance(a, AlgebraElement):
            a = self.field.coerce(a)
        b = list(self.coeffs)
        n = len(b)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                b[j] = b[j] + a * b[j + 1]
        return Polynomial(self.field, b)

    def reversed_coeffs(self, at_degree: int | None = None) -> "Polynomial":
        """t^d * p(1/t) for d = at_degree (default deg p)."""
        d = self.degree if at_degree is None else at_degree
        if d < self.degree:
            raise ValueError("reversal degree below actual degree")
        out = [self.field.zero()] * (d + 1)
        for i, c in enumerate(self.coeffs):
            out[d - i] = c
        return Polynomial(self.field, out)

    def valuation_at_zero(self) -> int:
        """Multiplicity of the root x = 0."""
        if self.is_zero():
            raise ValueError("zero polynomial has no valuation")
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        raise AssertionError("unnormalized polynomial")

    # -- comparisons / hashing / printing ------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            other = self._coerce_other(other)
            if other is None:
                return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.signature, tuple(self.field._canonical(c.data) for c in self.coeffs)))

    def __bool__(self):
        return bool(self.coeffs)

    def to_string(self, var: str = "x") -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            s, neg = split_sign(c)
            terms.append((s, neg, i))
        return format_terms(terms, var, descending=True)

    def __str__(self):
        return self.to_string("x")

    def __repr__(self):
        return f"Polynomial({self.field!r}, {self.to_string()!r})"
