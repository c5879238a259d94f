"""Univariate polynomial factorization.

Over a finite field the full chain runs: squarefree decomposition,
distinct-degree splitting, then equal-degree splitting (Cantor-Zassenhaus,
with the trace construction in characteristic 2).  Roots of the degree-one
part are found by exhaustive search when the field has at most 10^6
elements, which keeps that path deterministic; the randomized splits use a
seedable generator with a fixed default seed.

Over the rationals only content extraction, Yun's squarefree decomposition
and rational-root splitting are attempted.  Factors of degree <= 3 without
rational roots are certified irreducible; anything bigger is returned
uncertified and callers must treat it as irreducible or reject it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import FactorError
from .fields import AlgebraElement, BaseField, ExtensionField, PrimeField, RationalField
from .poly import Polynomial

DEFAULT_SEED = 0x1718
_EXHAUSTIVE_LIMIT = 10**6


@dataclass(frozen=True)
class Factorization:
    """lead * prod(factor^multiplicity); factors monic, certified unless noted."""

    field: BaseField
    lead: AlgebraElement
    factors: tuple  # of (Polynomial, int, bool certified)

    def expand(self) -> Polynomial:
        out = Polynomial.constant(self.field, self.lead)
        for f, m, _ in self.factors:
            out = out * f**m
        return out

    def certified(self) -> bool:
        return all(c for _, _, c in self.factors)

    def __iter__(self):
        return iter(self.factors)


def _field_elements(field):
    if isinstance(field, PrimeField):
        for a in range(field.p):
            yield AlgebraElement(field, a)
    elif isinstance(field, ExtensionField):
        import itertools

        for tup in itertools.product(range(field.p), repeat=field.degree):
            yield AlgebraElement(field, tup)
    else:
        raise FactorError(f"cannot enumerate elements of {field!r}")


def _frobenius_root(c: AlgebraElement, field) -> AlgebraElement:
    # p-th root in F_q: c^(q/p)
    q = field.order
    return c ** (q // field.characteristic)


def _squarefree_finite(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Monic f over a finite field -> [(g_i, i)] with f = prod g_i^i."""
    field = f.field
    p = field.characteristic
    out: dict[int, Polynomial] = {}

    def accumulate(g: Polynomial, mult: int):
        if g.degree >= 1:
            out[mult] = out.get(mult, Polynomial.one(field)) * g

    def helper(f: Polynomial, outer: int):
        d = f.derivative()
        if d.is_zero():
            # f is a p-th power
            root = _pth_root_poly(f)
            helper(root, outer * p)
            return
        c = f.gcd(d)
        w = f.exact_divide(c)
        i = 1
        while w.degree >= 1:
            y = w.gcd(c)
            z = w.exact_divide(y)
            accumulate(z, i * outer)
            w = y
            c = c.exact_divide(y)
            i += 1
        if c.degree >= 1:
            root = _pth_root_poly(c)
            helper(root, outer * p)

    def _pth_root_poly(g: Polynomial) -> Polynomial:
        coeffs = []
        for i in range(0, g.degree + 1, p):
            coeffs.append(_frobenius_root(g.coefficient(i), field))
        return Polynomial(field, coeffs)

    helper(f.monic(), 1)
    merged: list[tuple[Polynomial, int]] = []
    for mult in sorted(out):
        merged.append((out[mult].monic(), mult))
    return merged


def _distinct_degree(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Squarefree monic f -> [(product of irreducibles of degree d, d)]."""
    field = f.field
    q = field.order
    out = []
    h = Polynomial.x(field)
    x = Polynomial.x(field)
    d = 0
    rest = f
    while rest.degree > 2 * (d + 1) - 1:
        d += 1
        h = h.pow_mod(q, rest)
        g = rest.gcd(h - x)
        if g.degree >= 1:
            out.append((g.monic(), d))
            rest = rest.exact_divide(g)
            h = h % rest
    if rest.degree >= 1:
        out.append((rest.monic(), rest.degree))
    return out


def _roots_exhaustive(f: Polynomial) -> list[AlgebraElement]:
    roots = []
    for a in _field_elements(f.field):
        if f.evaluate(a).is_zero():
            roots.append(a)
    return roots


def _equal_degree_split(f: Polynomial, d: int, rng: random.Random) -> list[Polynomial]:
    """Monic squarefree f, all irreducible factors of degree d."""
    field = f.field
    q = field.order
    if f.degree == d:
        return [f.monic()]
    if d == 1 and q <= _EXHAUSTIVE_LIMIT:
        x = Polynomial.x(field)
        return sorted(
            ((x - a).monic() for a in _roots_exhaustive(f)),
            key=lambda g: g.field._canonical(g.coefficient(0).data),
        )
    while True:
        r = Polynomial(field, [field.random_element(rng) for _ in range(f.degree)])
        if r.degree < 1:
            continue
        if field.characteristic == 2:
            m = field.degree if isinstance(field, ExtensionField) else 1
            t = Polynomial.zero(field)
            power = r % f
            for _ in range(m * d):
                t = (t + power) % f
                power = (power * power) % f
            g = f.gcd(t)
        else:
            s = r.pow_mod((q**d - 1) // 2, f)
            g = f.gcd(s - Polynomial.one(field))
        if 0 < g.degree < f.degree:
            left = _equal_degree_split(g.monic(), d, rng)
            right = _equal_degree_split(f.exact_divide(g).monic(), d, rng)
            return left + right


def _factor_finite(f: Polynomial, rng: random.Random) -> list[tuple[Polynomial, int, bool]]:
    out = []
    for g, mult in _squarefree_finite(f):
        for h, d in _distinct_degree(g):
            for irr in _equal_degree_split(h, d, rng):
                out.append((irr, mult, True))
    out.sort(key=lambda t: (t[0].degree, [t[0].field._canonical(c.data) for c in t[0].coeffs]))
    return out


# -- rationals -------------------------------------------------------------


def _yun_squarefree(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Char-zero squarefree decomposition of a monic polynomial."""
    out = []
    d = f.derivative()
    a = f.gcd(d)
    b = f.exact_divide(a)
    c = d.exact_divide(a)
    i = 1
    while b.degree >= 1:
        step = b.gcd(c - b.derivative())
        if step.degree >= 1:
            out.append((step.monic(), i))
        b2 = b.exact_divide(step)
        c = (c - b.derivative()).exact_divide(step)
        b = b2
        i += 1
    return out


def _rational_roots(f: Polynomial) -> list[Fraction]:
    """Rational roots of a nonzero polynomial over Q, with repetition ignored."""
    # scale to integer coefficients
    denom = 1
    for c in f.coeffs:
        denom = denom * c.data.denominator // _gcd_int(denom, c.data.denominator)
    ints = [int(c.data * denom) for c in f.coeffs]
    while ints and ints[0] == 0:
        ints = ints[1:]  # x = 0 handled by caller through valuation stripping
    if not ints:
        return []
    g = 0
    for c in ints:
        g = _gcd_int(g, c)
    ints = [c // g for c in ints]
    a0, an = abs(ints[0]), abs(ints[-1])
    roots = set()
    for r in _divisors(a0):
        for s in _divisors(an):
            for cand in (Fraction(r, s), Fraction(-r, s)):
                num = Fraction(0)
                for c in reversed(ints):
                    num = num * cand + c
                if num == 0:
                    roots.add(cand)
    return sorted(roots)


def _gcd_int(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return [1]
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _factor_rational(f: Polynomial) -> list[tuple[Polynomial, int, bool]]:
    field = f.field
    out = []
    # strip x^k
    v = f.valuation_at_zero()
    if v:
        out.append((Polynomial.x(field), v, True))
        f = Polynomial(field, f.coeffs[v:])
    for g, mult in _yun_squarefree(f.monic()):
        remaining = g
        for root in _rational_roots(g):
            lin = Polynomial(field, [-root, 1])
            q, r = divmod(remaining, lin)
            if r.is_zero():
                out.append((lin, mult, True))
                remaining = q
        if remaining.degree >= 1:
            # no rational roots left: certified irreducible up to cubics
            out.append((remaining.monic(), mult, remaining.degree <= 3))
    out.sort(key=lambda t: (t[0].degree, [c.data for c in t[0].coeffs]))
    return out


def poly_factor(f: Polynomial, seed: int | None = None) -> Factorization:
    """Factor f over its field; exact round-trip lead * prod(factors^mult) == f."""
    if f.is_zero():
        raise FactorError("cannot factor the zero polynomial")
    field = f.field
    lead = f.leading_coefficient()
    monic = f.monic()
    if monic.degree == 0:
        return Factorization(field, lead, ())
    if isinstance(field, (PrimeField, ExtensionField)):
        rng = random.Random(DEFAULT_SEED if seed is None else seed)
        factors = _factor_finite(monic, rng)
    elif isinstance(field, RationalField):
        factors = _factor_rational(monic)
    else:
        raise FactorError(f"factorization over {field!r} is not supported")
    return Factorization(field, lead, tuple(factors))


def poly_invmod(a: Polynomial, m: Polynomial) -> Polynomial:
    """b with a*b = 1 (mod m), deg b < deg m; requires gcd(a, m) = 1."""
    return a.invmod(m)


def is_irreducible(f: Polynomial, seed: int | None = None):
    """True/False over finite fields; over Q returns None when uncertifiable."""
    if f.degree < 1:
        return False
    field = f.field
    if isinstance(field, RationalField):
        if f.degree == 1:
            return True
        if f.valuation_at_zero() > 0:
            return False
        if _rational_roots(f):
            return False
        if f.degree <= 3:
            return True
        if not f.gcd(f.derivative()).is_constant():
            return False
        return None
    facs = poly_factor(f, seed=seed)
    return len(facs.factors) == 1 and facs.factors[0][1] == 1
