"""Exact coefficient fields and their elements.

Three base fields are supported:

* the rationals, with :class:`fractions.Fraction` data,
* prime fields F_p, with int data in ``[0, p)``,
* extension fields F_p[u]/(m) for a monic irreducible m, with fixed-length
  tuples of ints as data (coefficient i of u^i).

Every element is an :class:`AlgebraElement` pointing at its parent ring; the
parent implements the raw operations on the underlying data.  Values are
immutable and operations are pure, so everything here is safe to share
between threads.
"""

from __future__ import annotations

from fractions import Fraction

from . import _kernels
from .errors import NonUnitError, TowerError

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin with fixed witnesses; deterministic for n < 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


class CoefficientRing:
    """Common protocol for every coefficient ring in the tower."""

    is_field = False
    characteristic = 0

    # raw-data operations; subclasses implement all of them
    def _add(self, a, b):
        raise NotImplementedError

    def _sub(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError

    def _is_invertible(self, a) -> bool:
        raise NotImplementedError

    def _canonical(self, a):
        return a

    def _str(self, a) -> str:
        raise NotImplementedError

    def element(self, data) -> AlgebraElement:
        return AlgebraElement(self, data)

    def zero(self) -> AlgebraElement:
        return self.from_int(0)

    def one(self) -> AlgebraElement:
        return self.from_int(1)

    def from_int(self, n: int) -> AlgebraElement:
        raise NotImplementedError

    def coerce(self, x) -> AlgebraElement:
        """Coerce an int, Fraction, or element lower in the tower."""
        if isinstance(x, AlgebraElement):
            return lift(x, self)
        if isinstance(x, int):
            return self.from_int(x)
        raise TowerError(f"cannot coerce {x!r} into {self}")

    def random_element(self, rng) -> AlgebraElement:
        raise NotImplementedError

    @property
    def signature(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, CoefficientRing) and self.signature == other.signature

    def __hash__(self):
        return hash(self.signature)


class BaseField(CoefficientRing):
    """A coefficient ring that is a field (rationals, F_p, F_p[u]/(m))."""

    is_field = True

    @property
    def prime_subfield(self) -> "BaseField":
        return self

    def extension_degree_over(self, base: "BaseField") -> int:
        if self == base:
            return 1
        raise TowerError(f"{self} is not an extension of {base}")


class RationalField(BaseField):
    """The field of rational numbers; element data is Fraction."""

    characteristic = 0

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        if a == 0:
            raise NonUnitError("division by zero in Q")
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _is_invertible(self, a):
        return a != 0

    def _str(self, a):
        return str(a)

    def from_int(self, n):
        return AlgebraElement(self, Fraction(n))

    def coerce(self, x):
        if isinstance(x, Fraction):
            return AlgebraElement(self, x)
        return super().coerce(x)

    def random_element(self, rng):
        return AlgebraElement(self, Fraction(rng.randint(-9, 9), rng.randint(1, 9)))

    @property
    def signature(self):
        return ("Q",)

    def __repr__(self):
        return "Q"


class PrimeField(BaseField):
    """F_p for a prime p; element data is an int in [0, p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _inv(self, a):
        if a % self.p == 0:
            raise NonUnitError(f"division by zero in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def _is_zero(self, a):
        return a % self.p == 0

    def _is_invertible(self, a):
        return a % self.p != 0

    def _str(self, a):
        return str(a)

    def from_int(self, n):
        return AlgebraElement(self, n % self.p)

    def random_element(self, rng):
        return AlgebraElement(self, rng.randrange(self.p))

    @property
    def order(self) -> int:
        return self.p

    @property
    def signature(self):
        return ("Fp", self.p)

    def __repr__(self):
        return f"F{self.p}"


def _is_irreducible_mod_p(coeffs: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial given as an int list over F_p."""
    d = len(coeffs) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    x = [0, 1]
    xq = _kernels.powmod(x, p**d, coeffs, p)
    if _kernels.sub(xq, x, p):
        return False
    primes = set()
    n = d
    q = 2
    while q * q <= n:
        while n % q == 0:
            primes.add(q)
            n //= q
        q += 1
    if n > 1:
        primes.add(n)
    for q in primes:
        xe = _kernels.powmod(x, p ** (d // q), coeffs, p)
        if _kernels.gcd(_kernels.sub(xe, x, p), coeffs, p) != [1]:
            return False
    return True


def find_irreducible(p: int, d: int) -> list[int]:
    """Lexicographically first monic irreducible of degree d over F_p."""
    if d == 1:
        return [0, 1]
    # iterate constant-first coefficient vectors
    total = p**d
    for code in range(total):
        coeffs = []
        c = code
        for _ in range(d):
            coeffs.append(c % p)
            c //= p
        coeffs.append(1)
        if coeffs[0] != 0 and _is_irreducible_mod_p(coeffs, p):
            return coeffs
    raise ValueError(f"no irreducible polynomial of degree {d} over F_{p}")


class ExtensionField(BaseField):
    """F_p[u]/(m) for monic irreducible m; element data is a tuple of ints.

    The tuple always has length deg(m); index i holds the coefficient of u^i.
    """

    def __init__(self, p: int, modulus, name: str = "u"):
        base = PrimeField(p)
        coeffs = [c % p for c in modulus]
        coeffs = _kernels.normalize(coeffs)
        if len(coeffs) < 3:
            raise ValueError("extension modulus must have degree >= 2")
        if coeffs[-1] != 1:
            raise ValueError("extension modulus must be monic")
        if not _is_irreducible_mod_p(coeffs, p):
            raise ValueError("extension modulus is not irreducible over F_p")
        self.p = p
        self.characteristic = p
        self.base = base
        self.modulus = tuple(coeffs)
        self.degree = len(coeffs) - 1
        self.name = name

    def _pad(self, lst):
        return tuple(lst) + (0,) * (self.degree - len(lst))

    def _add(self, a, b):
        return self._pad(_kernels.add(list(a), list(b), self.p))

    def _sub(self, a, b):
        return self._pad(_kernels.sub(list(a), list(b), self.p))

    def _mul(self, a, b):
        return self._pad(_kernels.mulmod(list(a), list(b), list(self.modulus), self.p))

    def _neg(self, a):
        return self._pad(_kernels.neg(list(a), self.p))

    def _inv(self, a):
        try:
            return self._pad(_kernels.invmod(list(a), list(self.modulus), self.p))
        except ZeroDivisionError:
            raise NonUnitError(f"division by zero in {self!r}") from None

    def _is_zero(self, a):
        return not any(a)

    def _is_invertible(self, a):
        return any(a)

    def _canonical(self, a):
        return tuple(a)

    def _str(self, a):
        from .formatting import format_terms

        terms = [(str(c), False, i) for i, c in enumerate(a) if c]
        return format_terms(terms, self.name, descending=True)

    def from_int(self, n):
        return AlgebraElement(self, self._pad([n % self.p] if n % self.p else []))

    def coerce(self, x):
        if isinstance(x, AlgebraElement) and x.ring == self.base:
            return AlgebraElement(self, self._pad([x.data] if x.data else []))
        return super().coerce(x)

    def random_element(self, rng):
        return AlgebraElement(self, tuple(rng.randrange(self.p) for _ in range(self.degree)))

    def generator(self) -> AlgebraElement:
        return AlgebraElement(self, self._pad([0, 1]))

    @property
    def order(self) -> int:
        return self.p**self.degree

    @property
    def prime_subfield(self) -> BaseField:
        return self.base

    def extension_degree_over(self, base: BaseField) -> int:
        if self == base:
            return 1
        if base == self.base:
            return self.degree
        raise TowerError(f"{self} is not an extension of {base}")

    def coordinates_over_prime(self, a) -> list:
        """Coordinates of raw data a as a vector over F_p."""
        return list(a)

    @property
    def signature(self):
        return ("Fq", self.p, self.modulus)

    def __repr__(self):
        return f"F{self.p ** self.degree}"


QQ = RationalField()


class AlgebraElement:
    """An element of a coefficient ring, behaving like a number."""

    __slots__ = ("ring", "data")

    def __init__(self, ring: CoefficientRing, data):
        self.ring = ring
        self.data = data

    def _pair(self, other):
        if isinstance(other, AlgebraElement):
            if other.ring == self.ring:
                return self, other
            return common_pair(self, other)
        if isinstance(other, (int, Fraction)):
            return self, self.ring.coerce(other)
        return None

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return AlgebraElement(a.ring, a.ring._add(a.data, b.data))

    __radd__ = __add__

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return AlgebraElement(a.ring, a.ring._sub(a.data, b.data))

    def __rsub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return AlgebraElement(a.ring, a.ring._sub(b.data, a.data))

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return AlgebraElement(a.ring, a.ring._mul(a.data, b.data))

    __rmul__ = __mul__

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return AlgebraElement(a.ring, a.ring._mul(a.data, a.ring._inv(b.data)))

    def __rtruediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return AlgebraElement(a.ring, a.ring._mul(b.data, a.ring._inv(a.data)))

    def __neg__(self):
        return AlgebraElement(self.ring, self.ring._neg(self.data))

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base = base.inverse()
            e = -e
        result = self.ring.one()
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "AlgebraElement":
        return AlgebraElement(self.ring, self.ring._inv(self.data))

    def is_zero(self) -> bool:
        return self.ring._is_zero(self.data)

    def is_invertible(self) -> bool:
        return self.ring._is_invertible(self.data)

    def __eq__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.ring._canonical(a.data) == b.ring._canonical(b.data)

    def __hash__(self):
        return hash((self.ring.signature, self.ring._canonical(self.data)))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return self.ring._str(self.data)

    def __repr__(self):
        return f"<{self} in {self.ring!r}>"


def lift(elem: AlgebraElement, target: CoefficientRing) -> AlgebraElement:
    """Embed elem into target along the tower, or raise TowerError."""
    if elem.ring == target:
        return elem
    # Artinian algebras embed their base; extension fields embed F_p.
    embed = getattr(target, "embed_from_below", None)
    if embed is not None:
        return embed(elem)
    if isinstance(target, ExtensionField) and elem.ring == target.base:
        return target.coerce(elem)
    raise TowerError(f"cannot lift element of {elem.ring!r} into {target!r}")


def common_pair(a: AlgebraElement, b: AlgebraElement):
    """Bring two elements into a common ring (the higher of the two)."""
    try:
        return a, lift(b, a.ring)
    except TowerError:
        pass
    try:
        return lift(a, b.ring), b
    except TowerError:
        return None
