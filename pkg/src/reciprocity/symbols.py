"""Local pairings on the field of Laurent series.

Multiplicative side: the unsigned commutator Norm((S^{v(T)}/T^{v(S)})(0)),
its signed tame-symbol variant, and the Contou-Carrère symbol over an
Artinian coefficient ring.  The sign (-1)^{v(S)v(T)[k':k]} is deliberately
NOT part of the unsigned commutator; globally it is aggregated separately
(see blockops.aggregate_sign), and the tame symbol folds it in the way the
classical formula does.

Additive side: residues of alpha d(beta) by three independent routes --
the z^{-1} coefficient, the block-operator trace tr(gamma_2 beta_1 -
gamma_1 beta_2) on a stability-checked window, and extraction from the
Contou-Carrère symbol over dual numbers.  All three agree exactly; the
tests and the acceptance suite enforce it.

The Gelfand-Fuchs cocycle tr res tr_matrix(A dB) on matrix loop algebras
closes the list.
"""

from __future__ import annotations

from .artinian import ArtinianAlgebra, dual_numbers
from .blockops import lie_cocycle, multiplication_operator
from .errors import DomainError, NonUnitError, WindowError
from .fields import AlgebraElement, BaseField, lift
from .laurent import LaurentSeries, cc_factorize, unit_factorize
from .norms import algebra_norm, algebra_trace, relative_norm

SymbolValue = AlgebraElement


def winding_number(g: LaurentSeries, base: BaseField) -> int:
    """v(g) * [k':base] for a unit g over the field k'."""
    ring = g.ring
    if not isinstance(ring, BaseField):
        raise DomainError("winding numbers are defined over field coefficients")
    if not g.is_unit():
        raise NonUnitError("winding number of a non-unit")
    return g.valuation() * ring.extension_degree_over(base)


def local_commutator(S: LaurentSeries, T: LaurentSeries, base: BaseField) -> SymbolValue:
    """Norm_{k'/base}((S^{v(T)} / T^{v(S)})(0)); carries no sign."""
    if S.ring != T.ring or not isinstance(S.ring, BaseField):
        raise DomainError("both series must be units over one coefficient field")
    fS = unit_factorize(S)
    fT = unit_factorize(T)
    value = fS.leading ** fT.valuation * fT.leading ** (-fS.valuation)
    return algebra_norm(value, base)


def tame_symbol(f: LaurentSeries, g: LaurentSeries, base: BaseField) -> SymbolValue:
    """(-1)^{v(f)v(g)[k':base]} Norm_{k'/base}((f^{v(g)}/g^{v(f)})(0))."""
    unsigned = local_commutator(f, g, base)
    d = f.ring.extension_degree_over(base)
    exponent = f.valuation() * g.valuation() * d
    if exponent % 2:
        return -unsigned
    return unsigned


def contou_carrere_symbol(
    f: LaurentSeries, g: LaurentSeries, base: BaseField | None = None
) -> SymbolValue:
    """The symbol <f, g> of two principal units over an Artinian ring.

    Returns Norm along the residue-field part of the ratio of double
    products prod(1 - a_i^{j/(i,j)} bbar_j^{i/(i,j)})^{(i,j)} over the
    analogous product with the roles swapped; (i,j) is the gcd.  The
    products are finite because negative peel coefficients are nilpotent
    and positive ones lie in the maximal ideal, whose nilpotency order
    bounds the contributing exponents.
    """
    ring = f.ring
    if not isinstance(ring, ArtinianAlgebra) or g.ring != ring:
        raise DomainError("the symbol needs two series over one Artinian ring")
    if base is None:
        base = ring.base
    m_nil = ring.nil_index

    def deepest(series: LaurentSeries) -> int:
        return abs(min((e for e in series.coeffs if e < 0), default=0))

    # positive factors of one argument pair against negative factors of the
    # other; peeling can push negative support down to nil_index * initial
    prec_f = max(2, m_nil * deepest(g) * (m_nil - 1) + 2)
    prec_g = max(2, m_nil * deepest(f) * (m_nil - 1) + 2)
    fac_f = cc_factorize(f, prec_f)
    fac_g = cc_factorize(g, prec_g)

    def double_product(pos, neg) -> AlgebraElement:
        acc = ring.one()
        for i, a in pos:
            if i == 0 or a.is_zero():
                continue
            for j, b in neg:
                if j == 0 or b.is_zero():
                    continue
                d = _gcd(i, j)
                t = a ** (j // d) * b ** (i // d)
                if t.is_zero():
                    continue
                acc = acc * (ring.one() - t) ** d
        return acc

    numerator = double_product(fac_f.pos, fac_g.neg)
    denominator = double_product(fac_g.pos, fac_f.neg)
    value = numerator * denominator.inverse()
    return relative_norm(value, base)


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    if a == 0:
        return b
    while b:
        a, b = b, a % b
    return a


def residue_from_dual_symbol(
    alpha: LaurentSeries, beta: LaurentSeries, base: BaseField | None = None
) -> SymbolValue:
    """tr res(alpha d beta), extracted from <1 + e1 alpha, 1 + e2 beta>.

    The symbol over k'[e1,e2]/(e1^2,e2^2) is 1 + e1 e2 c; c is returned and
    must equal tr_{k'/base} of the z^{-1} coefficient of alpha d(beta).
    """
    ring = alpha.ring
    if not isinstance(ring, BaseField) or beta.ring != ring:
        raise DomainError("dual-number residue needs series over one field")
    if base is None:
        base = ring
    duals = dual_numbers(ring)
    e1, e2 = duals.generator(0), duals.generator(1)
    f = LaurentSeries.one(duals) + alpha.map_coefficients(lambda c: lift(c, duals) * e1, duals)
    g = LaurentSeries.one(duals) + beta.map_coefficients(lambda c: lift(c, duals) * e2, duals)
    cc = contou_carrere_symbol(f, g, base)
    target = cc.ring
    if not isinstance(target, ArtinianAlgebra):
        raise AssertionError("symbol did not return an Artinian element")
    if target.residue(cc) != target.base.one():
        raise AssertionError("dual symbol must be unipotent")
    for exps, v in cc.data.items():
        if exps not in ((0, 0), (1, 1)) and not v.is_zero():
            raise AssertionError("unexpected component in dual symbol")
    return target.coordinate(cc, (1, 1))


def residue_coefficient(
    alpha: LaurentSeries, beta: LaurentSeries, base: BaseField | None = None
) -> SymbolValue:
    """tr_{k'/base} of the z^{-1} coefficient of alpha * d(beta)/dz."""
    ring = alpha.ring
    if beta.ring != ring:
        raise DomainError("series live over different rings")
    if base is None:
        base = ring if isinstance(ring, BaseField) else ring.base
    h = alpha * beta.derivative()
    c = h.coefficient(-1)
    return algebra_trace(c, base)


def tate_residue(f1: LaurentSeries, f2: LaurentSeries, window: int) -> SymbolValue:
    """res f1 df2 as the block trace tr(gamma_2 beta_1 - gamma_1 beta_2).

    The multiplication operators of f1, f2 are restricted to the window
    z^{-window}..z^{window}; the window must be at least the larger pole
    order plus the larger polynomial degree of the two inputs.  The value is
    recomputed at window+5 and must agree (window independence).
    """
    if not (f1.is_exact() and f2.is_exact()):
        raise DomainError("Tate residues need exact Laurent polynomials")
    if f1.ring != f2.ring:
        raise DomainError("series live over different rings")

    def bound(series: LaurentSeries) -> tuple[int, int]:
        supp = series.support()
        if not supp:
            return 0, 0
        return max(0, -min(supp)), max(0, max(supp))

    p1, d1 = bound(f1)
    p2, d2 = bound(f2)
    needed = max(p1, p2) + max(d1, d2)
    if window < needed:
        raise WindowError(f"window {window} is below the required bound {needed}")

    def value_at(w: int) -> AlgebraElement:
        op1 = multiplication_operator(f1, w, w + 1)
        op2 = multiplication_operator(f2, w, w + 1)
        return lie_cocycle(op1, op2)

    first = value_at(window)
    second = value_at(window + 5)
    if first != second:
        raise AssertionError("Tate residue failed window stability")
    return first


class LoopMatrix:
    """A square matrix of Laurent series; optionally a pure tensor S (x) alpha."""

    __slots__ = ("ring", "n", "entries", "tensor")

    def __init__(self, ring, entries, tensor=None):
        self.ring = ring
        self.n = len(entries)
        for row in entries:
            if len(row) != self.n:
                raise DomainError("loop matrices must be square")
        self.entries = tuple(tuple(row) for row in entries)
        self.tensor = tensor
        if tensor is not None:
            s, alpha = tensor
            for i in range(self.n):
                for j in range(self.n):
                    expected = alpha * s[i][j]
                    if not expected.agrees_with(self.entries[i][j]):
                        raise DomainError("pure-tensor data does not expand to the entries")

    @classmethod
    def from_tensor(cls, s, alpha: LaurentSeries) -> "LoopMatrix":
        ring = alpha.ring
        entries = []
        for row in s:
            entries.append([alpha * ring.coerce(c) for c in row])
        coerced = [[ring.coerce(c) for c in row] for row in s]
        return cls(ring, entries, tensor=(coerced, alpha))

    @classmethod
    def zero(cls, ring, n: int) -> "LoopMatrix":
        z = LaurentSeries.zero(ring)
        return cls(ring, [[z] * n for _ in range(n)])

    def __add__(self, other):
        return LoopMatrix(
            self.ring,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
        )

    def __sub__(self, other):
        return LoopMatrix(
            self.ring,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
        )

    def matmul(self, other: "LoopMatrix") -> "LoopMatrix":
        if other.n != self.n or other.ring != self.ring:
            raise DomainError("size or ring mismatch in loop-matrix product")
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = LaurentSeries.zero(self.ring)
                for t in range(n):
                    acc = acc + self.entries[i][t] * other.entries[t][j]
                row.append(acc)
            out.append(row)
        return LoopMatrix(self.ring, out)

    def bracket(self, other: "LoopMatrix") -> "LoopMatrix":
        return self.matmul(other) - other.matmul(self)

    def derivative(self) -> "LoopMatrix":
        return LoopMatrix(self.ring, [[c.derivative() for c in row] for row in self.entries])

    def trace_series(self) -> LaurentSeries:
        acc = LaurentSeries.zero(self.ring)
        for i in range(self.n):
            acc = acc + self.entries[i][i]
        return acc


def gelfand_fuchs_cocycle(A: LoopMatrix, B: LoopMatrix, base: BaseField | None = None) -> SymbolValue:
    """tr_{k'/base} res tr_matrix(A dB); equals tr(ST) res(alpha d beta) on tensors."""
    if A.n != B.n or A.ring != B.ring:
        raise DomainError("loop matrices must match in size and ring")
    ring = A.ring
    if base is None:
        base = ring if isinstance(ring, BaseField) else ring.base
    t = A.matmul(B.derivative()).trace_series()
    return algebra_trace(t.coefficient(-1), base)
