"""Finite-window operators on the polarized space V = V^- (+) V^+.

The window keeps basis exponents z^{-wneg}..z^{-1} (V^-) and z^0..z^{wpos-1}
(V^+), both ordered by ascending exponent; outside the window an operator is
the identity by contract.  An operator is stored through its four blocks

    alpha: V^- -> V^-     beta:  V^+ -> V^-
    gamma: V^- -> V^+     delta: V^+ -> V^+

The determinant 2-cocycle of a pair with invertible delta blocks is
det(delta_1 delta_2 (gamma_1 beta_2 + delta_1 delta_2)^{-1}); for commuting
operators the central-extension commutator is the ratio of the cocycle in
the two orders.  The additive (Lie) cocycle is tr(gamma_2 beta_1 -
gamma_1 beta_2).  Correctness of the identity-tail model is a window
stability statement: all outputs are unchanged once the window exceeds the
support bounds, which the tests assert by recomputing on larger windows.
"""

from __future__ import annotations

from .artinian import ArtinianAlgebra, dual_numbers
from .errors import DomainError, NonUnitError, WindowError
from .fields import AlgebraElement, BaseField, CoefficientRing, lift
from .laurent import LaurentSeries
from .norms import mat_add, mat_det, mat_identity, mat_inv, mat_mul, mat_sub, mat_trace

SymbolValue = AlgebraElement


class BlockOperator:
    __slots__ = ("ring", "wneg", "wpos", "alpha", "beta", "gamma", "delta")

    def __init__(self, ring: CoefficientRing, wneg: int, wpos: int, alpha, beta, gamma, delta):
        if len(alpha) != wneg or len(delta) != wpos:
            raise WindowError("block shapes do not match the window")
        if any(len(r) != wneg for r in alpha) or any(len(r) != wpos for r in beta):
            raise WindowError("block shapes do not match the window")
        if any(len(r) != wneg for r in gamma) or any(len(r) != wpos for r in delta):
            raise WindowError("block shapes do not match the window")
        self.ring = ring
        self.wneg = wneg
        self.wpos = wpos
        self.alpha = alpha
        self.beta = beta
        self.gamma = gamma
        self.delta = delta

    @property
    def window(self) -> tuple[int, int]:
        return (self.wneg, self.wpos)

    @classmethod
    def identity(cls, ring, wneg: int, wpos: int) -> "BlockOperator":
        z = ring.zero()
        return cls(
            ring,
            wneg,
            wpos,
            mat_identity(ring, wneg),
            [[z] * wpos for _ in range(wneg)],
            [[z] * wneg for _ in range(wpos)],
            mat_identity(ring, wpos),
        )

    @classmethod
    def from_blocks(cls, ring, alpha, beta, gamma, delta) -> "BlockOperator":
        return cls(ring, len(alpha), len(delta), alpha, beta, gamma, delta)

    def assemble(self):
        """Full matrix on basis [z^-wneg .. z^-1, z^0 .. z^{wpos-1}]."""
        top = [list(ra) + list(rb) for ra, rb in zip(self.alpha, self.beta)]
        bottom = [list(rg) + list(rd) for rg, rd in zip(self.gamma, self.delta)]
        return top + bottom

    @classmethod
    def from_matrix(cls, ring, m, wneg: int, wpos: int) -> "BlockOperator":
        alpha = [row[:wneg] for row in m[:wneg]]
        beta = [row[wneg:] for row in m[:wneg]]
        gamma = [row[:wneg] for row in m[wneg:]]
        delta = [row[wneg:] for row in m[wneg:]]
        return cls(ring, wneg, wpos, alpha, beta, gamma, delta)

    def compose(self, other: "BlockOperator") -> "BlockOperator":
        if self.window != other.window or self.ring != other.ring:
            raise WindowError("operators live on different windows")
        prod = mat_mul(self.assemble(), other.assemble(), self.ring)
        return BlockOperator.from_matrix(self.ring, prod, self.wneg, self.wpos)

    def band(self) -> int:
        """Largest |row - column| exponent offset carrying a nonzero entry."""
        m = self.assemble()
        exps = list(range(-self.wneg, self.wpos))
        width = 0
        for i, row in enumerate(m):
            for j, entry in enumerate(row):
                if not entry.is_zero() and i != j:
                    width = max(width, abs(exps[i] - exps[j]))
        return width

    def commutes_with(self, other: "BlockOperator") -> bool:
        """Equality of S T and T S away from the truncation edge.

        Products of window-restricted operators are only faithful where no
        contribution escapes the window, so the comparison excludes a margin
        of band(S) + band(T) exponents at each end.  The window must be large
        enough to leave a nonempty core.
        """
        margin = self.band() + other.band()
        exps = list(range(-self.wneg, self.wpos))
        lo, hi = -self.wneg + margin, self.wpos - 1 - margin
        a = self.compose(other).assemble()
        b = other.compose(self).assemble()
        if lo > 0 or hi < 0:
            # dense operators leave no truncation-safe core; compare strictly
            lo, hi = -self.wneg, self.wpos - 1
        for i, er in enumerate(exps):
            if er < lo or er > hi:
                continue
            for j, ec in enumerate(exps):
                if ec < lo or ec > hi:
                    continue
                if a[i][j] != b[i][j]:
                    return False
        return True

    def lift_dual(self, target: ArtinianAlgebra, eps: AlgebraElement) -> "BlockOperator":
        """1 + eps * self, over the Artinian ring `target`."""

        def lifted(block):
            return [[lift(c, target) * eps for c in row] for row in block]

        alpha = mat_add(mat_identity(target, self.wneg), lifted(self.alpha))
        delta = mat_add(mat_identity(target, self.wpos), lifted(self.delta))
        return BlockOperator(target, self.wneg, self.wpos, alpha, lifted(self.beta), lifted(self.gamma), delta)

    def __eq__(self, other):
        if not isinstance(other, BlockOperator):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.window == other.window
            and self.assemble() == other.assemble()
        )

    def __repr__(self):
        return f"BlockOperator(window=({self.wneg},{self.wpos}), ring={self.ring!r})"


def multiplication_operator(f: LaurentSeries, wneg: int, wpos: int) -> BlockOperator:
    """Window matrix of multiplication by an exact Laurent polynomial."""
    if not f.is_exact():
        raise DomainError("multiplication operators need exact (finite) Laurent polynomials")
    ring = f.ring
    supp = f.support()
    pole = max(0, -min(supp)) if supp else 0
    deg = max(0, max(supp)) if supp else 0
    if wneg < pole + deg or wpos < pole + deg:
        raise WindowError(
            f"window ({wneg},{wpos}) is below the support bound {pole + deg} of the multiplier"
        )
    neg_exps = list(range(-wneg, 0))
    pos_exps = list(range(0, wpos))

    def block(rows, cols):
        return [[f.known_coefficient(r - c) for c in cols] for r in rows]

    return BlockOperator(
        ring,
        wneg,
        wpos,
        block(neg_exps, neg_exps),
        block(neg_exps, pos_exps),
        block(pos_exps, neg_exps),
        block(pos_exps, pos_exps),
    )


def cocycle_det(s1: BlockOperator, s2: BlockOperator) -> SymbolValue:
    """det(delta_1 delta_2 (gamma_1 beta_2 + delta_1 delta_2)^{-1})."""
    if s1.window != s2.window or s1.ring != s2.ring:
        raise WindowError("operators live on different windows")
    ring = s1.ring
    d1d2 = mat_mul(s1.delta, s2.delta, ring)
    d3 = mat_add(mat_mul(s1.gamma, s2.beta, ring), d1d2)
    try:
        inv = mat_inv(d3, ring)
    except NonUnitError:
        raise NonUnitError(
            "gamma_1 beta_2 + delta_1 delta_2 is singular: the pair left the cocycle domain"
        ) from None
    return mat_det(mat_mul(d1d2, inv, ring), ring)


def cocycle_commutator(s: BlockOperator, t: BlockOperator) -> SymbolValue:
    """c(S,T)/c(T,S) for commuting S, T; the central-extension commutator."""
    if not s.commutes_with(t):
        raise DomainError("cocycle commutator needs commuting operators")
    return cocycle_det(s, t) * cocycle_det(t, s).inverse()


def lie_cocycle(s1: BlockOperator, s2: BlockOperator) -> SymbolValue:
    """tr(gamma_2 beta_1 - gamma_1 beta_2)."""
    if s1.window != s2.window or s1.ring != s2.ring:
        raise WindowError("operators live on different windows")
    ring = s1.ring
    a = mat_mul(s2.gamma, s1.beta, ring)
    b = mat_mul(s1.gamma, s2.beta, ring)
    return mat_trace(mat_sub(a, b), ring)


def lie_cocycle_dual(s1: BlockOperator, s2: BlockOperator) -> SymbolValue:
    """The same cocycle extracted from the determinant cocycle over dual numbers.

    Lifts to 1 + eps_i S_i over k[e1,e2]/(e1^2,e2^2), forms the commutator
    ratio of cocycle_det in both orders, and reads off the e1*e2 coordinate.
    """
    ring = s1.ring
    if not isinstance(ring, BaseField):
        raise DomainError("dual-number extraction needs operators over a field")
    d = dual_numbers(ring)
    e1, e2 = d.generator(0), d.generator(1)
    t1 = s1.lift_dual(d, e1)
    t2 = s2.lift_dual(d, e2)
    ratio = cocycle_det(t1, t2) * cocycle_det(t2, t1).inverse()
    data = ratio.data
    if d.residue(ratio) != ring.one():
        raise AssertionError("dual commutator ratio must be unipotent")
    for exps, v in data.items():
        if exps not in ((0, 0), (1, 1)) and not v.is_zero():
            raise AssertionError("unexpected dual-number component in commutator ratio")
    return d.coordinate(ratio, (1, 1))


def aggregate_sign(w_pairs) -> int:
    """(-1)^(sum of w_x(S) * w_x(T)) over the listed places."""
    total = sum(int(a) * int(b) for a, b in w_pairs)
    return -1 if total % 2 else 1


def windings_sum_to_zero(ws) -> bool:
    """Degree-zero check: the local winding numbers of a global unit add to 0."""
    return sum(int(w) for w in ws) == 0
