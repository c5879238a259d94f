"""Norms, traces and exact linear algebra over the coefficient towers.

The norm (resp. trace) of r over a subfield k is the determinant (resp.
trace) of the k-linear multiplication-by-r map on its parent ring.  Both are
computed from explicit multiplication matrices; nothing here uses Frobenius
shortcuts, which stay available to the tests as an independent oracle.

Matrix helpers work over any coefficient ring.  Over fields, determinants
and inverses run Gaussian elimination (with a kernel fast path modulo p);
over local rings the pivots are required to be units, which succeeds exactly
when the matrix is invertible, and small singular cases fall back to
cofactor expansion.
"""

from __future__ import annotations

from . import _kernels
from .artinian import ArtinianAlgebra
from .errors import NonUnitError, TowerError
from .fields import AlgebraElement, BaseField, CoefficientRing, ExtensionField, PrimeField, lift


# -- vector space structure over a subfield ---------------------------------


def vector_basis(ring: CoefficientRing, over: BaseField) -> list[AlgebraElement]:
    """Basis of ring as a vector space over the subfield `over`."""
    if ring == over:
        return [over.one()]
    if isinstance(ring, ExtensionField) and over == ring.base:
        one = over.one()
        return [AlgebraElement(ring, ring._pad([0] * i + [1])) for i in range(ring.degree)]
    if isinstance(ring, ArtinianAlgebra):
        inner = vector_basis(ring.base, over) if ring.base != over else [over.one()]
        out = []
        for exps in ring.monomials():
            for b in inner:
                out.append(AlgebraElement(ring, {exps: lift(b, ring.base)}))
        return out
    raise TowerError(f"{ring!r} is not an algebra over {over!r}")


def coordinates(elem: AlgebraElement, over: BaseField) -> list[AlgebraElement]:
    """Coordinates of elem w.r.t. vector_basis(elem.ring, over)."""
    ring = elem.ring
    if ring == over:
        return [elem]
    if isinstance(ring, ExtensionField) and over == ring.base:
        return [AlgebraElement(over, c) for c in elem.data]
    if isinstance(ring, ArtinianAlgebra):
        out = []
        for exps in ring.monomials():
            c = ring.coordinate(elem, exps)
            if ring.base == over:
                out.append(c)
            else:
                out.extend(coordinates(c, over))
        return out
    raise TowerError(f"{ring!r} is not an algebra over {over!r}")


def multiplication_matrix(r: AlgebraElement, over: BaseField) -> list[list[AlgebraElement]]:
    """Matrix of x -> r*x on r's parent ring, over the subfield `over`."""
    basis = vector_basis(r.ring, over)
    cols = [coordinates(r * b, over) for b in basis]
    n = len(basis)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


# -- generic matrix helpers --------------------------------------------------


def mat_identity(ring: CoefficientRing, n: int) -> list[list[AlgebraElement]]:
    z, o = ring.zero(), ring.one()
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def mat_mul(a, b, ring: CoefficientRing) -> list[list[AlgebraElement]]:
    if isinstance(ring, PrimeField) and a and b:
        raw = _kernels.mat_mul(
            [[c.data for c in row] for row in a], [[c.data for c in row] for row in b], ring.p
        )
        return [[AlgebraElement(ring, c) for c in row] for row in raw]
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    z = ring.zero()
    out = [[z] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            c = a[i][t]
            if c.is_zero():
                continue
            bt = b[t]
            oi = out[i]
            for j in range(m):
                if not bt[j].is_zero():
                    oi[j] = oi[j] + c * bt[j]
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_trace(a, ring: CoefficientRing) -> AlgebraElement:
    t = ring.zero()
    for i in range(len(a)):
        t = t + a[i][i]
    return t


def _det_cofactor(m, ring: CoefficientRing) -> AlgebraElement:
    n = len(m)
    if n == 0:
        return ring.one()
    if n == 1:
        return m[0][0]
    det = ring.zero()
    for j in range(n):
        c = m[0][j]
        if c.is_zero():
            continue
        minor = [[m[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = c * _det_cofactor(minor, ring)
        det = det + term if j % 2 == 0 else det - term
    return det


def mat_det(a, ring: CoefficientRing) -> AlgebraElement:
    """Determinant over a field or a local ring."""
    n = len(a)
    if n == 0:
        return ring.one()
    if isinstance(ring, PrimeField):
        return AlgebraElement(ring, _kernels.mat_det([[c.data for c in row] for row in a], ring.p))
    m = [list(row) for row in a]
    det = ring.one()
    for col in range(n):
        pivot = -1
        for r in range(col, n):
            if m[r][col].is_invertible():
                pivot = r
                break
        if pivot < 0:
            if ring.is_field:
                if all(m[r][col].is_zero() for r in range(col, n)):
                    return ring.zero()
                raise AssertionError("field element neither zero nor invertible")
            if n - col <= 6:
                rest = _det_cofactor([row[col:] for row in m[col:]], ring)
                return det * rest
            raise NonUnitError("matrix has no invertible pivot over the local ring")
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        pv = m[col][col]
        det = det * pv
        inv = pv.inverse()
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if not f.is_zero():
                mr, mc = m[r], m[col]
                for j in range(col, n):
                    mr[j] = mr[j] - f * mc[j]
    return det


def mat_inv(a, ring: CoefficientRing) -> list[list[AlgebraElement]]:
    """Inverse over a field or a local ring; raises NonUnitError when singular."""
    n = len(a)
    if isinstance(ring, PrimeField):
        try:
            raw = _kernels.mat_inv([[c.data for c in row] for row in a], ring.p)
        except ZeroDivisionError:
            raise NonUnitError("matrix is singular") from None
        return [[AlgebraElement(ring, c) for c in row] for row in raw]
    m = [list(row) + list(idrow) for row, idrow in zip(a, mat_identity(ring, n))]
    for col in range(n):
        pivot = -1
        for r in range(col, n):
            if m[r][col].is_invertible():
                pivot = r
                break
        if pivot < 0:
            raise NonUnitError("matrix is singular (no unit pivot)")
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col].inverse()
        m[col] = [c * inv for c in m[col]]
        for r in range(n):
            if r != col and not m[r][col].is_zero():
                f = m[r][col]
                mr, mc = m[r], m[col]
                for j in range(2 * n):
                    mr[j] = mr[j] - f * mc[j]
    return [row[n:] for row in m]


# -- norms and traces --------------------------------------------------------


def algebra_norm(r: AlgebraElement, over: BaseField) -> AlgebraElement:
    """det of multiplication-by-r on its parent, as an element of `over`."""
    if r.ring == over:
        return r
    return mat_det(multiplication_matrix(r, over), over)


def algebra_trace(r: AlgebraElement, over: BaseField) -> AlgebraElement:
    """trace of multiplication-by-r on its parent, as an element of `over`."""
    if r.ring == over:
        return r
    return mat_trace(multiplication_matrix(r, over), over)


def norm_det_compat(T, over: BaseField):
    """(Norm_{k'/k}(det_{k'} T), det_k of T as a block matrix over k).

    T is a square matrix of elements of one extension field k'; callers
    assert the two components are equal.
    """
    if not T or any(len(row) != len(T) for row in T):
        raise ValueError("T must be a nonempty square matrix")
    kprime = T[0][0].ring
    for row in T:
        for t in row:
            if t.ring != kprime:
                raise TowerError("matrix entries live in different rings")
    det_prime = mat_det(T, kprime)
    norm = algebra_norm(det_prime, over)
    d = len(vector_basis(kprime, over))
    n = len(T)
    big = [[over.zero()] * (n * d) for _ in range(n * d)]
    for i in range(n):
        for j in range(n):
            block = multiplication_matrix(T[i][j], over)
            for bi in range(d):
                for bj in range(d):
                    big[i * d + bi][j * d + bj] = block[bi][bj]
    det_base = mat_det(big, over)
    return norm, det_base


# -- relative norm/trace along the residue-field part ------------------------


def _artinian_over(base: BaseField, template: ArtinianAlgebra) -> ArtinianAlgebra:
    return ArtinianAlgebra(base, template.generators)


def relative_norm(elem: AlgebraElement, down_to: BaseField) -> AlgebraElement:
    """Norm along the field part of the coefficient ring, keeping nilpotents.

    For elem in A = k'[e..]/(..) with k' an extension of `down_to`, this is
    the determinant over A0 = down_to[e..]/(..) of multiplication by elem on
    A as a free A0-module with basis the field basis of k'.  For plain field
    elements it reduces to algebra_norm.
    """
    ring = elem.ring
    if isinstance(ring, BaseField):
        return algebra_norm(elem, down_to)
    if not isinstance(ring, ArtinianAlgebra):
        raise TowerError(f"unsupported ring {ring!r}")
    kprime = ring.base
    if kprime == down_to:
        return elem
    if not (isinstance(kprime, ExtensionField) and kprime.base == down_to):
        raise TowerError(f"{kprime!r} is not an extension of {down_to!r}")
    target = _artinian_over(down_to, ring)
    d = kprime.degree
    # columns: elem * u^j expressed over the field basis, coefficients in target
    cols = []
    for j in range(d):
        uj = AlgebraElement(kprime, kprime._pad([0] * j + [1]))
        prod = elem * lift(uj, ring)
        col = [dict() for _ in range(d)]
        for exps, c in prod.data.items():
            for i, ci in enumerate(c.data):
                if ci:
                    col[i][exps] = AlgebraElement(down_to, ci)
        cols.append([AlgebraElement(target, dict(col_i)) for col_i in col])
    matrix = [[cols[j][i] for j in range(d)] for i in range(d)]
    return mat_det(matrix, target)


def relative_trace(elem: AlgebraElement, down_to: BaseField) -> AlgebraElement:
    """Trace counterpart of relative_norm."""
    ring = elem.ring
    if isinstance(ring, BaseField):
        return algebra_trace(elem, down_to)
    if not isinstance(ring, ArtinianAlgebra):
        raise TowerError(f"unsupported ring {ring!r}")
    kprime = ring.base
    if kprime == down_to:
        return elem
    if not (isinstance(kprime, ExtensionField) and kprime.base == down_to):
        raise TowerError(f"{kprime!r} is not an extension of {down_to!r}")
    target = _artinian_over(down_to, ring)
    d = kprime.degree
    total = target.zero()
    for j in range(d):
        uj = AlgebraElement(kprime, kprime._pad([0] * j + [1]))
        prod = elem * lift(uj, ring)
        data = {}
        for exps, c in prod.data.items():
            ci = c.data[j]
            if ci:
                data[exps] = AlgebraElement(down_to, ci)
        total = total + AlgebraElement(target, data)
    return total
