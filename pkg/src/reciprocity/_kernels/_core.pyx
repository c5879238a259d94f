# cython: language_level=3
"""Compiled kernels for dense arithmetic modulo a prime.

Same contracts as ``reciprocity._kernels.pure`` (lists in, lists out).
Primes must fit in 31 bits for the C paths; larger primes delegate to the
pure implementation so behavior never changes, only speed.
"""

from libc.stdlib cimport malloc, free

from . import pure as _pure

BACKEND = "compiled"

DEF PMAX = 2147483647  # 2^31 - 1


cdef long long _invmod_ll(long long a, long long p):
    # Fermat inverse; p prime, a != 0 mod p.
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


cdef long long* _to_c(list a) except NULL:
    cdef Py_ssize_t n = len(a)
    cdef long long* buf = <long long*> malloc((n if n else 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = a[i]
    return buf


cdef list _from_c(long long* buf, Py_ssize_t n):
    # strip trailing zeros
    while n and buf[n - 1] == 0:
        n -= 1
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = buf[i]
    return out


def normalize(a):
    return _pure.normalize(a)


def add(list a, list b, long long p):
    if p > PMAX:
        return _pure.add(a, b, p)
    cdef Py_ssize_t na = len(a), nb = len(b), n = na if na > nb else nb, i
    cdef long long* out = <long long*> malloc((n if n else 1) * sizeof(long long))
    if out == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            out[i] = ((<long long> a[i] if i < na else 0) + (<long long> b[i] if i < nb else 0)) % p
        return _from_c(out, n)
    finally:
        free(out)


def sub(list a, list b, long long p):
    if p > PMAX:
        return _pure.sub(a, b, p)
    cdef Py_ssize_t na = len(a), nb = len(b), n = na if na > nb else nb, i
    cdef long long* out = <long long*> malloc((n if n else 1) * sizeof(long long))
    if out == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            out[i] = ((<long long> a[i] if i < na else 0) - (<long long> b[i] if i < nb else 0)) % p
            if out[i] < 0:
                out[i] += p
        return _from_c(out, n)
    finally:
        free(out)


def neg(list a, long long p):
    if p > PMAX:
        return _pure.neg(a, p)
    return [(p - c) % p for c in a]


def scalar_mul(list a, long long c, long long p):
    if p > PMAX:
        return _pure.scalar_mul(a, c, p)
    c %= p
    if c < 0:
        c += p
    if c == 0:
        return []
    cdef Py_ssize_t n = len(a), i
    cdef long long* out = <long long*> malloc((n if n else 1) * sizeof(long long))
    if out == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            out[i] = (<long long> a[i] * c) % p
        return _from_c(out, n)
    finally:
        free(out)


def mul(list a, list b, long long p):
    if p > PMAX:
        return _pure.mul(a, b, p)
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef Py_ssize_t n = na + nb - 1, i, j
    cdef long long* ca = _to_c(a)
    cdef long long* cb = NULL
    cdef long long* out = NULL
    cdef long long x
    try:
        cb = _to_c(b)
        out = <long long*> malloc(n * sizeof(long long))
        if out == NULL:
            raise MemoryError()
        for i in range(n):
            out[i] = 0
        for i in range(na):
            x = ca[i]
            if x:
                for j in range(nb):
                    out[i + j] = (out[i + j] + x * cb[j]) % p
        return _from_c(out, n)
    finally:
        free(ca)
        if cb != NULL:
            free(cb)
        if out != NULL:
            free(out)


def divmod_poly(list num, list den, long long p):
    if p > PMAX:
        return _pure.divmod_poly(num, den, p)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    cdef Py_ssize_t nr = len(num), nd = len(den), dd = nd - 1, k, j
    if nr - 1 < dd:
        return [], _pure.normalize(list(num))
    cdef long long* r = _to_c(num)
    cdef long long* d = NULL
    cdef long long* q = NULL
    cdef long long inv_lead, c
    try:
        d = _to_c(den)
        q = <long long*> malloc((nr - dd) * sizeof(long long))
        if q == NULL:
            raise MemoryError()
        for k in range(nr - dd):
            q[k] = 0
        inv_lead = _invmod_ll(d[dd], p)
        for k in range(nr - 1, dd - 1, -1):
            c = r[k] % p
            if c:
                c = (c * inv_lead) % p
                q[k - dd] = c
                for j in range(dd + 1):
                    r[k - dd + j] = (r[k - dd + j] - c * d[j]) % p
                    if r[k - dd + j] < 0:
                        r[k - dd + j] += p
        return _from_c(q, nr - dd), _from_c(r, dd)
    finally:
        free(r)
        if d != NULL:
            free(d)
        if q != NULL:
            free(q)


def rem(list a, list m, long long p):
    return divmod_poly(a, m, p)[1]


def monic(list a, long long p):
    if p > PMAX:
        return _pure.monic(a, p)
    if not a:
        return []
    cdef long long lead = a[len(a) - 1]
    if lead == 1:
        return list(a)
    return scalar_mul(a, _invmod_ll(lead, p), p)


def gcd(list a, list b, long long p):
    if p > PMAX:
        return _pure.gcd(a, b, p)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def xgcd(list a, list b, long long p):
    if p > PMAX:
        return _pure.xgcd(a, b, p)
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_poly(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    cdef long long c = _invmod_ll(r0[len(r0) - 1], p)
    return scalar_mul(r0, c, p), scalar_mul(s0, c, p), scalar_mul(t0, c, p)


def invmod(list a, list m, long long p):
    g, s, _ = xgcd(a, m, p)
    if g != [1]:
        raise ZeroDivisionError("element is not invertible modulo the given polynomial")
    return rem(s, m, p)


def mulmod(list a, list b, list m, long long p):
    return rem(mul(a, b, p), m, p)


def powmod(list a, e, list m, long long p):
    if p > PMAX:
        return _pure.powmod(a, e, m, p)
    if e < 0:
        a = invmod(a, m, p)
        e = -e
    result = rem([1], m, p)
    base = rem(a, m, p)
    while e:
        if e & 1:
            result = mulmod(result, base, m, p)
        base = mulmod(base, base, m, p)
        e >>= 1
    return result


def eval_at(list a, long long x, long long p):
    if p > PMAX:
        return _pure.eval_at(a, x, p)
    cdef long long acc = 0
    cdef Py_ssize_t i
    x %= p
    if x < 0:
        x += p
    for i in range(len(a) - 1, -1, -1):
        acc = (acc * x + <long long> a[i]) % p
    return acc


def mat_mul(list a, list b, long long p):
    if p > PMAX:
        return _pure.mat_mul(a, b, p)
    cdef Py_ssize_t n = len(a), k = len(b), m = len(b[0]) if k else 0
    cdef Py_ssize_t i, j, t
    cdef long long* ca = <long long*> malloc((n * k if n * k else 1) * sizeof(long long))
    cdef long long* cb = NULL
    cdef long long* co = NULL
    cdef long long c
    if ca == NULL:
        raise MemoryError()
    try:
        cb = <long long*> malloc((k * m if k * m else 1) * sizeof(long long))
        co = <long long*> malloc((n * m if n * m else 1) * sizeof(long long))
        if cb == NULL or co == NULL:
            raise MemoryError()
        for i in range(n):
            row = a[i]
            for t in range(k):
                ca[i * k + t] = row[t]
        for t in range(k):
            row = b[t]
            for j in range(m):
                cb[t * m + j] = row[j]
        for i in range(n * m):
            co[i] = 0
        for i in range(n):
            for t in range(k):
                c = ca[i * k + t]
                if c:
                    for j in range(m):
                        co[i * m + j] = (co[i * m + j] + c * cb[t * m + j]) % p
        return [[co[i * m + j] for j in range(m)] for i in range(n)]
    finally:
        free(ca)
        if cb != NULL:
            free(cb)
        if co != NULL:
            free(co)


def mat_det(list a, long long p):
    if p > PMAX:
        return _pure.mat_det(a, p)
    cdef Py_ssize_t n = len(a), col, r, j, pivot
    cdef long long* m = <long long*> malloc((n * n if n else 1) * sizeof(long long))
    cdef long long det = 1, pv, inv, f
    if m == NULL:
        raise MemoryError()
    try:
        for r in range(n):
            row = a[r]
            for j in range(n):
                m[r * n + j] = <long long> row[j] % p
                if m[r * n + j] < 0:
                    m[r * n + j] += p
        for col in range(n):
            pivot = -1
            for r in range(col, n):
                if m[r * n + col]:
                    pivot = r
                    break
            if pivot < 0:
                return 0
            if pivot != col:
                for j in range(n):
                    m[col * n + j], m[pivot * n + j] = m[pivot * n + j], m[col * n + j]
                det = (p - det) % p
            pv = m[col * n + col]
            det = (det * pv) % p
            inv = _invmod_ll(pv, p)
            for r in range(col + 1, n):
                f = (m[r * n + col] * inv) % p
                if f:
                    for j in range(col, n):
                        m[r * n + j] = (m[r * n + j] - f * m[col * n + j]) % p
                        if m[r * n + j] < 0:
                            m[r * n + j] += p
        return det % p
    finally:
        free(m)


def mat_inv(list a, long long p):
    if p > PMAX:
        return _pure.mat_inv(a, p)
    return _pure.mat_inv(a, p) if p > PMAX else _mat_inv_c(a, p)


cdef list _mat_inv_c(list a, long long p):
    cdef Py_ssize_t n = len(a), col, r, j, pivot, w = 2 * n
    cdef long long* m = <long long*> malloc((n * w if n else 1) * sizeof(long long))
    cdef long long inv, f
    if m == NULL:
        raise MemoryError()
    try:
        for r in range(n):
            row = a[r]
            for j in range(n):
                m[r * w + j] = <long long> row[j] % p
                if m[r * w + j] < 0:
                    m[r * w + j] += p
            for j in range(n, w):
                m[r * w + j] = 1 if j - n == r else 0
        for col in range(n):
            pivot = -1
            for r in range(col, n):
                if m[r * w + col]:
                    pivot = r
                    break
            if pivot < 0:
                raise ZeroDivisionError("matrix is singular modulo p")
            if pivot != col:
                for j in range(w):
                    m[col * w + j], m[pivot * w + j] = m[pivot * w + j], m[col * w + j]
            inv = _invmod_ll(m[col * w + col], p)
            for j in range(w):
                m[col * w + j] = (m[col * w + j] * inv) % p
            for r in range(n):
                if r != col and m[r * w + col]:
                    f = m[r * w + col]
                    for j in range(w):
                        m[r * w + j] = (m[r * w + j] - f * m[col * w + j]) % p
                        if m[r * w + j] < 0:
                            m[r * w + j] += p
        return [[m[r * w + n + j] for j in range(n)] for r in range(n)]
    finally:
        free(m)
