# cython: language_level=3
"""Compiled polynomial kernels over F_p (p < 2**31).

Same contract as ``_pykernels``: ascending, trimmed coefficient lists.
"""

cdef list _trim(list a):
    cdef Py_ssize_t n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def trim(list a):
    return _trim(a)


def poly_add(list a, list b, long long p):
    cdef Py_ssize_t i, na = len(a), nb = len(b)
    cdef Py_ssize_t n = na if na > nb else nb
    cdef list out = [0] * n
    cdef long long s
    for i in range(n):
        s = 0
        if i < na:
            s += <long long>a[i]
        if i < nb:
            s += <long long>b[i]
        out[i] = s % p
    return _trim(out)


def poly_sub(list a, list b, long long p):
    cdef Py_ssize_t i, na = len(a), nb = len(b)
    cdef Py_ssize_t n = na if na > nb else nb
    cdef list out = [0] * n
    cdef long long s
    for i in range(n):
        s = 0
        if i < na:
            s += <long long>a[i]
        if i < nb:
            s -= <long long>b[i]
        s %= p
        if s < 0:
            s += p
        out[i] = s
    return _trim(out)


def poly_mul(list a, list b, long long p):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef long long[::1] av, bv, acc
    import array
    av = array.array('q', a)
    bv = array.array('q', b)
    acc = array.array('q', [0]) * (na + nb - 1)
    cdef long long x
    for i in range(na):
        x = av[i]
        if x == 0:
            continue
        for j in range(nb):
            acc[i + j] = (acc[i + j] + x * bv[j]) % p
    return _trim([acc[i] for i in range(na + nb - 1)])


def poly_divmod(list a, list b, long long p):
    cdef Py_ssize_t na = len(a), nb = len(b), k, j, off
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    cdef Py_ssize_t db = nb - 1
    if na - 1 < db:
        return [], list(a)
    cdef long long inv = pow(b[nb - 1], p - 2, p)
    cdef long long c
    import array
    cdef long long[::1] r = array.array('q', a)
    cdef long long[::1] bv = array.array('q', b)
    cdef long long[::1] q = array.array('q', [0]) * (na - db)
    for k in range(na - 1, db - 1, -1):
        c = r[k] % p
        if c == 0:
            continue
        c = c * inv % p
        q[k - db] = c
        off = k - db
        for j in range(db + 1):
            r[off + j] = (r[off + j] - c * bv[j]) % p
            if r[off + j] < 0:
                r[off + j] += p
    return (_trim([q[k] for k in range(na - db)]),
            _trim([r[k] for k in range(db)]))


def poly_eval(list a, long long x, long long p):
    cdef long long acc = 0
    cdef Py_ssize_t i
    for i in range(len(a) - 1, -1, -1):
        acc = (acc * x + <long long>a[i]) % p
    return acc
