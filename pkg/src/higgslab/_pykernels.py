"""Pure-Python polynomial kernels over F_p.

Coefficient lists are ascending and trimmed (no trailing zeros); every entry
lies in ``range(p)``.  These are the reference implementations; the compiled
module ``_ckernels`` mirrors them signature for signature.
"""


def trim(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return a[:n]


def poly_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def poly_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return trim(out)


def poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim([c % p for c in out])


def poly_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], list(a)
    inv = pow(b[-1], p - 2, p)
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = r[k] % p
        if not c:
            continue
        c = c * inv % p
        q[k - db] = c
        off = k - db
        for j in range(db + 1):
            r[off + j] = (r[off + j] - c * b[j]) % p
    return trim(q), trim([c % p for c in r[:db]])


def poly_eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc
