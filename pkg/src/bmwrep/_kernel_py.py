"""Pure-Python sparse-polynomial kernels.

A sparse polynomial is a dict mapping exponent tuples to coefficient
objects.  Coefficients may be ints (bivariate parameter polynomials) or
Scalars (multivariate polynomials over the parameter field); they only
need ``+``, ``*``, unary ``-`` and truthiness (falsy == zero).  Stored
coefficients are never zero.

``bmwrep._speedups`` is a Cython twin of this module; both must stay
semantically identical (see tests/test_kernel.py).
"""

BACKEND = "python"


def sparse_add(a, b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for k, v in b.items():
        cur = out.get(k)
        if cur is None:
            out[k] = v
        else:
            cur = cur + v
            if cur:
                out[k] = cur
            else:
                del out[k]
    return out


def sparse_sub(a, b):
    out = dict(a)
    for k, v in b.items():
        cur = out.get(k)
        if cur is None:
            out[k] = -v
        else:
            cur = cur - v
            if cur:
                out[k] = cur
            else:
                del out[k]
    return out


def sparse_neg(a):
    return {k: -v for k, v in a.items()}


def sparse_mul(a, b):
    if not a or not b:
        return {}
    if len(b) < len(a):
        a, b = b, a
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            prod = va * vb
            cur = out.get(key)
            if cur is None:
                if prod:
                    out[key] = prod
            else:
                cur = cur + prod
                if cur:
                    out[key] = cur
                else:
                    del out[key]
    return out


def sparse_scale(a, c):
    if not c:
        return {}
    out = {}
    for k, v in a.items():
        prod = v * c
        if prod:
            out[k] = prod
    return out


def sparse_mul_term(a, key, c):
    """a * c*x^key, with key an exponent tuple."""
    if not c:
        return {}
    out = {}
    for k, v in a.items():
        prod = v * c
        if prod:
            out[tuple(x + y for x, y in zip(k, key))] = prod
    return out
