# cython: language_level=3
"""Cython twin of bmwrep._kernel_py.

Same contract: dicts mapping exponent tuples to nonzero coefficient
objects (ints or Scalars).  The win over pure Python is the tight dict
merge/product loops; coefficient arithmetic stays in object space.
"""

BACKEND = "cython"


def sparse_add(dict a, dict b):
    cdef dict out
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


def sparse_sub(dict a, dict b):
    cdef dict out = dict(a)
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


def sparse_neg(dict a):
    cdef dict out = {}
    for k, v in a.items():
        out[k] = -v
    return out


cdef inline tuple _tadd(tuple ka, tuple kb):
    cdef Py_ssize_t n = len(ka)
    if n == 2:
        return (<object>ka[0] + <object>kb[0], <object>ka[1] + <object>kb[1])
    cdef list items = []
    cdef Py_ssize_t i
    for i in range(n):
        items.append(<object>ka[i] + <object>kb[i])
    return tuple(items)


def sparse_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple ka, kb, key
    if not a or not b:
        return out
    if len(b) < len(a):
        a, b = b, a
    for ka, va in a.items():
        for kb, vb in b.items():
            key = _tadd(ka, kb)
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


def sparse_scale(dict a, c):
    cdef dict out = {}
    if not c:
        return out
    for k, v in a.items():
        prod = v * c
        if prod:
            out[k] = prod
    return out


def sparse_mul_term(dict a, tuple key, c):
    cdef dict out = {}
    cdef tuple k
    if not c:
        return out
    for k, v in a.items():
        prod = v * c
        if prod:
            out[_tadd(k, key)] = prod
    return out
