# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-map kernels; API mirrors staircase._kernel_py."""

BACKEND = "cython"


cdef inline tuple _tuple_add(tuple ea, tuple eb):
    cdef Py_ssize_t i, n = len(ea)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <object> ea[i] + <object> eb[i]
    return tuple(out)


def add_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, prev, s
    for e, c in b.items():
        prev = out.get(e)
        if prev is None:
            out[e] = c
        else:
            s = prev + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def sub_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, prev, s
    for e, c in b.items():
        prev = out.get(e)
        if prev is None:
            out[e] = -c
        else:
            s = prev - c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def mul_terms(dict a, dict b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    cdef tuple ea, eb, e
    cdef object ca, cb, prev
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _tuple_add(ea, eb)
            prev = out.get(e)
            if prev is None:
                out[e] = ca * cb
            else:
                out[e] = prev + ca * cb
    cdef dict filtered = {}
    cdef object c
    for e, c in out.items():
        if c:
            filtered[e] = c
    return filtered


def scale_terms(dict a, c):
    if not c:
        return {}
    cdef dict out = {}
    cdef object e, x
    for e, x in a.items():
        out[e] = x * c
    return out


def shift_terms(dict a, tuple delta):
    cdef bint nonzero = False
    cdef object d
    for d in delta:
        if d:
            nonzero = True
            break
    if not nonzero:
        return dict(a)
    cdef dict out = {}
    cdef tuple e
    cdef object c
    for e, c in a.items():
        out[_tuple_add(e, delta)] = c
    return out


def addmul_terms(dict acc, tuple exp, coeff, dict b):
    cdef bint shift = False
    cdef object d
    for d in exp:
        if d:
            shift = True
            break
    cdef tuple eb, e
    cdef object cb, prev, s
    for eb, cb in b.items():
        e = _tuple_add(exp, eb) if shift else eb
        prev = acc.get(e)
        if prev is None:
            acc[e] = coeff * cb
        else:
            s = prev + coeff * cb
            if s:
                acc[e] = s
            else:
                del acc[e]
