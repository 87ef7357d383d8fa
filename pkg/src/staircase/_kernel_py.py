"""Pure-Python term-map kernels for sparse polynomial arithmetic.

A term map is a dict from exponent tuples (one non-negative int per variable)
to nonzero coefficients (Fraction or CycloNum).  These functions are the hot
inner loops; ``staircase._kernel`` is the compiled twin with the same API.
"""

from __future__ import annotations

BACKEND = "python"


def add_terms(a: dict, b: dict) -> dict:
    out = dict(a)
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


def sub_terms(a: dict, b: dict) -> dict:
    out = dict(a)
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


def mul_terms(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            prev = out.get(e)
            if prev is None:
                out[e] = ca * cb
            else:
                out[e] = prev + ca * cb
    return {e: c for e, c in out.items() if c}


def scale_terms(a: dict, c) -> dict:
    if not c:
        return {}
    return {e: x * c for e, x in a.items()}


def shift_terms(a: dict, delta: tuple) -> dict:
    """Multiply by the monomial with exponent vector ``delta``."""
    if not any(delta):
        return dict(a)
    return {tuple(x + y for x, y in zip(e, delta)): c for e, c in a.items()}


def addmul_terms(acc: dict, exp: tuple, coeff, b: dict) -> None:
    """In place: acc += coeff * x^exp * b.  Used by the division inner loop."""
    if any(exp):
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(exp, eb))
            prev = acc.get(e)
            if prev is None:
                acc[e] = coeff * cb
            else:
                s = prev + coeff * cb
                if s:
                    acc[e] = s
                else:
                    del acc[e]
    else:
        for eb, cb in b.items():
            prev = acc.get(eb)
            if prev is None:
                acc[eb] = coeff * cb
            else:
                s = prev + coeff * cb
                if s:
                    acc[eb] = s
                else:
                    del acc[eb]
