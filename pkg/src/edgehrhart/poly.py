"""Dense univariate polynomials as ascending coefficient lists.

Coefficients are ints or ``Fraction``s (complex only in ``rv_step``
callers). Lists are trimmed of trailing zeros; the zero polynomial is
``[]``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def add(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p, q):
    return add(p, [-c for c in q])


def scale(p, c):
    return trim([c * x for x in p])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def power(p, n):
    out = [1]
    for _ in range(n):
        out = mul(out, p)
    return out


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def divmod_poly(p, q):
    """Polynomial long division; exact for Fraction/int inputs when the
    leading coefficient of ``q`` divides evenly, else Fractions appear."""
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError
    quot = [0] * max(len(p) - len(q) + 1, 0)
    rem = list(p)
    lead = q[-1]
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(q) - 1]
        if c:
            c = c // lead if isinstance(c, int) and isinstance(lead, int) and c % lead == 0 \
                else Fraction(c) / lead
            quot[i] = c
            for j, b in enumerate(q):
                rem[i + j] -= c * b
    return trim(quot), trim(rem)


def exact_div(p, q):
    quot, rem = divmod_poly(p, q)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return quot


ONE_MINUS_T = [1, -1]


def strip_one_minus_t(p):
    """Divide by ``(1 - t)`` as often as it divides; return ``(q, times)``."""
    p = trim(p)
    k = 0
    while p and evaluate(p, 1) == 0:
        p = exact_div(p, ONE_MINUS_T)
        k += 1
    return p, k


def geometric(n):
    """``1 + t + ... + t^(n-1)``."""
    return [1] * n


def derivative(p):
    return trim([i * c for i, c in enumerate(p)][1:])


def monic_gcd(p, q):
    p = [Fraction(c) for c in trim(p)]
    q = [Fraction(c) for c in trim(q)]
    while q:
        _, r = divmod_poly(p, q)
        p, q = q, r
    if not p:
        return []
    return [c / p[-1] for c in p]


def taylor_shift(p, s):
    """Coefficients of ``p(x + s)``."""
    out = []
    for k, c in enumerate(p):
        term = [c * comb(k, i) * s ** (k - i) for i in range(k + 1)]
        out = add(out, term)
    return out


def binomial_poly(shift: int, d: int):
    """Rational coefficients of ``C(x + shift, d)`` as a polynomial in ``x``."""
    out = [Fraction(1)]
    for i in range(d):
        out = mul(out, [Fraction(shift - i), Fraction(1)])
    f = Fraction(1, 1)
    for i in range(1, d + 1):
        f *= i
    return [c / f for c in out]


def format_poly(p, var="t"):
    """``1 + t + t^2 + 2*t^3`` style, ascending powers."""
    p = trim(p)
    if not p:
        return "0"
    parts = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\*?)?(?:([a-z])(?:\^(\d+))?)?$")


def parse_poly(text: str):
    """Inverse of ``format_poly`` (integer or rational coefficients)."""
    s = text.replace(" ", "")
    if s == "0":
        return []
    tokens = re.findall(r"[+-]?[^+-]+", s)
    out: dict[int, Fraction] = {}
    for tok in tokens:
        sign = -1 if tok.startswith("-") else 1
        body = tok.lstrip("+-")
        m = _TERM.match(body)
        if not m or body == "":
            raise ValueError(f"cannot parse term {tok!r}")
        coef, var, exp = m.groups()
        c = Fraction(coef) if coef else Fraction(1)
        k = 0 if var is None else (int(exp) if exp else 1)
        out[k] = out.get(k, 0) + sign * c
    deg = max(out)
    res = [out.get(i, Fraction(0)) for i in range(deg + 1)]
    if all(c.denominator == 1 for c in res):
        res = [int(c) for c in res]
    return trim(res)
