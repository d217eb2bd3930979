"""Reduced lex Groebner basis of a toric ideal by sympy elimination.

The ideal of ``f_i - x^{a_i}`` is computed with the ``x`` variables
eliminated first; its elements free of ``x`` are the reduced basis of the
toric ideal for the lex order ``f_0 > f_1 > ...``.
"""

import sympy


def toric_basis(images):
    n_vert = len(images[0])
    xs = sympy.symbols(f"x0:{n_vert}")
    fs = sympy.symbols(f"f0:{len(images)}")
    polys = [f - sympy.Mul(*[x**c for x, c in zip(xs, img)]) for f, img in zip(fs, images)]
    gb = sympy.groebner(polys, *xs, *fs, order="lex")
    out = set()
    for p in gb.exprs:
        if p.free_symbols & set(xs):
            continue
        terms = sympy.Poly(p, *fs).terms()
        assert len(terms) == 2 and sorted(c for _, c in terms) == [-1, 1]
        out.add(frozenset(m for m, _ in terms))
    return out
