"""Where the roots of a polygon tree's Ehrhart polynomial live.

A polygon tree is grown by gluing even cycles along single edges. Its
Ehrhart polynomial has a run of negative-integer roots, and every other
root sits on one vertical line in the complex plane. This script builds a
few trees, compares their series with the product formula, and prints the
root locations.

Run:  python3 demos/polygon_tree_roots.py
"""

import numpy as np

from edgehrhart import (closed_form_series, ehrhart_polynomial, ehrhart_series,
                        polygon_tree_graph, polygon_tree_profile, root_report)

TREES = [([4, 4], [0]), ([4, 4, 4], [0, 5]), ([6, 4], [2]), ([4, 6, 4], [1, 7]),
         ([8, 4], [3])]

for lengths, anchors in TREES:
    g = polygon_tree_graph(lengths, anchors)
    prof = polygon_tree_profile(g)
    series = ehrhart_series(g)
    formula = closed_form_series("polygon_tree", prof)
    rep = root_report(ehrhart_polynomial(series), prof)
    # roots list the exact integer roots first
    others = np.array(rep.roots[len(rep.integer_roots):])
    print(f"cycles {lengths}: e={prof.e}, series {series}",
          "(matches product formula)" if series == formula else "(MISMATCH)")
    print(f"  integer roots {list(rep.integer_roots)}; line Re = {rep.critical_line}")
    if others.size:
        print(f"  other roots   {np.array2string(others, precision=4)}")
        print(f"  max |Re - line| = {np.max(np.abs(others.real - rep.critical_line)):.1e}")
