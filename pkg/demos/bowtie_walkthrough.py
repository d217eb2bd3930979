"""Walk the bow-tie graph through every stage of the pipeline.

The bow-tie is two triangles joined by a path of length two. Its edge ring
is not normal, so the edge ring's Hilbert series undercounts lattice
points; one extra variable, attached to the pair of triangles, repairs it.

Run:  python3 demos/bowtie_walkthrough.py
"""

from edgehrhart import bowtie_graph, count_lp, hilbert_series_edge_ring, run_pipeline

g = bowtie_graph()
print("edges:", ", ".join(f"e_{k}={a}{b}" for k, (a, b) in enumerate(g.labelled_edges())))

r = run_pipeline(g)
print("\nsimple cycles:")
for c in r.cycles:
    print(f"  C_{c.index}: edges {c.edge_ids} ({c.parity})")

print("\nexceptional pairs (odd, disjoint, no edge between them):")
for p in r.pairs:
    i, j = p.cycle_indices
    print(f"  ({i}, {j}) joined by paths", [q.edge_ids for q in p.connecting_paths])

ring = r.ring
print("\nvariables and their degrees:")
print("  " + ", ".join(f"{v.name}:{v.psi_degree}" for v in ring.variables))

print("\ngenerators by family:")
for fam, bins in r.generators.items():
    for b in bins:
        print(f"  [{fam}] {ring.format_binomial(b)}")

print("\nreduced Groebner basis, lex with the theta variable first:")
for b in r.basis.elements:
    print("  " + ring.format_binomial(b))

print("\nMoebius sum over the lcm lattice of the initial monomials:")
for m, c in sorted(r.moebius.terms.items(), key=lambda t: ring.degree(t[0])):
    print(f"  {c:+d} {ring.format(m)}")

print("\nspecialised numerator (before cancelling):", r.raw_numerator)
print("Ehrhart series:   ", r.series)
print("edge-ring series: ", hilbert_series_edge_ring(g))

p = r.polynomial
print("\ni(m) =", p.hstar_form())
print("     =", p.monomial_form())
print("\n m  polynomial  lattice points")
for m in range(5):
    print(f"{m:>2}  {p(m):>10}  {count_lp(g, m).count:>14}")
