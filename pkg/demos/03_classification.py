"""The finiteness / asphericity / shift-dynamics taxonomy for G_n(k,l).

Three divisibility conditions on (n, k, l) modulo n drive everything:

    A: 3 | n and 3 | k+l
    B: n | k+l or n | 2k-l or n | 2l-k
    C: n | 3k  or n | 3l   or n | 3(k-l)

together with the gcd reduction d = gcd(n,k,l) > 1 (a free product of d
copies of the reduced case).  Two facts hold for every triple: the shift
acts freely on nonidentity elements exactly when the presentation is
combinatorially aspherical, and the group is finite exactly when the
shift has a nonidentity fixed point.

Run:  python demos/03_classification.py
"""

from collections import Counter

from cycpres import classify, conditions, gcd_decompose, reduce_to_0p, sweep

for triple in [(3, 1, 2), (5, 0, 1), (6, 2, 4), (7, 0, 3), (18, 1, 11)]:
    c = classify(*triple)
    verdict = "finite" if c.finite else "infinite"
    if c.order is not None:
        verdict += f" of order {c.order}"
    print(f"G_{c.n}({c.k},{c.l}): {verdict}  [{c.branch}]")
    print(f"   aspherical={c.ca}  free shift={c.free_shift}"
          f"  theta fixed point={c.theta_fixed}")
    print(f"   {c.structure_note}")

# The exceptional n=18 family: neither B nor C, yet 3 | k+l.
exceptional = [(k, l) for k in range(18) for l in range(18)
               if classify(18, k, l).exceptional_n18]
print(f"\nexceptional n=18 parameter pairs: {len(exceptional)}"
      f" (e.g. {exceptional[:4]} ...)")

# gcd reduction in action.
d, reduced = gcd_decompose(12, 4, 8)
print(f"\n(12,4,8) splits into {d} copies of {reduced}")

# Condition C triples are commensurable with a two-parameter group
# G_n(0,p); the pair (p, f) names the kernel and the retraction exponent.
print("\nreduce_to_0p(9, 3, 1) ->", reduce_to_0p(9, 3, 1))

# Branch statistics over a sweep.
counts = Counter(c.branch for c in sweep(12))
print("\nbranch counts for n <= 12:")
for branch, count in sorted(counts.items()):
    print(f"  {branch:30s} {count}")
finite = sum(1 for c in sweep(12) if c.finite)
print(f"finite: {finite} of {sum(n * n for n in range(1, 13))} triples")
