"""Todd-Coxeter coset enumeration: orders, indexes, and permutations.

Run:  python demos/04_coset_enumeration.py
"""

from dataclasses import replace

from cycpres import (
    FinitePresentation,
    generator_permutation,
    parse_presentation,
    semidirect_presentation,
    todd_coxeter,
)

# Small sanity cases first: cyclic and dihedral groups.
for n in (5, 12):
    t = todd_coxeter(FinitePresentation.make(("a",), (f"a^{n}",)))
    print(f"(a : a^{n}) has {t.count} cosets")
d = FinitePresentation.make(("r", "s"), ("r^7", "s^2", "r s r s"))
print("dihedral of order", todd_coxeter(d).count)

# The group K = (b, u : b^6, u^2 b^3 u b^2): finite of order 342, and the
# subgroup generated by b has index 57.
K = parse_presentation("""
gens: b u
rels:
b^6
u u b^3 u b^2
""")
print("\n|K| =", todd_coxeter(K).count)
over_b = todd_coxeter(replace(K, subgroup=(K.word("b"),)))
print("index of <b> in K =", over_b.count)
perm = generator_permutation(over_b, "b")
print("fixed cosets of b :", [i + 1 for i, img in enumerate(perm) if i == img])

# Both strategies land on the same standardized table.
over_b_pres = replace(K, subgroup=(K.word("b"),))
felsch = todd_coxeter(over_b_pres, strategy="felsch")
print("strategies agree:", over_b.rows == felsch.rows)

# Enumeration is a semi-decision procedure: on an infinite group the
# table only overflows, it never lies.
z2 = FinitePresentation.make(("a", "b"), ("a b A B",))
t = todd_coxeter(z2, max_cosets=500)
print("\nfree abelian of rank 2:", t.status,
      f"({t.count} live cosets at the cap)")

# Extensions of cyclic groups by G_n(k,l) come ready-made.
E = semidirect_presentation(5, 0, 1)
print("\nextension presentation for (5,0,1):")
print(E)
print("|E| =", todd_coxeter(E).count, "(= n times the order of G_5(0,1))")

# The table itself: columns are the generator actions on cosets.
t = todd_coxeter(FinitePresentation.make(("a",), ("a^4",)))
print("\n" + t.dump())
