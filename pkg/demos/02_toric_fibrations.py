# Directions on a polygon as pencils of curves on the toric surface.
#
# Each monomial s^a t^b of the polygon becomes a coordinate x_i.  A
# primitive direction (m, n) gives a rational map x -> prod x_i^e_i whose
# fibres are curves of degree equal to the width along (m, n).

from fractions import Fraction

from latticewidth import MonomialEmbedding, fiber_parametrization, fibration_exponents, optimal_toric_families

emb = MonomialEmbedding(((0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1)))

for h in [(1, -1), (1, 0)]:
    desc = fibration_exponents(emb, h)
    print(f"direction {h}: map {desc.monomial_map()}, fibres of degree {desc.degree}")

v, families = optimal_toric_families(emb)
print("minimal fibre degree:", v)
for desc in families:
    print("  ", desc.h, desc.monomial_map())

# walk along one fibre with k = 1, l = 2 and check x1/x0 stays at 2
points = fiber_parametrization(emb, (1, 0), (1, 1, 2, 1), [1, 2, 3, Fraction(1, 2)])
for p in points:
    print(p, "x1/x0 =", Fraction(p[1], p[0]))
