# Minimal degree of rational curve families on a blown-up plane.
#
# The surface comes from a degree 19 parametrization with ten base points.
# Adding the canonical class repeatedly (and blowing down what becomes
# orthogonal) walks down to a ruled surface, where the answer is known; the
# degree then accumulates back up the chain.

from latticewidth import solve_min_degree, surface_from_basepoints

model = surface_from_basepoints(19, [7, 6, 6, 6, 6, 6, 6, 6, 6, 4])
print("D^2 =", model.degree)

rep = solve_min_degree(model)
for (l, mult), (_, case) in zip(rep.table(), rep.steps):
    cells = " ".join("-" if m is None else str(m) for m in mult)
    print(f"{l:>3} | {cells} | {case.value}")

print("minimal family degree:", rep.v)
print("optimal families:", [str(f) for f in rep.optimal_families])

# plane curves of degree d with d(d-1) simple base points
for d in (4, 5, 6):
    rep = solve_min_degree(surface_from_basepoints(d, [1] * (d * (d - 1))))
    print(f"d = {d}: v = {rep.v}, {len(rep.optimal_families)} families of lines through one point")
