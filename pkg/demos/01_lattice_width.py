# Lattice width of a small hexagon, computed two ways.
#
# The recursive solver peels off interior layers (adjoint polygons) and only
# enumerates directions on the innermost one; the brute-force solver scans
# every primitive direction inside a provable box.  They must agree.

from latticewidth import convex_hull, interior_points, solve, solve_bruteforce, width_of
from latticewidth.polygon import adjoint, shoe

hexagon = convex_hull([(0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1)])
print("vertices:", [tuple(v) for v in hexagon.vertices])
print("interior:", sorted(interior_points(hexagon)))

rep = solve(hexagon)
print("width", rep.width, "attained by", [tuple(h) for h in rep.optimal])
print("agrees with enumeration:", rep == solve_bruteforce(hexagon))

# a direction that is not optimal
print("width along (1,-1):", width_of(hexagon, (1, -1)))

# A big triangle: every layer shrinks it by 3, so the case trace is long.
big = shoe(10, 0, 10)
rep = solve(big)
for depth, (layer, case) in enumerate(rep.trace):
    print(f"layer {depth}: {len(layer.vertices)} vertices, case {case.value}")
print("width of the side-10 triangle:", rep.width)

