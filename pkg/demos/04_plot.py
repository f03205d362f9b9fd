# Draw a polygon with its interior layers and the level lines of every
# optimal direction.  Open the SVG in any browser.

import sys

from latticewidth import convex_hull, solve
from latticewidth.cli import emit_svg

poly = convex_hull([(0, 0), (6, 1), (7, 4), (3, 6), (0, 3)])
rep = solve(poly)
out = sys.argv[1] if len(sys.argv) > 1 else "polygon.svg"
emit_svg(poly, rep, out)
print(f"width {rep.width} along {[tuple(h) for h in rep.optimal]}; wrote {out}")
