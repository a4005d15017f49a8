"""Weighted projective planes: a complete orbifold that is not a global quotient.

Twisted sectors are labelled by angles theta with theta * w_i integral for some i.
The theta = 1/2 sector of WP(1,1,2) is the cone point, and its shift 1 turns the
coarse E-polynomial 1 + uv + (uv)^2 into the resolution's 1 + 2uv + (uv)^2.
"""

from stringy_mckay import toric
from stringy_mckay.orbifold import (
    WeightedProjective,
    render_report,
    render_sectors,
    sectors_wps,
    stratify_by_isotropy,
    toric_model_fan,
    verify_mckay,
)

for weights in [(1, 1, 2), (1, 2, 3), (1, 1, 3)]:
    print(f"WP{weights}")
    print(render_sectors(sectors_wps(weights)))
    rep = verify_mckay(WeightedProjective(weights))
    print(render_report(rep, "kv"))

fan = toric_model_fan(WeightedProjective((1, 2, 3)))
print(toric.render_fan(fan))
print("torus-orbit strata with nontrivial isotropy:")
for s in stratify_by_isotropy(fan):
    if s.isotropy_order > 1:
        print(f"  {s.cone}: |G_x| = {s.isotropy_order}, local ages {[str(a) for a in s.box_ages]}")
