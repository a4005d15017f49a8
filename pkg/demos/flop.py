"""Two crepant resolutions of the cone over a square.

The conifold cone has two small resolutions related by a flop.  They are
K-equivalent, so their E-polynomials agree even though the fans differ.
"""

from fractions import Fraction as F

from stringy_mckay import toric
from stringy_mckay.catalog import FLOP_A, FLOP_B
from stringy_mckay.modelfile import parse_model
from stringy_mckay.orbifold import compare_k_equivalent, render_report

a, b = parse_model(FLOP_A).fan, parse_model(FLOP_B).fan
for name, fan in [("A", a), ("B", b)]:
    cones = [c.ray_indices for c in fan.maximal_cones]
    print(f"resolution {name}: cones {cones}, smooth = {toric.is_smooth(fan)}, E = {toric.epoly_of_fan(fan).render()}")
print(render_report(compare_k_equivalent(a, b), "kv"))

# two different triangulations of a 3-fold quotient's junior simplex
base = toric.orthant_fan(toric.lattice_from_generators(3, [[F(1, 11), F(3, 11), F(7, 11)]]))
t1 = toric.crepant_resolve(base)
t2 = toric.crepant_resolve(base, reverse=True, delaunay=False)
print("1/11(1,3,7): same cones?", t1.maximal_cones == t2.maximal_cones)
print(render_report(compare_k_equivalent(t1, t2, base=base), "kv"))
