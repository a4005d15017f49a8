"""Surface singularities C^2 / Z_r and their minimal resolutions.

For the A_{r-1} singularity the orbifold E-polynomial sums (uv)^{fixed dim + age}
over the r group elements.  The crepant resolution is the chain of r-1
rational curves found by subdividing the cone at its junior points.
"""

from stringy_mckay import toric
from stringy_mckay.modelfile import parse_model
from stringy_mckay.orbifold import render_sectors, sectors, verify_mckay

model = parse_model("kind = cyclic-quotient; order = 5; weights = 1,4")
print(render_sectors(sectors(model)))

# the cone over the lattice refined by (1/5, 4/5)
fan = toric.orthant_fan(toric.lattice_from_generators(2, [[model.group.generators[0].angles[i] for i in range(2)]]))
print("\nbox elements of the singular cone:")
for b in toric.box_elements(fan, fan.maximal_cones[0]):
    print("  point", [str(x) for x in b.point], "age", b.age)

resolved = toric.crepant_resolve(fan)
print("\nresolved fan:")
print(toric.render_fan(resolved))

for r in range(2, 8):
    rep = verify_mckay(parse_model(f"kind = cyclic-quotient; order = {r}; weights = 1,{r - 1}"))
    print(f"r = {r}:  E_orb = {rep.orbifold_class.render():<22} E_res = {rep.resolution_class.render():<22} chi = {rep.euler_orbifold}")
