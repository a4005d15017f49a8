"""Inertia groupoids of one-point actions.

Objects of the inertia groupoid of BG are group elements, and arrows are
conjugations, so its connected components are the conjugacy classes.
"""

from stringy_mckay.groupoids import (
    GroupTable,
    action_groupoid,
    conjugacy_class_count,
    cyclic_table,
    dihedral_table,
    inertia,
    pi0,
    symmetric_table,
    validate,
)
from stringy_mckay.modelfile import parse_model

q8 = parse_model(
    "kind = monomial-quotient; gen = diag(1/4, 3/4); gen = mono(perm = [1, 0]; angles = [0, 1/2])"
).group

groups = {"C6": cyclic_table(6), "S3": symmetric_table(3), "D4": dihedral_table(4), "Q8": GroupTable.from_monomial_group(q8)}
for name, H in groups.items():
    BG = action_groupoid(["*"], H, lambda h, x: x)
    I = inertia(BG)
    print(
        f"{name}: |H| = {len(H.elements)}, inertia has {len(I.objects)} objects and {len(I.arrows)} arrows, "
        f"pi0 = {len(pi0(I))}, classes = {conjugacy_class_count(H)}, valid = {validate(I).ok}"
    )

# a free action has trivial inertia: Z2 swapping two points looks like a single point
free = action_groupoid(["+", "-"], cyclic_table(2), lambda g, x: x if g == 0 else {"+": "-", "-": "+"}[x])
print("free Z2 on two points: pi0(inertia) =", len(pi0(inertia(free))))
