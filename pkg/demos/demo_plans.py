"""Torus-surgery plans: factoring a gluing matrix into standard blocks.

Run:  python3 demos/demo_plans.py
"""

from trisect import (
    log_transform_plan,
    luttinger_plan,
    parse_plan,
    serialize_plan,
    surgery_plan_general,
)

# A Luttinger twist with multiplicities (m, n) has a nine-block plan whose
# composite is the standard shear matrix [[1,0,m],[0,1,n],[0,0,1]].
plan = luttinger_plan(3, -2)
print("luttinger(3,-2) blocks:")
for blk in plan.blocks:
    print("  ", blk)
print("composite:", plan.composite)

# Integer log transforms take the SL2 gluing matrix of the torus direction;
# the composite embeds it in the lower-right block.
lp = log_transform_plan([[5, -1], [1, 0]])
print("\nlog transform uses %d blocks" % len(lp.blocks))
print("composite:", lp.composite)

# Any matrix in SL3(Z) gets a plan by factoring into elementary moves.
m = ((2, 1, 0), (1, 1, 0), (0, 0, 1))
gp = surgery_plan_general(m)
print("\ngeneral plan for", m, "->", len(gp.blocks), "blocks")
assert gp.composite == [list(row) for row in m]

# Plans serialize to a strict line format and parse back identically.
text = serialize_plan(plan)
print("\nserialized luttinger plan:")
print(text, end="")
assert serialize_plan(parse_plan(text)) == text
print("round-trip ok")
