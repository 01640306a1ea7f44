"""Walk through the crossed-module / 2-group dictionary on small examples.

A crossed module packages two finite groups G, H with a homomorphism
t: H -> G and an action of G on H; its 2-group has objects G and morphisms
H x| G.  This script builds the running example (Z2 -> Z4), moves back and
forth across the dictionary, and exercises both compositions.
"""

from cech2.crossed_modules import (
    crossed_module_from_two_group,
    discrete_two_group,
    horizontal_compose,
    interchange_holds,
    shift_two_group,
    two_group_from_crossed_module,
    vertical_compose,
)
from cech2.fixtures import z2z4_crossed_module
from cech2.groups import cyclic_group, symmetric_group

print("== the running example: Z2 included in Z4 as {0, 2} ==")
xm = z2z4_crossed_module()
print(f"crossed module {xm.name}: |G| = {xm.G.order}, |H| = {xm.H.order}, t = {xm.t.map.tolist()}")

tg = two_group_from_crossed_module(xm)
print(f"2-group: {tg.ob.order} objects, {tg.mor.order} morphisms")
print("a morphism (h, g) points from g to t(h) g; units are (1, g)")

# morphism indices encode (h, g) as h * |G| + g
m1 = 1 * 4 + 0   # (1, 0): 0 -> 2
m2 = 1 * 4 + 2   # (1, 2): 2 -> 0
print(f"src/tgt of (1,0): {tg.src(m1)} -> {tg.tgt(m1)}")
print(f"src/tgt of (1,2): {tg.src(m2)} -> {tg.tgt(m2)}")
v = vertical_compose(tg, m1, m2)
print(f"vertical composite (1,2) o (1,0) = (h={v // 4}, g={v % 4})")
h = horizontal_compose(tg, m1, m2)
print(f"horizontal composite (1,0) * (1,2) = (h={h // 4}, g={h % 4})")
print(f"interchange law holds on all composable quadruples: {interchange_holds(tg)}")

print()
print("== round trip through the dictionary ==")
back = crossed_module_from_two_group(tg)
print(f"recovered t = {back.t.map.tolist()}, same tables: "
      f"{back.G.same_table(xm.G) and back.H.same_table(xm.H)}")

print()
print("== the two degenerate families ==")
s3 = symmetric_group(3)
disc = discrete_two_group(s3)
print(f"discrete 2-group of S3: {disc.name}, morphisms are all identities")

shift = shift_two_group(cyclic_group(3))
print(f"one-object 2-group of Z3: {shift.name} (needs an abelian group)")
try:
    shift_two_group(s3)
except Exception as e:
    print(f"shift of S3 rejected: {type(e).__name__}: {e}")
