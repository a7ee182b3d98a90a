"""Category actions on elements and the transformation groupoid.

A group acting on a finite set gives a groupoid whose objects are the
elements; the same data, read through the category of elements over the
self-dual group, gives an isomorphic presentation. The witness is built
explicitly and re-validated, never assumed.

Run with:  python demos/03_actions_and_groupoids.py
"""

import basecat as bc
from basecat.sets import FinFn, FinSetObj

z3 = bc.validate_category(
    "Z3",
    ["*"],
    [("r1", "*", "*"), ("r2", "*", "*")],
    {("r1", "r1"): "r2", ("r1", "r2"): "id_*", ("r2", "r1"): "id_*", ("r2", "r2"): "r1"},
)
elems = FinSetObj("carrier", ("g0", "g1", "g2"))
rot1 = FinFn(elems, elems, {"g0": "g1", "g1": "g2", "g2": "g0"})
rot2 = FinFn(elems, elems, {"g0": "g2", "g1": "g0", "g2": "g1"})
action = bc.validate_group_action(z3, elems, {"r1": rot1, "r2": rot2})

groupoid = bc.transformation_groupoid(action)
print("objects:", groupoid.cat.objects)
print("morphism count:", len(groupoid.cat.arrows), "=",
      len(z3.arrows), "x", len(elems.elements))
print("hom(g0, g1):", groupoid.cat.hom("g0", "g1"))

witness = bc.verify_prop4(action)
print("witness object map:", witness.forward.obj_map)

# The same machinery runs on elements acted on along any functor, not just
# group actions: the walking arrow with a two-point fibre over its source.
two = bc.validate_category("Two", ["X", "Y"], [("f", "X", "Y")])
cx = FinSetObj("cx", ("x1", "x2"))
cy = FinSetObj("cy", ("y1",))
structure = bc.validate_concrete(
    two, {"X": cx, "Y": cy}, {"f": FinFn(cx, cy, {"x1": "y1", "x2": "y1"})}
)
left = bc.concrete_left_action(bc.identity_functor(two), structure)
right = bc.concrete_right_action(bc.identity_functor(two), structure)
print("left action morphisms:", [a.name for a in left.cat.arrows])
print("right action morphisms:", [a.name for a in right.cat.arrows])
print("opposite of right equals left:",
      bc.same_presentation(bc.opposite(right.cat), left.cat))

report = bc.verify_main_prop(
    bc.identity_functor(z3),
    concrete=bc.validate_concrete(z3, {"*": elems}, {"r1": rot1, "r2": rot2}),
    self_dual=bc.inverse_witness(z3),
)
print(report.render("human"))
