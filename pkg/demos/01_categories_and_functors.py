"""Presentations, validation, opposites, products and isomorphism search.

Run with:  python demos/01_categories_and_functors.py
"""

import basecat as bc

# A category is a fully explicit presentation: objects, morphisms and the
# whole composition table. Identities are synthesised as id_<object>.
walking = bc.validate_category("Two", ["X", "Y"], [("f", "X", "Y")])
print("walking arrow:", walking.objects, [a.name for a in walking.arrows])

# The cyclic group of order two, as a one-object category.
z2 = bc.validate_category("Z2", ["*"], [("s", "*", "*")], {("s", "s"): "id_*"})
print("Z2 is a groupoid:", z2.is_groupoid())

# Validation is exhaustive: a table that fails to associate is rejected
# with the witnessing triple.
try:
    bc.validate_category(
        "Broken",
        ["*"],
        [("a", "*", "*"), ("b", "*", "*")],
        {("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "id_*", ("b", "b"): "b"},
    )
except bc.errors.AssociativityViolation as exc:
    print("rejected:", exc)

# Opposites tag morphisms with an op marker and are involutive on the nose.
op = bc.opposite(walking)
print("opposite arrow:", [(a.name, a.dom, a.cod) for a in op.non_identity_arrows()])
print("double opposite is literally the original:", bc.opposite(op) == walking)

# Products and coproducts come with their projections and injections.
prod, p1, p2 = bc.product_category(walking, walking)
print("product size:", len(prod.objects), "objects,", len(prod.arrows), "morphisms")

total, injections = bc.coproduct_categories([walking, z2])
print("coproduct size:", len(total.objects), "objects,", len(total.arrows), "morphisms")

# Isomorphism search is a pruned backtracking over presentations; the
# witness it returns has been re-validated as a pair of inverse functors.
witness = bc.find_isomorphism(walking, op)
print("walking arrow vs its opposite:", witness.forward.obj_map)

klein, _, _ = bc.product_category(z2, z2)
z4 = bc.validate_category(
    "Z4",
    ["*"],
    [("q1", "*", "*"), ("q2", "*", "*"), ("q3", "*", "*")],
    {
        ("q1", "q1"): "q2", ("q1", "q2"): "q3", ("q1", "q3"): "id_*",
        ("q2", "q1"): "q3", ("q2", "q2"): "id_*", ("q2", "q3"): "q1",
        ("q3", "q1"): "id_*", ("q3", "q2"): "q1", ("q3", "q3"): "q2",
    },
)
print("Z2 x Z2 vs Z4:", bc.find_isomorphism(klein, z4))
