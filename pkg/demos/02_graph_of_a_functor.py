"""The graph of a functor and its projection as a split (op)fibration.

Pairing every object and morphism with its image yields a category whose
projection back onto the source has a cartesian lift for every base
morphism; all the checks below are exhaustive scans.

Run with:  python demos/02_graph_of_a_functor.py
"""

import basecat as bc

two = bc.validate_category("Two", ["X", "Y"], [("f", "X", "Y")])
one = bc.validate_category("One", ["*"], [])
collapse = bc.validate_functor("collapse", two, one, {"X": "*", "Y": "*"}, {"f": "id_*"})

built = bc.graph_category(collapse)
print("objects:", built.cat.objects)
print("morphisms:", [a.name for a in built.cat.arrows])

p = built.over()
for a in built.cat.arrows:
    print(f"  {a.name}: cartesian={bc.is_cartesian(p, a.name) is True}",
          f"opcartesian={bc.is_opcartesian(p, a.name) is True}")

cleavage = bc.check_fibration(p)
print("cleavage:", cleavage.lift)
print("split:", bc.check_split(p, built.cleavage))
print("split opcleavage:", bc.check_split_op(p, built.opcleavage))

# A projection with nothing above the domain of a base morphism is not a
# fibration; the failure names the offending pair.
point_over_y = bc.validate_functor("pt", one, two, {"*": "Y"}, {})
print("missing lift:", bc.check_fibration(bc.FunctorOver(point_over_y)))

# Every morphism factors as a vertical followed by a cartesian one.
h, f = bc.factor_vertical_cartesian(p, built.cleavage, "(f,id_*)")
print("factorization of (f,id_*):", (h, f))
