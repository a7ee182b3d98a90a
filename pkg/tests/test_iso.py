"""Isomorphism search: soundness, completeness at desk scale, budgets."""

from __future__ import annotations

import basecat as bc
from basecat.corpus import group_category
from basecat.iso import BudgetExhausted, NotIsomorphic


def relabel(cat: bc.FinCat, suffix: str) -> bc.FinCat:
    ren_obj = {o: o + suffix for o in cat.objects}
    ren_mor = {a.name: a.name + suffix for a in cat.arrows}
    return bc.validate_category(
        cat.name + suffix,
        [ren_obj[o] for o in cat.objects],
        [(ren_mor[a.name], ren_obj[a.dom], ren_obj[a.cod]) for a in cat.arrows],
        {(ren_mor[g], ren_mor[f]): ren_mor[h] for (g, f), h in cat.compose.items()},
        {ren_obj[o]: ren_mor[m] for o, m in cat.identity.items()},
    )


def test_identity_witness(two):
    w = bc.find_isomorphism(two, two)
    assert isinstance(w, bc.IsoWitness)
    assert w.forward.obj_map == {"X": "X", "Y": "Y"}


def test_walking_arrow_vs_its_opposite(two):
    w = bc.find_isomorphism(two, bc.opposite(two))
    assert isinstance(w, bc.IsoWitness)
    assert w.forward.obj_map == {"X": "Y", "Y": "X"}


def test_cardinality_mismatch(two, one):
    pair, _ = bc.coproduct_categories([one, one])
    result = bc.find_isomorphism(two, pair)
    assert isinstance(result, NotIsomorphic)


def test_witnesses_revalidate(corpus):
    for cat in list(corpus.env.categories.values())[:8]:
        w = bc.find_isomorphism(cat, relabel(cat, "x"))
        assert isinstance(w, bc.IsoWitness)
        # soundness: the witness passes full functor + inverse validation
        bc.validate_witness(w.forward, w.backward)


def test_never_misclassifies_known_corpus(corpus):
    cats = list(corpus.env.categories.values())
    for cat in cats:
        assert isinstance(bc.find_isomorphism(cat, relabel(cat, "y")), bc.IsoWitness)
    for i, c in enumerate(cats):
        for d in cats[i + 1 :]:
            if len(c.objects) != len(d.objects) or len(c.arrows) != len(d.arrows):
                assert isinstance(bc.find_isomorphism(c, d), NotIsomorphic)


def test_z3_not_isomorphic_to_the_three_chain():
    z3 = group_category("Z3")
    chain = bc.validate_category(
        "C3",
        ["A"],
        [("m", "A", "A"), ("n", "A", "A")],
        {
            ("m", "m"): "n",
            ("m", "n"): "n",
            ("n", "m"): "n",
            ("n", "n"): "n",
        },
    )
    assert isinstance(bc.find_isomorphism(z3, chain), NotIsomorphic)


def test_budget_exhaustion():
    k4 = group_category("K4")
    z4 = group_category("Z4")
    result = bc.find_isomorphism(k4, relabel(k4, "z"), budget=2)
    assert isinstance(result, BudgetExhausted)
    # and the groups of order four are genuinely distinct
    assert isinstance(bc.find_isomorphism(k4, z4), NotIsomorphic)


def test_self_dual_groups(z2, z3):
    for grp in (z2, z3, group_category("K4"), group_category("Z4")):
        assert isinstance(bc.find_isomorphism(grp, bc.opposite(grp)), bc.IsoWitness)
