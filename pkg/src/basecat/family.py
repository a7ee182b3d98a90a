"""Strict indexed families: a category for every base object, a functor
for every base morphism, contravariantly and on the nose."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import FinCat, FinFunctor, compose_functors, identity_functor
from .errors import NotStrict, UnknownMorphism, UnknownObject


@dataclass(frozen=True)
class IndexedFamily:
    """Assignment ``fibre`` on objects and ``pull`` on morphisms of ``base``.

    For u: I -> J the functor ``pull[u]`` runs fibre(J) -> fibre(I);
    strictness means identities and composites are preserved exactly,
    with composition reversed.
    """

    base: FinCat
    fibre: dict[str, FinCat]
    pull: dict[str, FinFunctor]


def validate_family(
    base: FinCat,
    fibre: Mapping[str, FinCat],
    pull: Mapping[str, FinFunctor],
) -> IndexedFamily:
    """Check totality, direction and strictness of a raw family."""
    fibre = dict(fibre)
    pull = dict(pull)
    for o in base.objects:
        if o not in fibre:
            raise UnknownObject(o)
    for o in base.objects:
        pull.setdefault(base.identity[o], identity_functor(fibre[o]))
    for a in base.arrows:
        if a.name not in pull:
            raise UnknownMorphism(a.name)
        fn = pull[a.name]
        if fn.source != fibre[a.cod] or fn.target != fibre[a.dom]:
            raise NotStrict(a.name, a.name)

    for o in base.objects:
        fn = pull[base.identity[o]]
        ident = identity_functor(fibre[o])
        if fn.obj_map != ident.obj_map or fn.mor_map != ident.mor_map:
            raise NotStrict(base.identity[o], base.identity[o])

    for (v, u), w in base.compose.items():
        expected = compose_functors(pull[u], pull[v])
        got = pull[w]
        if got.obj_map != expected.obj_map or got.mor_map != expected.mor_map:
            raise NotStrict(v, u)

    return IndexedFamily(base, fibre, pull)
