"""Validated finite category and functor presentations.

A category is presented fully explicitly: every object, every morphism and
the complete composition table. Validation is an exhaustive scan of the
axioms, so a `FinCat` value is a proof-carrying presentation; everything
downstream may rely on the laws without re-checking them.

Identity morphisms may be omitted from raw input; they are synthesised with
the reserved ids ``id_<object>`` together with the unit-law-forced rows of
the composition table. Any other missing composite is an error, never a
default: the table is data, not something we invent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    AssociativityViolation,
    CompositionNotPreserved,
    DomCodMismatch,
    DomCodNotPreserved,
    DuplicateId,
    IdentityNotPreserved,
    MissingComposite,
    NotMutuallyInverse,
    SourceTargetMismatch,
    UnitLawViolation,
    UnknownMorphism,
    UnknownObject,
    UnmappedMorphism,
    UnmappedObject,
    ValidationError,
)

OP_MARK = "_op"
ID_PREFIX = "id_"

_OP_AT_BOUNDARY = re.compile(r"_op(?=$|[^0-9A-Za-z_])")


def op_name(name: str) -> str:
    """Tag an id with the opposite marker; tagging twice cancels."""
    if name.endswith(OP_MARK):
        return name[: -len(OP_MARK)]
    return name + OP_MARK


def strip_op_marks(name: str) -> str:
    """Erase every boundary-level opposite marker from an id."""
    return _OP_AT_BOUNDARY.sub("", name)


def pair_id(first: str, second: str) -> str:
    return f"({first},{second})"


def identity_id(obj: str) -> str:
    return ID_PREFIX + obj


@dataclass(frozen=True)
class Arrow:
    name: str
    dom: str
    cod: str


@dataclass(frozen=True)
class FinCat:
    """An explicit finite category presentation.

    ``compose`` maps ``(g, f)`` with ``cod f = dom g`` to the name of
    ``g`` after ``f``. Values are immutable after validation; all
    operations in this package are pure functions of their inputs.
    """

    name: str
    objects: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    identity: dict[str, str]
    compose: dict[tuple[str, str], str]

    @cached_property
    def _by_name(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def _identity_names(self) -> frozenset[str]:
        return frozenset(self.identity.values())

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownMorphism(name) from None

    def has_arrow(self, name: str) -> bool:
        return name in self._by_name

    def dom(self, name: str) -> str:
        return self.arrow(name).dom

    def cod(self, name: str) -> str:
        return self.arrow(name).cod

    def is_identity(self, name: str) -> bool:
        return name in self._identity_names

    def non_identity_arrows(self) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if not self.is_identity(a.name))

    def hom(self, x: str, y: str) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows if a.dom == x and a.cod == y)

    def compose2(self, g: str, f: str) -> str:
        return self.compose[(g, f)]

    def arrows_into(self, obj: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.cod == obj)

    def arrows_from(self, obj: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.dom == obj)

    def inverse_of(self, name: str) -> str | None:
        """Two-sided inverse of a morphism, or None."""
        a = self.arrow(name)
        for b in self.arrows:
            if b.dom != a.cod or b.cod != a.dom:
                continue
            if (
                self.compose.get((b.name, name)) == self.identity[a.dom]
                and self.compose.get((name, b.name)) == self.identity[a.cod]
            ):
                return b.name
        return None

    def is_groupoid(self) -> bool:
        return all(self.inverse_of(a.name) is not None for a in self.arrows)


RawArrow = Arrow | tuple[str, str, str]


def _as_arrows(arrows: Iterable[RawArrow]) -> list[Arrow]:
    out = []
    for a in arrows:
        out.append(a if isinstance(a, Arrow) else Arrow(*a))
    return out


def validate_category(
    name: str,
    objects: Sequence[str],
    arrows: Iterable[RawArrow],
    compose: Mapping[tuple[str, str], str] | None = None,
    identity: Mapping[str, str] | None = None,
) -> FinCat:
    """Check a raw presentation against the category laws.

    Raises the first violated law together with the witnessing ids.
    Synthesised identities are placed before the declared morphisms, in
    object order, so that canonical searches meet identities first.
    """
    objects = tuple(objects)
    declared = _as_arrows(arrows)

    seen_obj: set[str] = set()
    for o in objects:
        if o in seen_obj:
            raise DuplicateId(o)
        seen_obj.add(o)

    identity = dict(identity) if identity else {}
    synthesised = []
    for o in objects:
        if o not in identity:
            ident = identity_id(o)
            identity[o] = ident
            if not any(a.name == ident for a in declared):
                synthesised.append(Arrow(ident, o, o))
    all_arrows = tuple(synthesised) + tuple(declared)

    seen_mor: set[str] = set()
    for a in all_arrows:
        if a.name in seen_mor:
            raise DuplicateId(a.name)
        seen_mor.add(a.name)
        if a.dom not in seen_obj:
            raise UnknownObject(a.dom)
        if a.cod not in seen_obj:
            raise UnknownObject(a.cod)

    by_name = {a.name: a for a in all_arrows}
    for o in objects:
        ident = identity.get(o)
        if ident is None or ident not in by_name:
            raise UnknownMorphism(ident or identity_id(o))
        ia = by_name[ident]
        if ia.dom != o or ia.cod != o:
            raise UnitLawViolation(ident)

    table: dict[tuple[str, str], str] = {}
    for (g, f), h in (compose or {}).items():
        for m in (g, f, h):
            if m not in by_name:
                raise UnknownMorphism(m)
        if by_name[f].cod != by_name[g].dom:
            raise DomCodMismatch(g, f, "pair is not composable")
        table[(g, f)] = h

    # Unit-law-forced rows may be omitted from the input table.
    for a in all_arrows:
        forced = [
            ((identity[a.cod], a.name), a.name),
            ((a.name, identity[a.dom]), a.name),
        ]
        for key, val in forced:
            table.setdefault(key, val)

    for g in all_arrows:
        for f in all_arrows:
            if f.cod != g.dom:
                continue
            if (g.name, f.name) not in table:
                raise MissingComposite(g.name, f.name)

    for (g, f), h in table.items():
        if by_name[h].dom != by_name[f].dom or by_name[h].cod != by_name[g].cod:
            raise DomCodMismatch(g, f, f"composite {h!r} has the wrong dom/cod")

    for a in all_arrows:
        if table[(identity[a.cod], a.name)] != a.name:
            raise UnitLawViolation(a.name)
        if table[(a.name, identity[a.dom])] != a.name:
            raise UnitLawViolation(a.name)

    for (g, f), gf in table.items():
        for h in all_arrows:
            if h.dom != by_name[g].cod:
                continue
            if table[(h.name, gf)] != table[(table[(h.name, g)], f)]:
                raise AssociativityViolation(h.name, g, f)

    return FinCat(name, objects, all_arrows, identity, table)


@dataclass(frozen=True)
class FinFunctor:
    name: str
    source: FinCat
    target: FinCat
    obj_map: dict[str, str]
    mor_map: dict[str, str]

    def obj(self, x: str) -> str:
        return self.obj_map[x]

    def mor(self, m: str) -> str:
        return self.mor_map[m]


def validate_functor(
    name: str,
    source: FinCat,
    target: FinCat,
    obj_map: Mapping[str, str],
    mor_map: Mapping[str, str],
) -> FinFunctor:
    """Check the three functor laws exhaustively.

    Images of identity morphisms may be omitted; they are completed from
    the object map.
    """
    obj_map = dict(obj_map)
    mor_map = dict(mor_map)

    for x in source.objects:
        if x not in obj_map:
            raise UnmappedObject(x)
        if obj_map[x] not in target.objects:
            raise UnknownObject(obj_map[x])

    for x in source.objects:
        mor_map.setdefault(source.identity[x], target.identity[obj_map[x]])

    for a in source.arrows:
        if a.name not in mor_map:
            raise UnmappedMorphism(a.name)
        img = mor_map[a.name]
        if not target.has_arrow(img):
            raise UnknownMorphism(img)
        ia = target.arrow(img)
        if ia.dom != obj_map[a.dom] or ia.cod != obj_map[a.cod]:
            raise DomCodNotPreserved(a.name)

    for x in source.objects:
        if mor_map[source.identity[x]] != target.identity[obj_map[x]]:
            raise IdentityNotPreserved(x)

    for (g, f), h in source.compose.items():
        if target.compose[(mor_map[g], mor_map[f])] != mor_map[h]:
            raise CompositionNotPreserved(g, f)

    return FinFunctor(name, source, target, obj_map, mor_map)


def identity_functor(cat: FinCat) -> FinFunctor:
    return FinFunctor(
        f"id_{cat.name}",
        cat,
        cat,
        {o: o for o in cat.objects},
        {a.name: a.name for a in cat.arrows},
    )


def compose_functors(g: FinFunctor, f: FinFunctor) -> FinFunctor:
    """Pointwise composite ``g`` after ``f``."""
    if f.target != g.source:
        raise SourceTargetMismatch(f"{f.name} lands in {f.target.name}, {g.name} starts at {g.source.name}")
    return validate_functor(
        f"{g.name}*{f.name}",
        f.source,
        g.target,
        {x: g.obj(f.obj(x)) for x in f.source.objects},
        {a.name: g.mor(f.mor(a.name)) for a in f.source.arrows},
    )


@dataclass(frozen=True)
class IsoWitness:
    forward: FinFunctor
    backward: FinFunctor


def validate_witness(forward: FinFunctor, backward: FinFunctor) -> IsoWitness:
    """Check that two functors are mutually inverse on the nose."""
    if forward.source != backward.target or forward.target != backward.source:
        raise SourceTargetMismatch("witness functors do not point between the same two categories")
    for x in forward.source.objects:
        if backward.obj(forward.obj(x)) != x:
            raise NotMutuallyInverse(f"object {x!r} does not round-trip")
    for a in forward.source.arrows:
        if backward.mor(forward.mor(a.name)) != a.name:
            raise NotMutuallyInverse(f"morphism {a.name!r} does not round-trip")
    for y in backward.source.objects:
        if forward.obj(backward.obj(y)) != y:
            raise NotMutuallyInverse(f"object {y!r} does not round-trip")
    for b in backward.source.arrows:
        if forward.mor(backward.mor(b.name)) != b.name:
            raise NotMutuallyInverse(f"morphism {b.name!r} does not round-trip")
    return IsoWitness(forward, backward)


def opposite(cat: FinCat) -> FinCat:
    """Reverse every morphism; non-identities are tagged with the op marker.

    Tagging twice cancels, so the operation is involutive on the nose.
    """
    names = {
        a.name: (a.name if cat.is_identity(a.name) else op_name(a.name))
        for a in cat.arrows
    }
    arrows = [Arrow(names[a.name], a.cod, a.dom) for a in cat.arrows]
    identity = {o: names[m] for o, m in cat.identity.items()}
    table = {
        (names[f], names[g]): names[h] for (g, f), h in cat.compose.items()
    }
    return validate_category(op_name(cat.name), cat.objects, arrows, table, identity)


def op_functor(fun: FinFunctor) -> FinFunctor:
    """The same maps, read between the opposite categories."""
    src = opposite(fun.source)
    tgt = opposite(fun.target)
    mor_map = {}
    for a in fun.source.arrows:
        key = a.name if fun.source.is_identity(a.name) else op_name(a.name)
        img = fun.mor(a.name)
        mor_map[key] = img if fun.target.is_identity(img) else op_name(img)
    return validate_functor(op_name(fun.name), src, tgt, dict(fun.obj_map), mor_map)


def product_category(c: FinCat, d: FinCat) -> tuple[FinCat, FinFunctor, FinFunctor]:
    """Componentwise product with its two projections."""
    objects = [pair_id(x, y) for x in c.objects for y in d.objects]
    obj_of = {(x, y): pair_id(x, y) for x in c.objects for y in d.objects}

    def mname(f: Arrow, g: Arrow) -> str:
        if c.is_identity(f.name) and d.is_identity(g.name):
            return identity_id(obj_of[(f.dom, g.dom)])
        return pair_id(f.name, g.name)

    arrows = []
    identity = {}
    names: dict[tuple[str, str], str] = {}
    for f in c.arrows:
        for g in d.arrows:
            nm = mname(f, g)
            names[(f.name, g.name)] = nm
            arrows.append(Arrow(nm, obj_of[(f.dom, g.dom)], obj_of[(f.cod, g.cod)]))
            if c.is_identity(f.name) and d.is_identity(g.name):
                identity[obj_of[(f.dom, g.dom)]] = nm
    table = {}
    for (g1, f1), h1 in c.compose.items():
        for (g2, f2), h2 in d.compose.items():
            table[(names[(g1, g2)], names[(f1, f2)])] = names[(h1, h2)]
    prod = validate_category(pair_id(c.name, d.name), objects, arrows, table, identity)
    p1 = validate_functor(
        "p1",
        prod,
        c,
        {obj_of[(x, y)]: x for x in c.objects for y in d.objects},
        {names[(f.name, g.name)]: f.name for f in c.arrows for g in d.arrows},
    )
    p2 = validate_functor(
        "p2",
        prod,
        d,
        {obj_of[(x, y)]: y for x in c.objects for y in d.objects},
        {names[(f.name, g.name)]: g.name for f in c.arrows for g in d.arrows},
    )
    return prod, p1, p2


def coproduct_categories(cats: Sequence[FinCat]) -> tuple[FinCat, list[FinFunctor]]:
    """Disjoint union; ids are relabelled with their summand index."""
    objects = []
    arrows = []
    identity = {}
    table = {}
    tag_obj: list[dict[str, str]] = []
    tag_mor: list[dict[str, str]] = []
    for i, cat in enumerate(cats):
        objs = {o: pair_id(str(i), o) for o in cat.objects}
        mors = {}
        for a in cat.arrows:
            if cat.is_identity(a.name):
                mors[a.name] = identity_id(objs[a.dom])
            else:
                mors[a.name] = pair_id(str(i), a.name)
        objects.extend(objs[o] for o in cat.objects)
        arrows.extend(Arrow(mors[a.name], objs[a.dom], objs[a.cod]) for a in cat.arrows)
        identity.update({objs[o]: mors[m] for o, m in cat.identity.items()})
        table.update({(mors[g], mors[f]): mors[h] for (g, f), h in cat.compose.items()})
        tag_obj.append(objs)
        tag_mor.append(mors)
    name = "(" + "+".join(cat.name for cat in cats) + ")"
    total = validate_category(name, objects, arrows, table, identity)
    injections = [
        validate_functor(f"inj{i}", cat, total, tag_obj[i], tag_mor[i])
        for i, cat in enumerate(cats)
    ]
    return total, injections


def normalize(cat: FinCat, name: str | None = None) -> FinCat:
    """Canonical presentation: op markers erased, everything sorted by id.

    Two constructions agree "on the nose" exactly when their normalized
    presentations print identically.
    """
    obj_names = {o: strip_op_marks(o) for o in cat.objects}
    mor_names = {a.name: strip_op_marks(a.name) for a in cat.arrows}
    if len(set(obj_names.values())) != len(obj_names):
        raise DuplicateId("object ids collide after erasing op markers")
    if len(set(mor_names.values())) != len(mor_names):
        raise DuplicateId("morphism ids collide after erasing op markers")
    objects = sorted(obj_names[o] for o in cat.objects)
    arrows = sorted(
        (Arrow(mor_names[a.name], obj_names[a.dom], obj_names[a.cod]) for a in cat.arrows),
        key=lambda a: a.name,
    )
    identity = {obj_names[o]: mor_names[m] for o, m in cat.identity.items()}
    table = {
        (mor_names[g], mor_names[f]): mor_names[h] for (g, f), h in cat.compose.items()
    }
    return validate_category(name if name is not None else cat.name, objects, arrows, table, identity)


def same_presentation(a: FinCat, b: FinCat) -> bool:
    """Equality of normalized presentations, ignoring the category name."""
    na = normalize(a, name="_")
    nb = normalize(b, name="_")
    return (
        na.objects == nb.objects
        and na.arrows == nb.arrows
        and na.identity == nb.identity
        and na.compose == nb.compose
    )
