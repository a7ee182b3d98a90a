"""Brute-force verification of cartesian structure for a functor.

Every quantifier in the definitions is a finite scan here: a morphism is
cartesian when each qualifying (g, w) factorization admits exactly one
mediating morphism, and a functor is a fibration when a cartesian lift
exists for every (base morphism, object above its codomain) pair. When a
base factorization u∘w = P(g) holds for several w, each w is checked
independently.

"Vertical" means the projection sends the morphism to an identity, so
fibres are computable sub-presentations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FinCat, FinFunctor, validate_category, validate_functor
from .errors import NoLiftInCleavage, NotSplit
from .family import IndexedFamily, validate_family


@dataclass(frozen=True)
class FunctorOver:
    """A functor regarded as a projection from a total to a base category."""

    proj: FinFunctor

    @property
    def total(self) -> FinCat:
        return self.proj.source

    @property
    def base(self) -> FinCat:
        return self.proj.target

    def over(self, morphism: str) -> str:
        return self.proj.mor(morphism)

    def obj_over(self, obj: str) -> str:
        return self.proj.obj(obj)

    def is_vertical(self, morphism: str) -> bool:
        return self.base.is_identity(self.over(morphism))


@dataclass(frozen=True)
class Cleavage:
    """Chosen cartesian lift for every (base morphism, object above cod)."""

    lift: dict[tuple[str, str], str]


@dataclass(frozen=True)
class OpCleavage:
    """Chosen opcartesian lift for every (base morphism, object above dom)."""

    lift: dict[tuple[str, str], str]


@dataclass(frozen=True)
class CounterexampleCartesian:
    f: str
    g: str
    w: str
    mediating_count: int

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class CounterexampleOpCartesian:
    f: str
    g: str
    w: str
    mediating_count: int

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class MissingLift:
    u: str
    obj: str

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class MissingOpLift:
    u: str
    obj: str

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class SplitViolation:
    detail: str

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class Counterexample:
    detail: str

    def __bool__(self) -> bool:
        return False


def is_cartesian(p: FunctorOver, f: str) -> bool | CounterexampleCartesian:
    """Scan every (g, w) factorization through the codomain of ``f``."""
    total, base = p.total, p.base
    fa = total.arrow(f)  # raises UnknownMorphism
    u = p.over(f)
    i = base.dom(u)
    for g in total.arrows_into(fa.cod):
        pg = p.over(g.name)
        pz = p.obj_over(g.dom)
        for w in base.arrows:
            if w.dom != pz or w.cod != i:
                continue
            if base.compose[(u, w.name)] != pg:
                continue
            mediating = [
                h.name
                for h in total.arrows
                if h.dom == g.dom
                and h.cod == fa.dom
                and p.over(h.name) == w.name
                and total.compose[(f, h.name)] == g.name
            ]
            if len(mediating) != 1:
                return CounterexampleCartesian(f, g.name, w.name, len(mediating))
    return True


def is_opcartesian(p: FunctorOver, f: str) -> bool | CounterexampleOpCartesian:
    """Exact dual: factorizations h∘f = g over w with w∘u = P(g)."""
    total, base = p.total, p.base
    fa = total.arrow(f)
    u = p.over(f)
    j = base.cod(u)
    for g in total.arrows_from(fa.dom):
        pg = p.over(g.name)
        pz = p.obj_over(g.cod)
        for w in base.arrows:
            if w.dom != j or w.cod != pz:
                continue
            if base.compose[(w.name, u)] != pg:
                continue
            mediating = [
                h.name
                for h in total.arrows
                if h.dom == fa.cod
                and h.cod == g.cod
                and p.over(h.name) == w.name
                and total.compose[(h.name, f)] == g.name
            ]
            if len(mediating) != 1:
                return CounterexampleOpCartesian(f, g.name, w.name, len(mediating))
    return True


def check_fibration(p: FunctorOver) -> Cleavage | MissingLift:
    """Find a cartesian lift for every base morphism at every object above
    its codomain; the first lift in presentation order wins."""
    lifts: dict[tuple[str, str], str] = {}
    for y in p.total.objects:
        target = p.obj_over(y)
        for u in p.base.arrows:
            if u.cod != target:
                continue
            found = None
            for cand in p.total.arrows_into(y):
                if p.over(cand.name) != u.name:
                    continue
                if is_cartesian(p, cand.name) is True:
                    found = cand.name
                    break
            if found is None:
                return MissingLift(u.name, y)
            lifts[(u.name, y)] = found
    return Cleavage(lifts)


def check_opfibration(p: FunctorOver) -> OpCleavage | MissingOpLift:
    lifts: dict[tuple[str, str], str] = {}
    for x in p.total.objects:
        source = p.obj_over(x)
        for u in p.base.arrows:
            if u.dom != source:
                continue
            found = None
            for cand in p.total.arrows_from(x):
                if p.over(cand.name) != u.name:
                    continue
                if is_opcartesian(p, cand.name) is True:
                    found = cand.name
                    break
            if found is None:
                return MissingOpLift(u.name, x)
            lifts[(u.name, x)] = found
    return OpCleavage(lifts)


def check_split(p: FunctorOver, c: Cleavage) -> bool | SplitViolation:
    """Identity and composition conditions for a cleavage, on the nose."""
    total, base = p.total, p.base
    for y in total.objects:
        key = (base.identity[p.obj_over(y)], y)
        if key not in c.lift:
            return SplitViolation(f"no lift of the identity at {y!r}")
        if c.lift[key] != total.identity[y]:
            return SplitViolation(f"lift of the identity at {y!r} is {c.lift[key]!r}")
    for (g, f), gf in base.compose.items():
        if base.is_identity(g) or base.is_identity(f):
            continue
        for z in total.objects:
            if p.obj_over(z) != base.cod(g):
                continue
            top = c.lift.get((g, z))
            if top is None:
                return SplitViolation(f"no lift of {g!r} at {z!r}")
            mid = total.dom(top)
            lower = c.lift.get((f, mid))
            if lower is None:
                return SplitViolation(f"no lift of {f!r} at {mid!r}")
            direct = c.lift.get((gf, z))
            if direct is None:
                return SplitViolation(f"no lift of {gf!r} at {z!r}")
            if total.compose[(top, lower)] != direct:
                return SplitViolation(
                    f"lifts of ({g!r}, {f!r}) at {z!r} do not compose to the lift of {gf!r}"
                )
    return True


def check_split_op(p: FunctorOver, k: OpCleavage) -> bool | SplitViolation:
    total, base = p.total, p.base
    for x in total.objects:
        key = (base.identity[p.obj_over(x)], x)
        if key not in k.lift:
            return SplitViolation(f"no op-lift of the identity at {x!r}")
        if k.lift[key] != total.identity[x]:
            return SplitViolation(f"op-lift of the identity at {x!r} is {k.lift[key]!r}")
    for (g, f), gf in base.compose.items():
        if base.is_identity(g) or base.is_identity(f):
            continue
        for x in total.objects:
            if p.obj_over(x) != base.dom(f):
                continue
            lower = k.lift.get((f, x))
            if lower is None:
                return SplitViolation(f"no op-lift of {f!r} at {x!r}")
            mid = total.cod(lower)
            top = k.lift.get((g, mid))
            if top is None:
                return SplitViolation(f"no op-lift of {g!r} at {mid!r}")
            direct = k.lift.get((gf, x))
            if direct is None:
                return SplitViolation(f"no op-lift of {gf!r} at {x!r}")
            if total.compose[(top, lower)] != direct:
                return SplitViolation(
                    f"op-lifts of ({g!r}, {f!r}) at {x!r} do not compose to the op-lift of {gf!r}"
                )
    return True


def factor_vertical_cartesian(
    p: FunctorOver, c: Cleavage, g: str
) -> tuple[str, str]:
    """Split a total morphism as (vertical h, cartesian f) with f∘h = g."""
    total = p.total
    ga = total.arrow(g)
    u = p.over(g)
    key = (u, ga.cod)
    if key not in c.lift:
        raise NoLiftInCleavage(u, ga.cod)
    f = c.lift[key]
    fa = total.arrow(f)
    candidates = [
        h.name
        for h in total.arrows
        if h.dom == ga.dom
        and h.cod == fa.dom
        and p.is_vertical(h.name)
        and total.compose[(f, h.name)] == g
    ]
    if len(candidates) != 1:
        raise NotSplit(
            f"{len(candidates)} vertical factorizations of {g!r} through {f!r}"
        )
    return candidates[0], f


def property_cartesian_compose(p: FunctorOver) -> bool | Counterexample:
    """Composites of cartesian morphisms must be cartesian; full scan."""
    cartesian = {
        a.name: is_cartesian(p, a.name) is True for a in p.total.arrows
    }
    for (g, f), gf in p.total.compose.items():
        if cartesian[g] and cartesian[f] and not cartesian[gf]:
            return Counterexample(
                f"composite {gf!r} of cartesian pair ({g!r}, {f!r}) is not cartesian"
            )
    return True


def property_cartesian_over_iso(p: FunctorOver) -> bool | Counterexample:
    """Cartesian morphisms above invertible base morphisms must be invertible."""
    for a in p.total.arrows:
        if is_cartesian(p, a.name) is not True:
            continue
        if p.base.inverse_of(p.over(a.name)) is None:
            continue
        if p.total.inverse_of(a.name) is None:
            return Counterexample(
                f"{a.name!r} lies above an isomorphism but has no inverse"
            )
    return True


def recover_indexed(
    p: FunctorOver,
    c: Cleavage,
    object_labels: dict[str, tuple[str, ...]] | None = None,
    arrow_labels: dict[str, tuple[str, ...]] | None = None,
) -> IndexedFamily:
    """Read a strict indexed family back off a split cleavage.

    Fibres are the sub-presentations above each base identity; the pull
    functor of a base morphism sends an object to the domain of its chosen
    lift and a vertical morphism to the unique vertical factorization
    through that lift. When pair labels are supplied (constructed
    categories carry them), fibre ids are relabelled to their second
    component so that rebuilding the total category reproduces the
    original ids.
    """
    verdict = check_split(p, c)
    if verdict is not True:
        raise NotSplit(verdict.detail)

    total, base = p.total, p.base

    def rl_obj(o: str) -> str:
        if object_labels and o in object_labels:
            return object_labels[o][-1]
        return o

    def rl_mor(m: str) -> str:
        if arrow_labels and m in arrow_labels:
            return arrow_labels[m][-1]
        return m

    fibre: dict[str, FinCat] = {}
    for i in base.objects:
        objs = [y for y in total.objects if p.obj_over(y) == i]
        verticals = [
            a for a in total.arrows
            if p.over(a.name) == base.identity[i] and a.dom in objs
        ]
        names = {a.name for a in verticals}
        arrows = [(rl_mor(a.name), rl_obj(a.dom), rl_obj(a.cod)) for a in verticals]
        identity = {rl_obj(y): rl_mor(total.identity[y]) for y in objs}
        table = {
            (rl_mor(g), rl_mor(f)): rl_mor(h)
            for (g, f), h in total.compose.items()
            if g in names and f in names
        }
        fibre[i] = validate_category(
            f"{total.name}|{i}", [rl_obj(y) for y in objs], arrows, table, identity
        )

    pull: dict[str, FinFunctor] = {}
    for u in base.arrows:
        if base.is_identity(u.name):
            continue
        src = fibre[u.cod]
        tgt = fibre[u.dom]
        obj_map = {}
        dom_of_lift = {}
        for y in total.objects:
            if p.obj_over(y) != u.cod:
                continue
            lift = c.lift[(u.name, y)]
            dom_of_lift[y] = total.dom(lift)
            obj_map[rl_obj(y)] = rl_obj(dom_of_lift[y])
        mor_map = {}
        for a in total.arrows:
            if p.over(a.name) != base.identity[u.cod]:
                continue
            top = c.lift[(u.name, a.cod)]
            bottom = c.lift[(u.name, a.dom)]
            outer = total.compose[(a.name, bottom)]
            carried = [
                h.name
                for h in total.arrows
                if h.dom == dom_of_lift[a.dom]
                and h.cod == dom_of_lift[a.cod]
                and p.is_vertical(h.name)
                and total.compose[(top, h.name)] == outer
            ]
            if len(carried) != 1:
                raise NotSplit(
                    f"vertical transport of {a.name!r} along {u.name!r} is not unique"
                )
            mor_map[rl_mor(a.name)] = rl_mor(carried[0])
        pull[u.name] = validate_functor(f"pull_{u.name}", src, tgt, obj_map, mor_map)

    return validate_family(base, fibre, pull)
