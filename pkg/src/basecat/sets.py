"""Finite sets, functions, faithful structures over a category, pullbacks.

The pullback apex is enumerated in lexicographic pair order and then
checked against its universal property by brute force over all cones from
probe sets of bounded size, so correctness never rests on the enumeration
alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping

from .core import FinCat, pair_id
from .errors import (
    CodomainMismatch,
    NotFaithful,
    NotFunctorial,
    PartialFunction,
    UnknownObject,
    ValidationError,
)


@dataclass(frozen=True)
class FinSetObj:
    name: str
    elements: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValidationError(f"duplicate elements in set {self.name!r}")

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class FinFn:
    dom: FinSetObj
    cod: FinSetObj
    mapping: dict[str, str]

    def __call__(self, x: str) -> str:
        return self.mapping[x]


def check_total(fn: FinFn, label: str) -> None:
    for x in fn.dom.elements:
        if x not in fn.mapping:
            raise PartialFunction(label, x)
    for x, y in fn.mapping.items():
        if x not in fn.dom.elements:
            raise PartialFunction(label, x)
        if y not in fn.cod.elements:
            raise ValidationError(f"function {label!r} sends {x!r} outside its codomain")


def identity_fn(s: FinSetObj) -> FinFn:
    return FinFn(s, s, {x: x for x in s.elements})


def compose_fn(g: FinFn, f: FinFn) -> FinFn:
    if f.cod != g.dom:
        raise CodomainMismatch(f"cannot compose through {f.cod.name!r} vs {g.dom.name!r}")
    return FinFn(f.dom, g.cod, {x: g.mapping[f.mapping[x]] for x in f.dom.elements})


@dataclass(frozen=True)
class ConcreteStructure:
    """Sets and functions assigned to a category, the underlying functor.

    Faithfulness is the default contract; `warnings` carries the colliding
    pairs when validation ran with `allow_unfaithful`.
    """

    over: FinCat
    carrier: dict[str, FinSetObj]
    action: dict[str, FinFn]
    warnings: tuple[str, ...] = ()

    def elements(self, obj: str) -> tuple[str, ...]:
        return self.carrier[obj].elements

    def apply(self, morphism: str, x: str) -> str:
        return self.action[morphism].mapping[x]


def validate_concrete(
    over: FinCat,
    carrier: Mapping[str, FinSetObj],
    action: Mapping[str, FinFn],
    allow_unfaithful: bool = False,
) -> ConcreteStructure:
    """Check identity, functoriality and faithfulness exhaustively.

    With `allow_unfaithful`, colliding parallel pairs are downgraded to
    warnings; the functions still define a category action.
    """
    carrier = dict(carrier)
    action = dict(action)
    for o in over.objects:
        if o not in carrier:
            raise UnknownObject(o)
    for o in over.objects:
        ident = over.identity[o]
        action.setdefault(ident, identity_fn(carrier[o]))
    for a in over.arrows:
        if a.name not in action:
            raise PartialFunction(a.name, None)
        fn = action[a.name]
        if fn.dom != carrier[a.dom] or fn.cod != carrier[a.cod]:
            raise ValidationError(
                f"function for {a.name!r} is not between the assigned carriers"
            )
        check_total(fn, a.name)

    for o in over.objects:
        fn = action[over.identity[o]]
        if fn.mapping != {x: x for x in carrier[o].elements}:
            raise NotFunctorial(over.identity[o], over.identity[o])

    for (g, f), h in over.compose.items():
        expected = compose_fn(action[g], action[f])
        if action[h].mapping != expected.mapping:
            raise NotFunctorial(g, f)

    warnings = []
    for x in over.objects:
        for y in over.objects:
            hom = over.hom(x, y)
            for i, f1 in enumerate(hom):
                for f2 in hom[i + 1:]:
                    if action[f1].mapping == action[f2].mapping:
                        if allow_unfaithful:
                            warnings.append(f"unfaithful pair ({f1}, {f2})")
                        else:
                            raise NotFaithful(f1, f2)

    return ConcreteStructure(over, carrier, action, tuple(warnings))


@dataclass(frozen=True)
class PullbackSquare:
    """A commuting square over two functions with a shared codomain."""

    f: FinFn
    g: FinFn
    apex: FinSetObj
    p1: FinFn
    p2: FinFn


@dataclass(frozen=True)
class ConeCounterexample:
    probe: FinSetObj
    q1: FinFn
    q2: FinFn
    mediating_count: int

    def __bool__(self) -> bool:
        return False


def pullback_finset(f: FinFn, g: FinFn, name: str | None = None) -> PullbackSquare:
    """Fibered product of two functions, enumerated in (a, b) pair order."""
    if f.cod != g.cod:
        raise CodomainMismatch(f"{f.cod.name!r} vs {g.cod.name!r}")
    pairs = [
        (a, b)
        for a in f.dom.elements
        for b in g.dom.elements
        if f.mapping[a] == g.mapping[b]
    ]
    apex = FinSetObj(
        name if name is not None else pair_id(f.dom.name, g.dom.name),
        tuple(pair_id(a, b) for a, b in pairs),
    )
    p1 = FinFn(apex, f.dom, {pair_id(a, b): a for a, b in pairs})
    p2 = FinFn(apex, g.dom, {pair_id(a, b): b for a, b in pairs})
    return PullbackSquare(f, g, apex, p1, p2)


def _all_functions(dom: FinSetObj, cod: FinSetObj) -> Iterable[FinFn]:
    if not dom.elements:
        yield FinFn(dom, cod, {})
        return
    for images in product(cod.elements, repeat=len(dom.elements)):
        yield FinFn(dom, cod, dict(zip(dom.elements, images)))


def verify_pullback_universal(
    square: PullbackSquare, probe: int = 3
) -> bool | ConeCounterexample:
    """Brute-force the universal property over probes of size <= `probe`.

    Returns the first cone with zero or several mediating functions;
    a counterexample is a result, not an error.
    """
    f, g, apex, p1, p2 = square.f, square.g, square.apex, square.p1, square.p2
    for e in apex.elements:
        if f.mapping[p1.mapping[e]] != g.mapping[p2.mapping[e]]:
            raise ValidationError("square does not commute")

    for size in range(probe + 1):
        d = FinSetObj(f"probe{size}", tuple(f"d{i}" for i in range(size)))
        for q1 in _all_functions(d, f.dom):
            for q2 in _all_functions(d, g.dom):
                if any(
                    f.mapping[q1.mapping[x]] != g.mapping[q2.mapping[x]]
                    for x in d.elements
                ):
                    continue
                count = 1
                for x in d.elements:
                    candidates = [
                        e
                        for e in apex.elements
                        if p1.mapping[e] == q1.mapping[x]
                        and p2.mapping[e] == q2.mapping[x]
                    ]
                    count *= len(candidates)
                    if count == 0:
                        break
                if count != 1:
                    return ConeCounterexample(d, q1, q2, count)
    return True


def fiberwise_count(f: FinFn, g: FinFn) -> int:
    """Predicted pullback size: sum over the base of |fiber| * |fiber|."""
    total = 0
    for c in f.cod.elements:
        na = sum(1 for a in f.dom.elements if f.mapping[a] == c)
        nb = sum(1 for b in g.dom.elements if g.mapping[b] == c)
        total += na * nb
    return total
