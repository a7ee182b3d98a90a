"""Error types shared across the package.

Validation errors always name the witnessing ids, so a failed check can be
reported without re-deriving anything from the presentation.
"""

from __future__ import annotations

from dataclasses import dataclass


class BasecatError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(BasecatError):
    """A presentation violates one of its structural laws."""


@dataclass
class DuplicateId(ValidationError):
    ident: str

    def __str__(self) -> str:
        return f"duplicate id {self.ident!r}"


@dataclass
class MissingComposite(ValidationError):
    g: str
    f: str

    def __str__(self) -> str:
        return f"composite of ({self.g!r} after {self.f!r}) is not in the table"


@dataclass
class DomCodMismatch(ValidationError):
    g: str
    f: str
    detail: str = ""

    def __str__(self) -> str:
        extra = f": {self.detail}" if self.detail else ""
        return f"dom/cod mismatch on pair ({self.g!r}, {self.f!r}){extra}"


@dataclass
class UnitLawViolation(ValidationError):
    f: str

    def __str__(self) -> str:
        return f"unit law fails at {self.f!r}"


@dataclass
class AssociativityViolation(ValidationError):
    h: str
    g: str
    f: str

    def __str__(self) -> str:
        return f"associativity fails on triple ({self.h!r}, {self.g!r}, {self.f!r})"


@dataclass
class UnmappedObject(ValidationError):
    ident: str

    def __str__(self) -> str:
        return f"object {self.ident!r} has no image"


@dataclass
class UnmappedMorphism(ValidationError):
    ident: str

    def __str__(self) -> str:
        return f"morphism {self.ident!r} has no image"


@dataclass
class DomCodNotPreserved(ValidationError):
    f: str

    def __str__(self) -> str:
        return f"image of {self.f!r} has the wrong dom/cod"


@dataclass
class IdentityNotPreserved(ValidationError):
    obj: str

    def __str__(self) -> str:
        return f"identity of {self.obj!r} is not sent to an identity"


@dataclass
class CompositionNotPreserved(ValidationError):
    g: str
    f: str

    def __str__(self) -> str:
        return f"composite of ({self.g!r} after {self.f!r}) is not preserved"


@dataclass
class SourceTargetMismatch(ValidationError):
    detail: str = ""

    def __str__(self) -> str:
        return f"source/target categories do not line up: {self.detail}"


@dataclass
class NotMutuallyInverse(ValidationError):
    detail: str

    def __str__(self) -> str:
        return f"functor pair is not mutually inverse: {self.detail}"


@dataclass
class UnknownMorphism(BasecatError):
    ident: str

    def __str__(self) -> str:
        return f"no morphism named {self.ident!r}"


@dataclass
class UnknownObject(BasecatError):
    ident: str

    def __str__(self) -> str:
        return f"no object named {self.ident!r}"


# Finite-set layer.


@dataclass
class PartialFunction(ValidationError):
    f: str
    element: str | None

    def __str__(self) -> str:
        if self.element is None:
            return f"no function assigned to morphism {self.f!r}"
        return f"function for {self.f!r} is undefined at {self.element!r}"


@dataclass
class NotFunctorial(ValidationError):
    g: str
    f: str

    def __str__(self) -> str:
        return f"assigned functions break composition on ({self.g!r}, {self.f!r})"


@dataclass
class NotFaithful(ValidationError):
    f1: str
    f2: str

    def __str__(self) -> str:
        return f"parallel morphisms {self.f1!r} and {self.f2!r} share one function"


@dataclass
class CodomainMismatch(ValidationError):
    detail: str = ""

    def __str__(self) -> str:
        return f"functions do not share a codomain: {self.detail}"


# Constructions.


@dataclass
class NotStrict(ValidationError):
    v: str
    u: str

    def __str__(self) -> str:
        return f"indexed family is not strict on base pair ({self.v!r}, {self.u!r})"


@dataclass
class NoSelfDualWitness(ValidationError):
    detail: str

    def __str__(self) -> str:
        return f"self-duality witness rejected: {self.detail}"


# Fibrations.


@dataclass
class NoLiftInCleavage(BasecatError):
    u: str
    obj: str

    def __str__(self) -> str:
        return f"cleavage has no lift for base morphism {self.u!r} at {self.obj!r}"


@dataclass
class NotSplit(BasecatError):
    detail: str

    def __str__(self) -> str:
        return f"cleavage is not split: {self.detail}"


# DSL front-end.


@dataclass(frozen=True)
class SourceSpan:
    file: str
    line: int
    column: int
    length: int = 1

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"


class ParseError(BasecatError):
    def __init__(self, span: SourceSpan, expected: str, found: str):
        super().__init__(f"{span}: expected {expected}, found {found}")
        self.span = span
        self.expected = expected
        self.found = found


class UnresolvedReference(ParseError):
    def __init__(self, name: str, span: SourceSpan):
        super().__init__(span, "a previously declared name", repr(name))
        self.name = name
