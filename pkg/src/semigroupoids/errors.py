"""Exceptions and violation records shared across the package."""
from __future__ import annotations

from dataclasses import dataclass


class SemigroupoidError(Exception):
    """Base class for every error raised by this package."""


@dataclass(frozen=True)
class AxiomViolation:
    """A triple on which the three definedness conditions disagree.

    ``held`` and ``failed`` list the condition labels ``"i"``, ``"ii"``,
    ``"iii"``: (i) fg and gh defined, (ii) fg and (fg)h defined,
    (iii) gh and f(gh) defined.
    """

    triple: tuple[str, str, str]
    held: tuple[str, ...]
    failed: tuple[str, ...]

    def __str__(self) -> str:
        f, g, h = self.triple
        held = ",".join(self.held) or "none"
        failed = ",".join(self.failed)
        return f"({f},{g},{h}): conditions {held} hold but {failed} fail"


@dataclass(frozen=True)
class EqualityViolation:
    """A triple where both bracketings are defined but differ."""

    triple: tuple[str, str, str]
    lhs: str
    rhs: str

    def __str__(self) -> str:
        f, g, h = self.triple
        return f"({f}{g}){h} = {self.lhs} but {f}({g}{h}) = {self.rhs}"


class NotExelSemigroupoid(SemigroupoidError):
    def __init__(self, violations):
        self.violations = list(violations)
        first = self.violations[0] if self.violations else "?"
        super().__init__(f"{len(self.violations)} violating triple(s); first: {first}")


class MalformedTable(SemigroupoidError):
    pass


class NotCategorical(SemigroupoidError):
    """Two right sets overlap without being equal."""

    def __init__(self, a: str, b: str, common: str, a_only=(), b_only=()):
        self.witness = (a, b, common)
        self.a_only, self.b_only = tuple(a_only), tuple(b_only)
        super().__init__(
            f"right sets of {a} and {b} share {common} but differ"
            f" ({a} only: {','.join(self.a_only)}; {b} only: {','.join(self.b_only)})"
        )


class InvalidChoice(SemigroupoidError):
    pass


class CapExceeded(SemigroupoidError):
    pass


class GraphViolation(SemigroupoidError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations[:4]))


class HasSourceOrSink(SemigroupoidError):
    def __init__(self, vertex: str, kind: str):
        self.vertex = vertex
        self.kind = kind
        super().__init__(f"vertex {vertex} is a {kind}")


class NotRegular(SemigroupoidError):
    def __init__(self, element: str):
        self.element = element
        super().__init__(f"{element} has no inverse")


class NotUniqueInverse(SemigroupoidError):
    def __init__(self, element: str, inverses):
        self.element = element
        self.inverses = tuple(inverses)
        super().__init__(f"{element} has inverses {', '.join(self.inverses)}")


class VertexMismatch(SemigroupoidError):
    pass


class NotHomomorphism(SemigroupoidError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations[:4]))


class NotAssociative(SemigroupoidError):
    """Semidirect product fails associativity.

    ``witness`` is the earliest violating triple in lexicographic order of
    pair indices; ``left`` and ``right`` are the two bracketings (``None``
    when undefined). ``witnesses`` keeps every violating triple found.
    """

    def __init__(self, witnesses):
        self.witnesses = list(witnesses)
        self.witness, self.left, self.right = self.witnesses[0]
        super().__init__(
            f"triple {self.witness}: left bracketing {self.left}, right bracketing {self.right}"
        )


class NotGraphable(SemigroupoidError):
    def __init__(self, a: str, b: str):
        self.pair = (a, b)
        super().__init__(f"{a} and {b} have different source or range")


class HypothesisViolated(SemigroupoidError):
    def __init__(self, which: str, detail: str):
        self.which = which
        super().__init__(f"{which}: {detail}")


class AxiomFailure(SemigroupoidError):
    def __init__(self, axiom: str, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"axiom {axiom} fails at {witness}")


class NoInterpolator(SemigroupoidError):
    pass


class NotCovering(SemigroupoidError):
    pass


class DSLSyntaxError(SemigroupoidError):
    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        self.line, self.col, self.expected = line, col, expected
        msg = f"line {line}, col {col}: expected {expected}"
        if found:
            msg += f", found {found!r}"
        super().__init__(msg)


class UnresolvedName(SemigroupoidError):
    def __init__(self, name: str, where: str = ""):
        self.name = name
        super().__init__(f"unresolved name {name!r}" + (f" in {where}" if where else ""))


class DuplicateDefinition(SemigroupoidError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"duplicate definition of {name!r}")
