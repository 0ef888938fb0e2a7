"""The centrally extended planar Galilean conformal algebra.

Basis: ``L_n, H_n, I_n, J_n`` for all integers ``n`` plus three central
elements ``c1, c2, c3``.  The nonzero brackets are

    [L_m, L_n] = (n - m) L_{m+n} + (m^3 - m)/12 * delta_{m+n,0} * c1
    [L_m, H_n] = n H_{m+n} + m^2 * delta_{m+n,0} * c2
    [H_m, H_n] = m * delta_{m+n,0} * c3
    [L_m, I_n] = (n - m) I_{m+n}        [L_m, J_n] = (n - m) J_{m+n}
    [H_m, I_n] = I_{m+n}                [H_m, J_n] = -J_{m+n}

and every other basis bracket vanishes (in particular the I/J span is
abelian and commutes with itself, and the c_i are central).  The table is
closed under antisymmetry automatically.  Note (m^3 - m)/12 is a genuine
rational, not always an integer.

The algebra is Z-graded by the generator index (centrals sit in degree 0).

Canonical generator order, shared with the enveloping-algebra module:
family rank J < I < H < L < c1 < c2 < c3, and ascending index inside a
family.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .scalars import ONE, ZERO, Scalar, parse_scalar

__all__ = [
    "Generator",
    "L",
    "H",
    "I",
    "J",
    "C1",
    "C2",
    "C3",
    "CENTRALS",
    "gen_key",
    "gen_str",
    "parse_gen",
    "Element",
    "bracket_basis",
    "bracket",
    "grade",
    "IJTranslation",
    "InvalidTranslation",
    "StructureReport",
    "verify_jacobi",
    "verify_structure",
]


@dataclass(frozen=True)
class Generator:
    """One basis generator: an indexed family member or a central element."""

    family: str
    index: Optional[int] = None

    def __post_init__(self) -> None:
        if self.family in ("L", "H", "I", "J"):
            if self.index is None:
                raise ValueError(f"{self.family} generators need an index")
        elif self.family in ("c1", "c2", "c3"):
            if self.index is not None:
                raise ValueError("central generators carry no index")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    @property
    def is_central(self) -> bool:
        return self.index is None

    def __str__(self) -> str:
        return gen_str(self)

    def __repr__(self) -> str:
        return gen_str(self)


def L(n: int) -> Generator:
    return Generator("L", n)


def H(n: int) -> Generator:
    return Generator("H", n)


def I(n: int) -> Generator:  # noqa: E743 - named after the generator family
    return Generator("I", n)


def J(n: int) -> Generator:
    return Generator("J", n)


C1 = Generator("c1")
C2 = Generator("c2")
C3 = Generator("c3")
CENTRALS = (C1, C2, C3)

_FAMILY_RANK = {"J": 0, "I": 1, "H": 2, "L": 3, "c1": 4, "c2": 5, "c3": 6}


def gen_key(g: Generator) -> Tuple[int, int]:
    """Canonical sort key: family rank, then index ascending."""
    return (_FAMILY_RANK[g.family], g.index or 0)


def gen_str(g: Generator) -> str:
    if g.is_central:
        return g.family
    return f"{g.family}[{g.index}]"


_GEN_RE = re.compile(r"^([LHIJ])\[(-?\d+)\]$|^(c[123])$")


def parse_gen(text: str) -> Generator:
    match = _GEN_RE.match(text.strip())
    if match is None:
        raise ValueError(f"malformed generator {text!r}")
    family, index, central = match.groups()
    if central:
        return Generator(central)
    return Generator(family, int(index))


class Element:
    """Finite linear combination of generators with scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Generator, Scalar] | None = None):
        self.terms = {g: c for g, c in (terms or {}).items() if c}

    @staticmethod
    def zero() -> "Element":
        return Element()

    @staticmethod
    def single(g: Generator, coeff: Scalar = ONE) -> "Element":
        return Element({g: coeff})

    def __add__(self, other: "Element") -> "Element":
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, ZERO) + c
        return Element(out)

    def __sub__(self, other: "Element") -> "Element":
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, ZERO) - c
        return Element(out)

    def __neg__(self) -> "Element":
        return Element({g: -c for g, c in self.terms.items()})

    def scale(self, coeff: Scalar) -> "Element":
        if not coeff:
            return Element()
        return Element({g: c * coeff for g, c in self.terms.items()})

    def coeff(self, g: Generator) -> Scalar:
        return self.terms.get(g, ZERO)

    def support(self) -> List[Generator]:
        return sorted(self.terms, key=gen_key)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({self.terms[g]})*{gen_str(g)}" for g in self.support()
        )

    def __repr__(self) -> str:
        return f"Element({str(self)})"

    def to_json(self) -> Dict[str, str]:
        return {gen_str(g): str(self.terms[g]) for g in self.support()}

    @staticmethod
    def from_json(data: Dict[str, str]) -> "Element":
        return Element(
            {parse_gen(k): parse_scalar(str(v)) for k, v in data.items()}
        )


# Orientation used by the bracket table below; unrelated to the PBW order.
_TABLE_RANK = {"L": 0, "H": 1, "I": 2, "J": 3}


def bracket_basis(g1: Generator, g2: Generator) -> Element:
    """Structure-constant bracket of two basis generators."""
    if g1.is_central or g2.is_central:
        return Element.zero()
    if _TABLE_RANK[g1.family] > _TABLE_RANK[g2.family]:
        return -bracket_basis(g2, g1)
    m, n = g1.index, g2.index
    fams = (g1.family, g2.family)
    out: Dict[Generator, Scalar] = {}
    if fams == ("L", "L"):
        if n != m:
            out[L(m + n)] = Scalar(n - m)
        if m + n == 0:
            central = Scalar(Fraction(m**3 - m, 12))
            if central:
                out[C1] = central
    elif fams == ("L", "H"):
        if n != 0:
            out[H(m + n)] = Scalar(n)
        if m + n == 0 and m != 0:
            out[C2] = Scalar(m * m)
    elif fams == ("L", "I"):
        if n != m:
            out[I(m + n)] = Scalar(n - m)
    elif fams == ("L", "J"):
        if n != m:
            out[J(m + n)] = Scalar(n - m)
    elif fams == ("H", "H"):
        if m + n == 0 and m != 0:
            out[C3] = Scalar(m)
    elif fams == ("H", "I"):
        out[I(m + n)] = ONE
    elif fams == ("H", "J"):
        out[J(m + n)] = -ONE
    # ("I", "I"), ("I", "J"), ("J", "J") all vanish.
    return Element(out)


def bracket(x: Element, y: Element) -> Element:
    """Bilinear extension of the basis bracket."""
    out = Element.zero()
    for g1, c1 in x.terms.items():
        for g2, c2 in y.terms.items():
            out = out + bracket_basis(g1, g2).scale(c1 * c2)
    return out


def grade(g: Generator) -> int:
    """Degree in the Z-grading: the index, with centrals in degree 0."""
    return 0 if g.is_central else g.index


class InvalidTranslation(ValueError):
    """The translating element must be supported on I and J generators."""


class IJTranslation:
    """The automorphism ``y -> y + [x, y]`` for x in the I/J span.

    The I/J span is an abelian ideal whose bracket with itself vanishes, so
    ad_x squares to zero on the whole algebra and ``1 + ad_x`` really is
    ``exp(ad_x)``, hence an automorphism.
    """

    __slots__ = ("element",)

    def __init__(self, element: Element):
        for g in element.terms:
            if g.family not in ("I", "J"):
                raise InvalidTranslation(
                    f"translation support must lie in the I/J span, got {g}"
                )
        self.element = element

    def apply(self, y: Element | Generator) -> Element:
        if isinstance(y, Generator):
            y = Element.single(y)
        return y + bracket(self.element, y)

    def __repr__(self) -> str:
        return f"IJTranslation({self.element})"


def apply_translation(t: IJTranslation, y: Element | Generator) -> Element:
    return t.apply(y)


@dataclass
class StructureReport:
    """Outcome of the exhaustive structure-constant checks."""

    index_bound: int
    antisymmetry_checked: int = 0
    jacobi_checked: int = 0
    grading_checked: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _generators_up_to(index_bound: int) -> List[Generator]:
    gens: List[Generator] = []
    for fam in ("L", "H", "I", "J"):
        for idx in range(-index_bound, index_bound + 1):
            gens.append(Generator(fam, idx))
    gens.extend(CENTRALS)
    return gens


def verify_jacobi(index_bound: int) -> StructureReport:
    """Check the Jacobi identity on all generator triples up to the bound."""
    report = StructureReport(index_bound=index_bound)
    gens = _generators_up_to(index_bound)
    for a, b, c in itertools.combinations_with_replacement(gens, 3):
        total = (
            bracket(Element.single(a), bracket_basis(b, c))
            + bracket(Element.single(b), bracket_basis(c, a))
            + bracket(Element.single(c), bracket_basis(a, b))
        )
        report.jacobi_checked += 1
        if total:
            report.violations.append(f"jacobi({a},{b},{c}) = {total}")
    return report


def verify_structure(index_bound: int) -> StructureReport:
    """Antisymmetry, Jacobi, and grading checks in one exhaustive pass."""
    report = verify_jacobi(index_bound)
    gens = _generators_up_to(index_bound)
    for a, b in itertools.combinations_with_replacement(gens, 2):
        forward = bracket_basis(a, b)
        backward = bracket_basis(b, a)
        report.antisymmetry_checked += 1
        if forward + backward:
            report.violations.append(f"antisymmetry({a},{b})")
        expected = grade(a) + grade(b)
        report.grading_checked += 1
        for g in forward.terms:
            if not g.is_central and grade(g) != expected:
                report.violations.append(f"grading([{a},{b}] -> {g})")
    return report
