"""Bookkeeping for the three families of Picard-number-one horospherical
homogeneous spaces, and the dimension counts showing that their two closed
orbits sit in codimension at least two."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional


@dataclass(frozen=True)
class CaseFamily:
    """One parameterized family: a marked Dynkin diagram with two adjacent
    fundamental weights and the homogeneous space it produces."""

    tag: str
    dynkin: str
    min_m: int
    needs_i: bool
    marked_roots: str
    space_pattern: str

    def to_json(self) -> dict:
        constraint = f"m >= {self.min_m}"
        if self.needs_i:
            constraint += ", 1 <= i <= m-1"
        return {
            "tag": self.tag,
            "dynkin": self.dynkin,
            "marked_roots": self.marked_roots,
            "constraint": constraint,
            "space": self.space_pattern,
        }


FAMILIES: tuple[CaseFamily, ...] = (
    CaseFamily("a", "A", 2, False, "(A_m, alpha_1, alpha_m)",
               "SO(2m+2)/P(omega_1)"),
    CaseFamily("b", "A", 3, True, "(A_m, alpha_i, alpha_{i+1})",
               "Gr(i+1, m+2)"),
    CaseFamily("c", "D", 4, False, "(D_m, alpha_{m-1}, alpha_m)",
               "Spin(2m+1)/P(omega_m)"),
)


def case_families() -> tuple[CaseFamily, ...]:
    """The three families with their parameter constraints."""
    return FAMILIES


@dataclass(frozen=True)
class HorosphericalCase:
    """A concrete member of one of the three families."""

    tag: str
    m: int
    i: Optional[int] = None

    def __post_init__(self):
        if self.tag == "a":
            if self.m < 2:
                raise ValueError("family a requires m >= 2")
            if self.i is not None:
                raise ValueError("family a takes no parameter i")
        elif self.tag == "b":
            if self.m < 3:
                raise ValueError("family b requires m >= 3")
            if self.i is None or not 1 <= self.i <= self.m - 1:
                raise ValueError("family b requires 1 <= i <= m-1")
        elif self.tag == "c":
            if self.m < 4:
                raise ValueError("family c requires m >= 4")
            if self.i is not None:
                raise ValueError("family c takes no parameter i")
        else:
            raise ValueError(f"unknown family tag {self.tag!r}")

    @property
    def dynkin(self) -> str:
        return "D" if self.tag == "c" else "A"

    def homogeneous_space(self) -> str:
        if self.tag == "a":
            return f"SO({2 * self.m + 2})/P(omega_1)"
        if self.tag == "b":
            return f"Gr({self.i + 1}, {self.m + 2})"
        return f"Spin({2 * self.m + 1})/P(omega_{self.m})"

    def to_json(self) -> dict:
        dims = case_dimensions(self)
        return {
            "tag": self.tag,
            "m": self.m,
            "i": self.i,
            "space": self.homogeneous_space(),
            "dimensions": list(dims),
        }


def case_dimensions(case: HorosphericalCase) -> tuple[int, int, int]:
    """Dimension of the embedding and of its two closed orbits.

    Family a is a quadric of dimension 2m with two m-dimensional projective
    spaces inside; family b is Gr(i+1, m+2) with the two adjacent smaller
    Grassmannians; family c is the even orthogonal Grassmannian pair inside
    the odd one, with triangular-number dimensions.
    """
    m, i = case.m, case.i
    if case.tag == "a":
        return (2 * m, m, m)
    if case.tag == "b":
        assert i is not None
        return ((m - i + 1) * (i + 1), (m - i + 1) * i, (m - i) * (i + 1))
    return (m * (m + 1) // 2, m * (m - 1) // 2, m * (m - 1) // 2)


def codim_at_least_two(case: HorosphericalCase) -> bool:
    """True iff both closed orbits have codimension >= 2, so neither is a
    divisor; this is what rules out the toroidal property for the family."""
    total, orb_a, orb_b = case_dimensions(case)
    return orb_a <= total - 2 and orb_b <= total - 2


def iter_cases(max_m: int) -> Iterator[HorosphericalCase]:
    """Every valid parameterization with m up to ``max_m``."""
    for m in range(2, max_m + 1):
        yield HorosphericalCase("a", m)
    for m in range(3, max_m + 1):
        for i in range(1, m):
            yield HorosphericalCase("b", m, i)
    for m in range(4, max_m + 1):
        yield HorosphericalCase("c", m)
