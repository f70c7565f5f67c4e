"""Reference classification data.

The published classification of rational a³b-monotiles, kept as plain data
so runs can be cross-checked against it and tests can use it as an oracle.
Angle tuples use the ``(p1,p2,p3,p4)/q`` notation, families the
``(…)/Df`` notation, vertex spectra the compact ``6abd+2c3`` notation, and
edge lengths are either exact fractions or the lower end of a 0.001 bin
(``"0.391"`` means 0.391 ≤ a/π < 0.392).
"""

from dataclasses import dataclass
from fractions import Fraction
import re

__all__ = [
    "ABD_CASE",
    "CASE_OUTCOMES",
    "FAMILIES",
    "SPORADIC",
    "TRIVARIATE_FACTORS",
    "NO_TILING",
    "FamilyRow",
    "SporadicRow",
    "in_bin",
    "parse_angles",
]


def parse_angles(text: str) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """``"(3,4,8,1)/6"`` → four Fractions."""
    match = re.fullmatch(r"\((-?\d+),(-?\d+),(-?\d+),(-?\d+)\)/(\d+)", text.replace(" ", ""))
    if not match:
        raise ValueError(f"bad angle tuple {text!r}")
    *nums, q = (int(g) for g in match.groups())
    return tuple(Fraction(n, q) for n in nums)


def in_bin(value: float, printed: str, exact_tol: float = 5e-4) -> bool:
    """Whether a computed length (π-units) matches a printed one."""
    if "/" in printed or "." not in printed:
        return abs(value - float(Fraction(printed))) < exact_tol
    low = float(printed)
    return low - 1e-9 <= value < low + 1e-3


@dataclass(frozen=True)
class SporadicRow:
    angles: str
    f: int
    a: str
    b: str
    spectra: tuple[str, ...]


@dataclass(frozen=True)
class FamilyRow:
    angles: str
    threshold: int


SPORADIC: tuple[SporadicRow, ...] = (
    SporadicRow("(6,3,4,3)/6", 6, "1/2", "1/6", ("6abd+2c3",)),
    SporadicRow("(1,8,4,3)/6", 6, "0.391", "1", ("6abd+2c3",)),
    SporadicRow("(12,4,6,2)/9", 6, "0.567", "0.174", ("6abd+2c3",)),
    SporadicRow("(2,10,3,6)/9", 12, "0.339", "0.532", ("12abd+2c6",)),
    SporadicRow("(1,21,5,8)/15", 12, "0.424", "0.741", ("12abd+2c6",)),
    SporadicRow("(4,9,5,17)/15", 12, "0.424", "0.165", ("12abd+2c6",)),
    SporadicRow("(9,28,10,23)/30", 12, "0.335", "0.415", ("12abd+2c6",)),
    SporadicRow("(3,16,10,41)/30", 12, "0.469", "0.146", ("12abd+2c6",)),
    SporadicRow("(5,32,6,23)/30", 20, "0.335", "0.415", ("20abd+2c10",)),
    SporadicRow("(1,16,6,43)/30", 20, "0.469", "0.273", ("20abd+2c10",)),
    SporadicRow("(1,42,4,17)/30", 30, "0.424", "0.549", ("30abd+2c15",)),
    SporadicRow(
        "(3,20,4,13)/18",
        18,
        "0.339",
        "0.452",
        ("18abd+2c9", "16abd+2bc4+2ac5d", "14abd+2a2cd2+4bc4"),
    ),
    SporadicRow("(1,4,2,2)/4", 16, "1/4", "1/2", ("8bd2+8a2bc+2c4",)),
    SporadicRow("(5,4,7,3)/9", 36, "0.174", "0.258", ("18bc2+6a3d+6a2b2+6abd3+2d6",)),
    SporadicRow("(15,6,10,7)/18", 36, "0.225", "0.118", ("14a2b+8ad3+10bc3+6b2cd2",)),
)

FAMILIES: tuple[FamilyRow, ...] = (
    FamilyRow("(4,f-4,4,f)/f", 10),
    FamilyRow("(6,4f-4,12,2f-2)/3f", 6),
    FamilyRow("(6,2f-4,12,4f-2)/3f", 10),
)

ABD_CASE: tuple[tuple[str, int], ...] = tuple((row.angles, row.f) for row in SPORADIC[:12])

# Accepted solutions per two-variable case, before merging; missing ids have none.
CASE_OUTCOMES: dict[str, tuple[tuple[str, int], ...]] = {
    "bd2+bc2": (("(1,4,2,2)/4", 16),),
    "bc2+a3d": (("(5,4,7,3)/9", 36),),
    "bc2+ad3": (("(1,6,2,3)/5", 10),),
    "bc2+d4": (("(1,4,2,2)/4", 16),),
    "b3+a4": (("(3,4,8,1)/6", 6), ("(3,4,6,2)/6", 8)),
    "a2b+b4": (("(9,6,12,5)/12", 6),),
    "a2b+bc3": (("(15,6,10,7)/18", 36),),
    "bd2+a2bc": (("(1,4,2,2)/4", 16),),
    "bd2+c4": (("(1,4,2,2)/4", 16),),
    "bd2+a2c2": (("(2,6,4,3)/6", 8),),
}

NO_TILING: tuple[tuple[str, int], ...] = (
    ("(3,4,6,2)/6", 8),
    ("(9,6,12,5)/12", 6),
    ("(2,6,4,3)/6", 8),
)

# Irreducible factors of the fifteen eliminants of the αβδ polynomial, x eliminated.
TRIVARIATE_FACTORS: tuple[tuple[str, ...], ...] = (
    ("z-1", "y+1", "y*z-1"),
    ("z^2+1", "z-1"),
    ("y-1", "y+1"),
    ("y-1", "y+1"),
    ("y+1", "z^2+1", "y-1"),
    ("y-1", "y+1", "y^2+y*z+z^2"),
    ("z^2+1", "y^3*z-1", "y*z-1"),
    ("z-1", "y*z-1", "y-1", "y^3*z-1"),
    ("y+1", "z-1", "y-1", "y^2+y*z+z^2", "y*z-1"),
    (
        "z-1",
        "y-1",
        "y+1",
        "y^6*z^4-2*y^6*z^3-2*y^5*z^4+y^6*z^2-y^4*z^4+4*y^5*z^2+7*y^4*z^3+2*y^3*z^4-2*y^5*z"
        "-y^4*z^2+y^3*z^3+y^2*z^4-5*y^4*z-10*y^3*z^2-5*y^2*z^3+y^4+y^3*z-y^2*z^2-2*y*z^3"
        "+2*y^3+7*y^2*z+4*y*z^2-y^2+z^2-2*y-2*z+1",
    ),
    (
        "y-1",
        "y+1",
        "y^4*z^6-3*y^4*z^5+4*y^4*z^4-4*y^3*z^5-2*y^4*z^3+10*y^3*z^4-y^2*z^5+y^4*z^2"
        "-9*y^3*z^3+8*y^2*z^4-y*z^5+4*y^3*z^2-12*y^2*z^3+4*y*z^4-y^3*z+8*y^2*z^2-9*y*z^3"
        "+z^4-y^2*z+10*y*z^2-2*z^3-4*y*z+4*z^2-3*z+1",
    ),
    (
        "y^8*z^6+y^7*z^7+y^6*z^8-2*y^8*z^5-y^6*z^7+y^8*z^4-4*y^7*z^5-y^6*z^6+6*y^7*z^4"
        "+3*y^6*z^5+y^5*z^6+y^4*z^7-3*y^7*z^3+2*y^6*z^4+3*y^5*z^5-3*y^4*z^6-y^3*z^7"
        "-6*y^6*z^3-6*y^5*z^4+5*y^4*z^5+y^3*z^6+3*y^6*z^2+4*y^5*z^3-4*y^4*z^4+4*y^3*z^5"
        "+3*y^2*z^6+y^5*z^2+5*y^4*z^3-6*y^3*z^4-6*y^2*z^5-y^5*z-3*y^4*z^2+3*y^3*z^3"
        "+2*y^2*z^4-3*y*z^5+y^4*z+y^3*z^2+3*y^2*z^3+6*y*z^4-y^2*z^2-4*y*z^3+z^4-y^2*z"
        "-2*z^3+y^2+y*z+z^2",
    ),
    (
        "z^2+1",
        "y+1",
        "y^6*z^4+y^5*z^5+y^4*z^6-y^6*z^3-3*y^5*z^4-2*y^4*z^5+y^6*z^2+3*y^5*z^3+3*y^4*z^4"
        "-y^3*z^5-y^5*z^2+y^4*z^3+4*y^3*z^4+2*y^2*z^5-2*y^4*z^2-6*y^3*z^3-2*y^2*z^4"
        "+2*y^4*z+4*y^3*z^2+y^2*z^3-y*z^4-y^3*z+3*y^2*z^2+3*y*z^3+z^4-2*y^2*z-3*y*z^2"
        "-z^3+y^2+y*z+z^2",
    ),
    (
        "y^8*z^8-4*y^8*z^7-2*y^7*z^8+8*y^8*z^6+5*y^7*z^7-y^6*z^8-9*y^8*z^5-5*y^7*z^6"
        "+9*y^6*z^7+2*y^5*z^8+7*y^8*z^4-24*y^6*z^6-8*y^5*z^7+y^4*z^8-3*y^8*z^3+4*y^7*z^4"
        "+35*y^6*z^5+12*y^5*z^6-7*y^4*z^7+y^8*z^2-3*y^7*z^3-30*y^6*z^4-5*y^5*z^5"
        "+23*y^4*z^6+3*y^3*z^7+y^7*z^2+18*y^6*z^3-4*y^5*z^4-41*y^4*z^5-6*y^3*z^6"
        "+2*y^2*z^7-8*y^6*z^2+8*y^5*z^3+48*y^4*z^4+8*y^3*z^5-8*y^2*z^6+2*y^6*z"
        "-6*y^5*z^2-41*y^4*z^3-4*y^3*z^4+18*y^2*z^5+y*z^6+3*y^5*z+23*y^4*z^2-5*y^3*z^3"
        "-30*y^2*z^4-3*y*z^5+z^6-7*y^4*z+12*y^3*z^2+35*y^2*z^3+4*y*z^4-3*z^5+y^4"
        "-8*y^3*z-24*y^2*z^2+7*z^4+2*y^3+9*y^2*z-5*y*z^2-9*z^3-y^2+5*y*z+8*z^2-2*y-4*z+1",
    ),
    ("z^2+1", "y-1", "y+1", "y*z-1", "y^2+y*z+z^2", "y^3*z-1"),
)
