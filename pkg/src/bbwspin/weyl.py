"""Weight-lattice arithmetic for the root systems A, B and D.

Coordinates are stored doubled (``2 * x``) so half-integral weights stay
exact integers.  Type ``A`` of rank ``m`` acts on ``m + 1`` coordinates by
permutations; types ``B`` and ``D`` act on ``n`` coordinates by signed
permutations, with only an even number of sign changes in type ``D``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Optional, Union

from .diagrams import YoungDiagram
from .kernels import signed_sort

Number = Union[int, Fraction]


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "B", "D"):
            raise ValueError(f"unsupported family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"\s*([ABD])\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    @classmethod
    def orthogonal(cls, N: int) -> "LieType":
        """Type of ``Spin(N)``: ``B_n`` for ``N = 2n + 1``, ``D_n`` for ``N = 2n``."""
        return cls("B" if N % 2 else "D", N // 2)

    @classmethod
    def general_linear(cls, N: int) -> "LieType":
        return cls("A", N - 1)

    @property
    def ncoords(self) -> int:
        return self.rank + 1 if self.family == "A" else self.rank

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Weight:
    doubled: tuple[int, ...]
    type: LieType

    def __post_init__(self):
        if len(self.doubled) != self.type.ncoords:
            raise ValueError(
                f"{self.type} weights have {self.type.ncoords} coordinates, "
                f"got {len(self.doubled)}"
            )
        parities = {c % 2 for c in self.doubled}
        if len(parities) > 1:
            raise ValueError("coordinates must be all integral or all half-integral")
        if self.type.family == "A" and parities == {1}:
            raise ValueError("type A weights are integral")

    @classmethod
    def of(cls, coords: Iterable[Number], type: LieType) -> "Weight":
        doubled = []
        for c in coords:
            c2 = Fraction(c) * 2
            if c2.denominator != 1:
                raise ValueError(f"{c} is not a half-integer")
            doubled.append(int(c2))
        return cls(tuple(doubled), type)

    @classmethod
    def parse(cls, text: str, type: LieType) -> "Weight":
        return cls.of((Fraction(p.strip()) for p in text.split(",")), type)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, 2) for c in self.doubled)

    def __add__(self, other: "Weight") -> "Weight":
        if self.type != other.type:
            raise ValueError("cannot add weights of different types")
        return Weight(tuple(a + b for a, b in zip(self.doubled, other.doubled)), self.type)

    def __sub__(self, other: "Weight") -> "Weight":
        if self.type != other.type:
            raise ValueError("cannot subtract weights of different types")
        return Weight(tuple(a - b for a, b in zip(self.doubled, other.doubled)), self.type)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)


@dataclass(frozen=True)
class Singular:
    """The weight lies on a reflection hyperplane."""


@dataclass(frozen=True)
class Regular:
    dominant: Weight
    length: int
    spin_sign: int = 1


DominantizationResult = Union[Singular, Regular]


@dataclass(frozen=True)
class RepLabel:
    """Irreducible representation appearing in a cohomology group.

    ``kind`` is ``"spinor"`` (a half-spinor representation, ``sign`` is
    ``+1``/``-1`` in type D and ``0`` in type B), ``"trivial"`` or
    ``"highest"`` (with ``weight`` the highest weight).
    """

    kind: str
    sign: int = 0
    weight: Optional[Weight] = None

    @classmethod
    def half_spinor(cls, sign: int = 0) -> "RepLabel":
        return cls("spinor", sign)

    @classmethod
    def trivial(cls) -> "RepLabel":
        return cls("trivial")

    @classmethod
    def highest(cls, weight: Weight) -> "RepLabel":
        if not any(weight.doubled):
            return cls.trivial()
        return cls("highest", 0, weight)

    def sort_key(self) -> tuple:
        return (self.kind, -self.sign, self.weight.doubled if self.weight else ())

    def __str__(self) -> str:
        if self.kind == "spinor":
            return {1: "S+", -1: "S-", 0: "S"}[self.sign]
        if self.kind == "trivial":
            return "k"
        return f"V({self.weight})"

    @classmethod
    def parse(cls, text: str, type: Optional[LieType] = None) -> "RepLabel":
        text = text.strip()
        if text in ("S+", "S-", "S"):
            return cls.half_spinor({"S+": 1, "S-": -1, "S": 0}[text])
        if text == "k":
            return cls.trivial()
        m = re.fullmatch(r"V\((.*)\)", text)
        if m and type is not None:
            return cls.highest(Weight.parse(m.group(1), type))
        raise ValueError(f"cannot parse representation label {text!r}")


def rho(type: LieType) -> Weight:
    """Half-sum of positive roots in standard coordinates.

    ``D_n``: ``(n-1, ..., 1, 0)``; ``B_n``: ``(n-1/2, ..., 1/2)``; type ``A``
    uses the staircase ``(m, ..., 1, 0)``, which differs from the symmetric
    choice by a central character and so gives the same chambers.
    """
    n = type.ncoords
    if type.family == "B":
        return Weight(tuple(2 * (n - i) + 1 for i in range(1, n + 1)), type)
    return Weight(tuple(2 * (n - i) for i in range(1, n + 1)), type)


def is_singular(mu: Weight) -> bool:
    return isinstance(dominantize(mu), Singular)


def dominantize(mu: Weight) -> DominantizationResult:
    """Move ``mu`` into the closed dominant chamber by the Weyl group.

    For regular ``mu`` returns the dominant representative, the length of the
    shortest Weyl element doing it (the number of positive roots pairing
    negatively with ``mu``), and in type D the product of the coordinate
    signs, which is the sign of the last dominant coordinate.
    """
    family = mu.type.family
    c = mu.doubled
    if family == "A":
        ordered, inversions, repeated = signed_sort(c, 0)
        if repeated:
            return Singular()
        return Regular(Weight(tuple(ordered), mu.type), inversions)
    ordered, length, repeated = signed_sort(c, 1 if family == "B" else 2)
    if repeated:
        return Singular()
    if family == "B":
        if ordered[-1] == 0:
            return Singular()
        return Regular(Weight(tuple(ordered), mu.type), length)
    sign = -1 if sum(1 for x in c if x < 0) % 2 else 1
    dominant = list(ordered)
    if sign < 0:
        dominant[-1] = -dominant[-1]
    return Regular(Weight(tuple(dominant), mu.type), length, sign)


def positive_roots(type: LieType) -> list[tuple[int, ...]]:
    """Positive roots as integer vectors (used by the reflection oracle)."""
    n = type.ncoords
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            r = [0] * n
            r[i], r[j] = 1, -1
            roots.append(tuple(r))
            if type.family != "A":
                r = [0] * n
                r[i], r[j] = 1, 1
                roots.append(tuple(r))
        if type.family == "B":
            r = [0] * n
            r[i] = 1
            roots.append(tuple(r))
    return roots


def dim_schur(alpha: YoungDiagram, m: int) -> int:
    """Dimension of the Schur functor of ``alpha`` applied to ``k^m``."""
    if m < 1:
        raise ValueError("m must be positive")
    if alpha.height > m:
        raise ValueError(f"{alpha} has more than {m} rows")
    return dim_gl(alpha.padded(m))


def dim_gl(weight: Iterable[int]) -> int:
    """Weyl dimension formula for a dominant ``GL_m`` weight (entries may be negative)."""
    a = list(weight)
    m = len(a)
    num = prod(a[i] - a[j] + j - i for i in range(m) for j in range(i + 1, m))
    den = prod(j - i for i in range(m) for j in range(i + 1, m))
    return num // den


def dim_half_spinor(type: LieType, k: int = 0) -> int:
    """Rank of a spinor bundle on ``OGr(k, V)``; ``k = 0`` gives the half-spinor module.

    ``2^(n-1-k)`` in type ``D_n`` and ``2^(n-k)`` in type ``B_n``.
    """
    if type.family == "A":
        raise ValueError("spinors exist only in types B and D")
    n = type.rank
    exponent = n - k - (1 if type.family == "D" else 0)
    if k < 0 or exponent < 0:
        raise ValueError(f"k = {k} out of range for {type}")
    return 2**exponent
