"""Borel-Bott-Weil cohomology of the bundles used on ``Gr(k, V)`` and ``OGr(k, V)``.

Every computation goes through :func:`bbw.weyl.dominantize`: form the weight
of the bundle, add rho, and either find it singular (acyclic) or read off a
single cohomology group in degree equal to the Weyl length.  Where a closed
form is known it is provided separately so the two can be compared.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Optional

from .diagrams import YoungDiagram
from .tensor import horizontal_contraction
from .weyl import LieType, RepLabel, Regular, Weight, dominantize, rho


class OracleMismatch(AssertionError):
    """Two independent routes to the same cohomology disagreed."""


@dataclass(frozen=True)
class SpaceParams:
    N: int
    k: int

    def __post_init__(self):
        if self.N < 1 or self.k < 1:
            raise ValueError("N and k must be positive")

    @property
    def n(self) -> int:
        return self.N // 2

    @property
    def odd(self) -> bool:
        return self.N % 2 == 1

    @property
    def lie_type(self) -> LieType:
        return LieType.orthogonal(self.N)

    @property
    def genus(self) -> Optional[int]:
        """``g`` with ``N = 2g + 2``, for even ``N``."""
        return None if self.odd else self.N // 2 - 1


@dataclass(frozen=True)
class GradedRepList:
    """Graded representation: sorted ``(degree, label, multiplicity)`` triples.

    Empty means the bundle is acyclic.
    """

    entries: tuple[tuple[int, RepLabel, int], ...] = ()

    def __post_init__(self):
        merged: dict = defaultdict(int)
        for degree, label, mult in self.entries:
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            merged[(degree, label)] += mult
        ordered = sorted(
            ((d, lab, m) for (d, lab), m in merged.items() if m),
            key=lambda e: (e[0], e[1].sort_key()),
        )
        object.__setattr__(self, "entries", tuple(ordered))

    @classmethod
    def concat(cls, parts: Iterable["GradedRepList"]) -> "GradedRepList":
        return cls(tuple(e for p in parts for e in p.entries))

    def shifted(self, by: int) -> "GradedRepList":
        return GradedRepList(tuple((d + by, lab, m) for d, lab, m in self.entries))

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def degrees(self) -> list[int]:
        return sorted({d for d, _, _ in self.entries})


ACYCLIC = GradedRepList()


@dataclass(frozen=True)
class BundleExpr:
    """Symbolic equivariant bundle.

    ``carrier`` is ``"U"`` or ``"Uperp"``; ``twist`` is ``d`` in ``O(d)``
    with ``O(1) = det U^vee``; ``spinor_left`` is ``(dual, sign)`` and
    ``spinor_right`` a sign, both only on orthogonal Grassmannians.
    """

    carrier: str
    shape: YoungDiagram
    twist: int = 0
    spinor_left: Optional[tuple[bool, int]] = None
    spinor_right: Optional[int] = None

    def __post_init__(self):
        if self.carrier not in ("U", "Uperp"):
            raise ValueError(f"unknown carrier {self.carrier!r}")


def _check_sign(sign: int, name: str = "sign") -> None:
    if sign not in (1, -1):
        raise ValueError(f"{name} must be +1 or -1, got {sign}")


def _spinor_label(dominant_minus_rho: Weight, sp: SpaceParams) -> RepLabel:
    d = dominant_minus_rho.doubled
    if all(abs(x) == 1 for x in d) and all(x == 1 for x in d[:-1]):
        return RepLabel.half_spinor(0 if sp.odd else d[-1])
    return RepLabel.highest(dominant_minus_rho)


def _validate_schur_spinor(sp: SpaceParams, beta: YoungDiagram) -> None:
    if sp.N < 2 * sp.k + 2:
        raise ValueError(f"need N >= 2k + 2, got N = {sp.N}, k = {sp.k}")
    if not beta.fits_in(sp.N - sp.k, sp.k):
        raise ValueError(f"{beta} is not inside the {sp.N - sp.k} x {sp.k} rectangle")


def schur_spinor_generic(sp: SpaceParams, beta: YoungDiagram, right_sign: int = 1) -> GradedRepList:
    """Cohomology of ``Sigma^beta U (x) S`` on ``OGr(k, V)`` by dominantization."""
    _validate_schur_spinor(sp, beta)
    _check_sign(right_sign, "right_sign")
    t = sp.lie_type
    b = beta.padded(sp.k)
    first = tuple(-2 * b[sp.k - 1 - i] + 1 for i in range(sp.k))
    last = [1] * (sp.n - sp.k)
    if not sp.odd and right_sign < 0:
        last[-1] = -1
    mu = Weight(first + tuple(last), t) + rho(t)
    res = dominantize(mu)
    if not isinstance(res, Regular):
        return ACYCLIC
    return GradedRepList(((res.length, _spinor_label(res.dominant - rho(t), sp), 1),))


def schur_spinor_closed_form(sp: SpaceParams, beta: YoungDiagram, right_sign: int = 1) -> GradedRepList:
    """Same cohomology from the horizontal-expansion criterion.

    Nonzero iff ``beta = expand_horizontal(nu, N - 2k)`` with ``nu``
    symmetric; then a single half-spinor module of sign ``(-1)^s`` (times
    ``right_sign``) in degree ``s(N - 2k) + (|nu| - s)/2``, ``s`` the
    diagonal length of ``nu``.
    """
    _validate_schur_spinor(sp, beta)
    _check_sign(right_sign, "right_sign")
    gap = sp.N - 2 * sp.k
    nu = horizontal_contraction(beta, gap)
    if nu is None or not nu.is_symmetric():
        return ACYCLIC
    s = nu.diag_length
    degree = s * gap + (nu.size - s) // 2
    sign = 0 if sp.odd else right_sign * (-1) ** s
    return GradedRepList(((degree, RepLabel.half_spinor(sign), 1),))


def cohomology_ogr_schur_spinor(sp: SpaceParams, beta: YoungDiagram, right_sign: int = 1) -> GradedRepList:
    """``H^*(OGr(k, V), Sigma^beta U (x) S)``, checked against the closed form."""
    generic = schur_spinor_generic(sp, beta, right_sign)
    closed = schur_spinor_closed_form(sp, beta, right_sign)
    if generic != closed:
        raise OracleMismatch(
            f"N={sp.N} k={sp.k} beta={beta}: dominantization gives {generic.entries}, "
            f"closed form gives {closed.entries}"
        )
    return generic


def _validate_hom_spinors(sp: SpaceParams, beta: YoungDiagram) -> None:
    if sp.N < 2 * sp.k + 3:
        raise ValueError(f"need N >= 2k + 3, got N = {sp.N}, k = {sp.k}")
    if beta.height > sp.k:
        raise ValueError(f"{beta} has more than k = {sp.k} rows")
    if beta.width > beta.height + 1:
        raise ValueError(f"{beta} is wider than its height plus one")


def cohomology_ogr_hom_spinors(
    sp: SpaceParams, beta: YoungDiagram, left_sign: int = 1, right_sign: int = 1
) -> GradedRepList:
    """``H^*(OGr(k, V), Sigma^beta U (x) S^vee (x) S')`` by dominantization.

    ``S^vee (x) S'`` is replaced by the bundles with weights
    ``(0, ..., 0; 1^t, 0, ...)`` for ``0 <= t <= n - k``, each taken once; in
    type D only the ``t`` with ``(-1)^t = left_sign * right_sign`` occur.
    Signs are ignored in type B.
    """
    _validate_hom_spinors(sp, beta)
    _check_sign(left_sign, "left_sign")
    _check_sign(right_sign, "right_sign")
    t_ = sp.lie_type
    r = rho(t_)
    b = beta.padded(sp.k)
    first = tuple(-2 * b[sp.k - 1 - i] for i in range(sp.k))
    entries = []
    for t in range(sp.n - sp.k + 1):
        if not sp.odd and (-1) ** t != left_sign * right_sign:
            continue
        tail = (2,) * t + (0,) * (sp.n - sp.k - t)
        res = dominantize(Weight(first + tail, t_) + r)
        if isinstance(res, Regular):
            entries.append((res.length, RepLabel.highest(res.dominant - r), 1))
    return GradedRepList(tuple(entries))


def hom_spinors_closed_form(
    sp: SpaceParams, beta: YoungDiagram, left_sign: int = 1, right_sign: int = 1
) -> GradedRepList:
    """Expected answer: ``k[-t]`` for ``beta = (t)``, ``t <= 2``, matching signs; else zero."""
    _validate_hom_spinors(sp, beta)
    if beta.height > 1 or beta.width > 2:
        return ACYCLIC
    t = beta.width
    if not sp.odd and (-1) ** t != left_sign * right_sign:
        return ACYCLIC
    return GradedRepList(((t, RepLabel.trivial(), 1),))


def cohomology_gr(N: int, k: int, gamma: YoungDiagram, twist: int = 0) -> GradedRepList:
    """``H^*(Gr(k, N), Sigma^gamma U^perp (x) O(twist))``.

    The ``GL(N)`` weight is ``(twist^k; gamma)``; after adding rho it has the
    first ``k`` entries ``N - i + twist + 1`` (up to a common shift) and the
    remaining ones ``N - k - i + 1 + gamma_i``.
    """
    if not 1 <= k < N:
        raise ValueError(f"need 1 <= k < N, got N = {N}, k = {k}")
    if gamma.height > N - k:
        raise ValueError(f"{gamma} has more than N - k = {N - k} rows")
    t = LieType.general_linear(N)
    r = rho(t)
    w = Weight(tuple(2 * twist for _ in range(k)) + tuple(2 * g for g in gamma.padded(N - k)), t)
    res = dominantize(w + r)
    if not isinstance(res, Regular):
        return ACYCLIC
    return GradedRepList(((res.length, RepLabel.highest(res.dominant - r), 1),))


def dual_spinor_relabel(sp: SpaceParams, sign: int, branching: bool = False) -> tuple[int, int]:
    """Rewrite a dual spinor pushforward as a spinor pushforward twisted by ``O(-1)``.

    Returns ``(new_sign, -1)``.  At a non-branching point the sign is kept
    when ``g - k`` is odd and flipped when it is even; at a branching point
    there is a single spinor bundle and ``new_sign`` is ``0``.
    """
    if sp.odd:
        raise ValueError("the relabeling is defined for even N = 2g + 2")
    if branching:
        return 0, -1
    _check_sign(sign)
    g = sp.genus
    return (sign if (g - sp.k) % 2 else -sign), -1


def cohomology(bundle: BundleExpr, space: str, N: int, k: int) -> GradedRepList:
    """Dispatch a :class:`BundleExpr` to the matching computation."""
    if space == "gr":
        if bundle.carrier != "Uperp" or bundle.spinor_left or bundle.spinor_right:
            raise ValueError("on Gr(k, V) only Sigma^gamma U^perp (x) O(d) is supported")
        return cohomology_gr(N, k, bundle.shape, bundle.twist)
    if space != "ogr":
        raise ValueError(f"unknown space {space!r}")
    if bundle.carrier != "U" or bundle.twist:
        raise ValueError("on OGr(k, V) only untwisted Schur functors of U are supported")
    sp = SpaceParams(N, k)
    if bundle.spinor_left is not None:
        dual, s1 = bundle.spinor_left
        if not dual:
            raise ValueError("the left spinor factor must be dual")
        return cohomology_ogr_hom_spinors(sp, bundle.shape, s1, bundle.spinor_right or 1)
    return cohomology_ogr_schur_spinor(sp, bundle.shape, bundle.spinor_right or 1)
