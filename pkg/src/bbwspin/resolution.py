"""Locally free resolutions of pushed-forward spinor bundles on ``Gr(k, V)``.

Terms are written as Schur functors of ``U^perp`` (rank ``N - k``) with no
determinant factored out, so ``O(-1)`` appears as the column ``(1^(N-k))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .bbw import OracleMismatch, SpaceParams, schur_spinor_generic
from .diagrams import YoungDiagram, enumerate_diagrams, expand_vertical, transpose
from .tensor import cauchy_one_plus, pushforward_p2
from .weyl import dim_half_spinor, dim_schur


@dataclass(frozen=True)
class ResolutionTerm:
    t: int
    summands: tuple[tuple[int, YoungDiagram], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "summands", tuple(sorted(self.summands, key=lambda p: (p[1], -p[0])))
        )


@dataclass(frozen=True)
class Resolution:
    params: SpaceParams
    base_sign: int
    terms: tuple[ResolutionTerm, ...]

    def __iter__(self) -> Iterator[ResolutionTerm]:
        return iter(self.terms)

    @property
    def length(self) -> int:
        return max((term.t for term in self.terms if term.summands), default=0)

    def euler_rank(self) -> int:
        """Alternating sum of ranks; zero since ``j_* S`` is torsion."""
        sp = self.params
        spinor = dim_half_spinor(sp.lie_type)
        return sum(
            (-1) ** term.t * spinor * dim_schur(shape, sp.N - sp.k)
            for term in self.terms
            for _, shape in term.summands
        )


def _sign(sp: SpaceParams, sign: int) -> int:
    return 0 if sp.odd else sign


def _direct_terms(sp: SpaceParams, base_sign: int) -> dict[int, list]:
    k, gap = sp.k, sp.N - 2 * sp.k
    terms: dict[int, list] = {t: [] for t in range(k * (k + 1) // 2 + 1)}
    for nu in enumerate_diagrams(k, k, symmetric_only=True):
        s = nu.diag_length
        t = (nu.size + s) // 2
        terms[t].append((_sign(sp, base_sign * (-1) ** s), expand_vertical(nu, gap)))
    return terms


def _spectral_terms(sp: SpaceParams, base_sign: int) -> dict[int, list]:
    # Decompose against the Kapranov collection Sigma^alpha U^perp, alpha in a
    # k-wide, (N-k)-tall box: the coefficient of alpha is
    # H^q(OGr, Sigma^{alpha^T} U (x) S) placed at p = -|alpha|.
    k = sp.k
    terms: dict[int, list] = {t: [] for t in range(k * (k + 1) // 2 + 1)}
    for alpha in enumerate_diagrams(k, sp.N - k):
        coh = schur_spinor_generic(sp, transpose(alpha), base_sign)
        for q, label, mult in coh:
            t = alpha.size - q
            if t not in terms:
                raise OracleMismatch(f"alpha={alpha} lands outside the resolution at t={t}")
            terms[t].extend([(label.sign, alpha)] * mult)
    return terms


def build_resolution(sp: SpaceParams, base_sign: int = 1) -> Resolution:
    """Resolution of ``j_* S`` for ``j: OGr(k, V) -> Gr(k, V)``.

    ``F_t`` collects ``S_{(-1)^s} (x) Sigma^{expand_vertical(nu, N-2k)} U^perp``
    over symmetric ``nu`` in the ``k x k`` square with
    ``|nu| + s = 2t``, ``s`` the diagonal length.  The terms are built both
    from that description and from the Kapranov-collection spectral
    sequence, and the two must agree.
    """
    if sp.N < 2 * sp.k + 2:
        raise ValueError(f"need N >= 2k + 2, got N = {sp.N}, k = {sp.k}")
    if base_sign not in (1, -1):
        raise ValueError("base_sign must be +1 or -1")
    direct = _direct_terms(sp, base_sign)
    spectral = _spectral_terms(sp, base_sign)
    norm = lambda d: {t: sorted(v, key=lambda p: (p[1], p[0])) for t, v in d.items()}
    if norm(direct) != norm(spectral):
        raise OracleMismatch(f"resolution for N={sp.N}, k={sp.k}: direct and spectral terms differ")
    terms = tuple(ResolutionTerm(t, tuple(direct[t])) for t in sorted(direct))
    return Resolution(sp, base_sign, terms)


@dataclass(frozen=True)
class GeneratorSet:
    """Shapes on ``U^perp`` whose Schur functors generate a pushforward."""

    shapes: tuple[YoungDiagram, ...]
    branching: bool
    nus: tuple[YoungDiagram, ...] = ()


def head_tail_bound(k: int) -> list[YoungDiagram]:
    """Diagrams in the ``k x k`` square whose head is no bigger than their tail."""
    return [nu for nu in enumerate_diagrams(k, k) if nu.head.size <= nu.tail.size]


def branching_support(sp: SpaceParams) -> list[YoungDiagram]:
    """Diagrams ``nu`` whose Kapranov term may occur at a branching point.

    For every ``beta`` in the ``(N-k) x k`` box, push ``Sigma^beta U`` down
    to ``OGr(k, V_P)`` (``dim V_P = N - 1``), branch to ``GL(k)`` and test
    each piece against the spinor-bundle vanishing criterion.  A ``beta``
    with some nonvanishing piece is ``expand_horizontal(nu', N-2k)`` and
    contributes ``nu = nu'^T``.
    """
    k = sp.k
    reduced = SpaceParams(sp.N - 1, k)
    gap = sp.N - 2 * k
    found = set()
    for beta in enumerate_diagrams(sp.N - k, k):
        pushed = pushforward_p2(beta, k)
        if pushed is None:
            continue
        (beta_prime, _), = pushed
        if any(schur_spinor_generic(reduced, gamma) for gamma, _ in cauchy_one_plus(beta_prime, k)):
            s = beta.diag_length
            rows = beta.rows
            nu_prime = YoungDiagram(tuple(r - gap for r in rows[:s]) + rows[s:])
            if not nu_prime.fits_in(k, k) or expand_vertical(transpose(nu_prime), gap) != transpose(beta):
                raise OracleMismatch(f"beta={beta} survives but is not a horizontal expansion")
            found.add(transpose(nu_prime))
    return sorted(found)


def spinor_subcat_generators(sp: SpaceParams, branching: bool) -> GeneratorSet:
    """Generators of the subcategory containing the spinor pushforward at a point.

    Non-branching points use the resolution shapes.  Branching points replay
    the pushforward computation (:func:`branching_support`), check it lies
    inside the head/tail bound, and return the full bound, which is what the
    vanishing arguments consume.
    """
    if sp.odd:
        raise ValueError("generator sets are defined for even N")
    k, gap = sp.k, sp.N - 2 * sp.k
    if not branching:
        if sp.N < 2 * k + 2:
            raise ValueError(f"need N >= 2k + 2, got N = {sp.N}, k = {k}")
        nus = enumerate_diagrams(k, k, symmetric_only=True)
    else:
        if sp.N < 2 * k + 3:
            raise ValueError(f"need N >= 2k + 3 at a branching point, got N = {sp.N}, k = {k}")
        bound = head_tail_bound(k)
        support = branching_support(sp)
        extra = set(support) - set(bound)
        if extra:
            raise OracleMismatch(f"branching support exceeds the head/tail bound: {sorted(extra)}")
        nus = bound
    return GeneratorSet(tuple(expand_vertical(nu, gap) for nu in nus), branching, tuple(nus))


# Weights on U^perp (rank r) of the classical functors used to present the
# small resolutions; V/U is the dual of U^perp.
_CLASSICAL_FUNCTORS = {
    "O": lambda r: (0,) * r,
    "U^perp": lambda r: (1,) + (0,) * (r - 1),
    "Lambda2 U^perp": lambda r: (1, 1) + (0,) * (r - 2),
    "Sym2 U^perp": lambda r: (2,) + (0,) * (r - 1),
    "ad U^perp": lambda r: (1,) + (0,) * (r - 2) + (-1,),
    "V/U": lambda r: (0,) * (r - 1) + (-1,),
    "Lambda2 V/U": lambda r: (0,) * (r - 2) + (-1, -1),
    "Sym2 V/U": lambda r: (0,) * (r - 1) + (-2,),
}


def classical_term(functor: str, twist: int, N: int, k: int) -> YoungDiagram:
    """Normal form of ``functor (x) O(twist)`` as a diagram on ``U^perp``.

    Uses ``det U^perp = O(-1)``: twisting by ``O(d)`` subtracts ``d`` from
    every row.  Raises if the result is not a polynomial functor.
    """
    r = N - k
    weight = [w - twist for w in _CLASSICAL_FUNCTORS[functor](r)]
    if any(w < 0 for w in weight):
        raise ValueError(f"{functor} (x) O({twist}) is not polynomial in U^perp")
    return YoungDiagram(weight)


# Small resolutions in classical notation: t -> [(relative sign, functor, twist)].
CLASSICAL_RESOLUTIONS = {
    1: {0: [(1, "O", 0)], 1: [(-1, "O", -1)]},
    2: {
        0: [(1, "O", 0)],
        1: [(-1, "V/U", -1)],
        2: [(-1, "U^perp", -1)],
        3: [(1, "O", -2)],
    },
    3: {
        0: [(1, "O", 0)],
        1: [(-1, "Lambda2 V/U", -1)],
        2: [(-1, "ad U^perp", -1)],
        3: [(-1, "Sym2 U^perp", -1), (1, "Sym2 V/U", -2)],
        4: [(1, "ad U^perp", -2)],
        5: [(1, "Lambda2 U^perp", -2)],
        6: [(-1, "O", -3)],
    },
}


def classical_resolution(sp: SpaceParams, base_sign: int = 1) -> dict[int, list[tuple[int, YoungDiagram]]]:
    """The tabulated small resolution (``k <= 3``) normalized to ``U^perp`` shapes."""
    table = CLASSICAL_RESOLUTIONS[sp.k]
    return {
        t: sorted(
            ((_sign(sp, base_sign * rel), classical_term(f, d, sp.N, sp.k)) for rel, f, d in entries),
            key=lambda p: (p[1], -p[0]),
        )
        for t, entries in table.items()
    }
