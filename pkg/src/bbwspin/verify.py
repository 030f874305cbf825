"""Mechanical checks of the vanishing and Ext computations.

Each ``sweep_*`` function runs one family of checks for a single ``(N, k)``
and returns a :class:`SweepResult` listing counterexamples; nothing is
assumed without being computed.  :func:`bondal_orlov_report` assembles the
four cases of the full-faithfulness criterion for a curve of genus ``g``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from .bbw import (
    GradedRepList,
    SpaceParams,
    cohomology_gr,
    cohomology_ogr_hom_spinors,
    dual_spinor_relabel,
    hom_spinors_closed_form,
    schur_spinor_closed_form,
    schur_spinor_generic,
)
from .diagrams import YoungDiagram, enumerate_diagrams, expand_vertical
from .resolution import build_resolution, classical_resolution, spinor_subcat_generators
from .tensor import cauchy_one_plus, lr_product, pushforward_p2, wedge_sym2
from .weyl import RepLabel

DETERMINATE = "determinate"
INDETERMINATE = "indeterminate"

POINT_TYPES = ("nonbranching", "branching")


class CheckFailed(AssertionError):
    """A computed answer contradicts the statement being checked."""


@dataclass(frozen=True)
class ExtTable:
    """Graded dimension of an Ext group, with the per-``m`` Koszul inputs.

    ``total`` is empty and ``status`` is ``"indeterminate"`` when the inputs
    leave room for a nonzero differential.
    """

    total: tuple[tuple[int, int], ...] = ()
    per_m: tuple[GradedRepList, ...] = ()
    status: str = DETERMINATE

    def as_dict(self) -> dict[int, int]:
        return dict(self.total)


def _hypotheses_hold(mu: YoungDiagram, nu: YoungDiagram) -> bool:
    if mu.diag_length != nu.diag_length:
        return True
    return mu.head.size + nu.head.size <= mu.tail.size + nu.tail.size


@lru_cache(maxsize=None)
def _pair_nonvanishing(N: int, k: int, mu: YoungDiagram, nu: YoungDiagram) -> tuple:
    gap = N - 2 * k
    product = lr_product(expand_vertical(mu, gap), expand_vertical(nu, gap), N - k)
    bad = []
    for gamma, mult in product:
        coh = cohomology_gr(N, k, gamma, -1)
        if coh:
            bad.append((gamma, mult, coh))
    return tuple(bad)


def check_vanishing_pair(sp: SpaceParams, mu: YoungDiagram, nu: YoungDiagram, strict: bool = True) -> bool:
    """Whether ``Sigma^mu^ U^perp (x) Sigma^nu^ U^perp (x) O(-1)`` is acyclic on ``Gr(k, V)``.

    ``mu^`` and ``nu^`` are the vertical ``(N - 2k)``-expansions.  The
    tensor product is split by Littlewood-Richardson and every summand run
    through Borel-Bott-Weil.  With ``strict`` a nonvanishing result for a pair
    satisfying the diagonal/head/tail hypotheses raises
    :class:`CheckFailed`.
    """
    if sp.N < 2 * sp.k + 2:
        raise ValueError(f"need N >= 2k + 2, got N = {sp.N}, k = {sp.k}")
    for d in (mu, nu):
        if not d.fits_in(sp.k, sp.k):
            raise ValueError(f"{d} is not inside the {sp.k} x {sp.k} square")
    a, b = sorted((mu, nu))
    bad = _pair_nonvanishing(sp.N, sp.k, a, b)
    if bad and strict and _hypotheses_hold(mu, nu):
        gamma, _, coh = bad[0]
        raise CheckFailed(
            f"N={sp.N} k={sp.k} mu={mu} nu={nu}: summand {gamma} has cohomology {coh.entries}"
        )
    return not bad


def check_corollary_vanishing(sp: SpaceParams, type1: str, type2: str) -> bool:
    """Vanishing for spinor pushforwards at two distinct points of the given types.

    The dual on the first factor is traded for a spinor sheaf twisted by
    ``O(-1)``; the shapes then come from the generator sets of both points.
    """
    for t in (type1, type2):
        if t not in POINT_TYPES:
            raise ValueError(f"point type must be one of {POINT_TYPES}, got {t!r}")
    if sp.odd or sp.N < 2 * sp.k + 2:
        raise ValueError(f"need even N >= 2k + 2, got N = {sp.N}, k = {sp.k}")
    _, twist = dual_spinor_relabel(sp, 1, branching=type1 == "branching")
    assert twist == -1
    g1 = spinor_subcat_generators(sp, type1 == "branching")
    g2 = spinor_subcat_generators(sp, type2 == "branching")
    return all(check_vanishing_pair(sp, mu, nu, strict=False) for mu in g1.nus for nu in g2.nus)


def _koszul_positions(per_m) -> dict[tuple[int, int], int]:
    pos: dict = defaultdict(int)
    for m, table in enumerate(per_m):
        for q, _, mult in table:
            pos[(m, q)] += mult
    return pos


def assemble_koszul(per_m_tables) -> ExtTable:
    """Total Ext from the Koszul terms: degree ``q`` of term ``m`` lands in ``q - m``.

    A differential ``d_r`` would connect ``(m, q)`` to ``(m - r, q - r + 1)``
    for some ``r >= 1``; if any such pair of nonzero entries exists the total
    is not determined and the table is flagged indeterminate.
    """
    per_m = tuple(per_m_tables)
    pos = _koszul_positions(per_m)
    for (m, q) in pos:
        for r in range(1, m + 1):
            if (m - r, q - r + 1) in pos:
                return ExtTable((), per_m, INDETERMINATE)
    total: dict = defaultdict(int)
    for (m, q), mult in pos.items():
        total[q - m] += mult
    return ExtTable(tuple(sorted(total.items())), per_m, DETERMINATE)


def _expected_same_point(equal_signs: bool, m: int) -> GradedRepList:
    if equal_signs and m in (0, 1):
        return GradedRepList(((2 * m, RepLabel.trivial(), 1),))
    return GradedRepList()


def ext_same_point_D(sp: SpaceParams, s1: int, s2: int) -> ExtTable:
    """``Ext(S_{s1}, S_{s2} (x) Lambda^m Sym^2 U)`` on ``OGr(k, 2n)``, for all ``m``.

    Each ``Lambda^m Sym^2 U`` is split into Schur functors and every piece
    computed by Borel-Bott-Weil.  Raises :class:`CheckFailed` unless the
    terms are ``k``, ``k[-2]`` for ``m = 0, 1`` with equal signs and zero
    otherwise.
    """
    if sp.odd:
        raise ValueError("type D needs even N")
    if sp.k > sp.n - 2:
        raise ValueError(f"need k <= n - 2, got n = {sp.n}, k = {sp.k}")
    per_m = []
    for m in range(sp.k * (sp.k + 1) // 2 + 1):
        table = GradedRepList.concat(
            cohomology_ogr_hom_spinors(sp, beta, s1, s2) for beta, _ in wedge_sym2(m, sp.k)
        )
        if table != _expected_same_point(s1 == s2, m):
            raise CheckFailed(f"N={sp.N} k={sp.k} signs=({s1},{s2}) m={m}: got {table.entries}")
        per_m.append(table)
    return assemble_koszul(per_m)


def ext_same_point_B(sp_reduced: SpaceParams) -> ExtTable:
    """``Ext(S, S (x) p_2*(Lambda^m Sym^2 U_k))`` on ``OGr(k, V_P)`` with ``dim V_P`` odd.

    Each summand of ``Lambda^m Sym^2 U_k`` is pushed forward, branched from
    ``O + U'`` to ``U'``, and computed by Borel-Bott-Weil; the pushforward
    degree is added to the cohomological degree.
    """
    sp = sp_reduced
    if not sp.odd:
        raise ValueError("the reduced space must have odd dimension")
    if sp.N < 2 * sp.k + 3:
        raise ValueError(f"need N' >= 2k + 3, got N' = {sp.N}, k = {sp.k}")
    per_m = []
    for m in range(sp.k * (sp.k + 1) // 2 + 1):
        parts = []
        for beta, _ in wedge_sym2(m, sp.k):
            pushed = pushforward_p2(beta, sp.k)
            if pushed is None:
                continue
            (beta_prime, _), = pushed
            for gamma, mult in cauchy_one_plus(beta_prime, sp.k):
                coh = cohomology_ogr_hom_spinors(sp, gamma)
                parts.extend(GradedRepList([(d, lab, c * mult) for d, lab, c in coh]).shifted(pushed.shift).entries)
        table = GradedRepList(tuple(parts))
        if table != _expected_same_point(True, m):
            raise CheckFailed(f"N'={sp.N} k={sp.k} m={m}: got {table.entries}")
        per_m.append(table)
    return assemble_koszul(per_m)


# ---------------------------------------------------------------- sweeps


@dataclass
class SweepResult:
    check: str
    N: int
    k: int
    checked: int = 0
    counterexamples: list[str] = field(default_factory=list)
    indeterminate: list[str] = field(default_factory=list)
    skipped: Optional[str] = None

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.indeterminate

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "N": self.N,
            "k": self.k,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "indeterminate": self.indeterminate,
            "skipped": self.skipped,
        }


def _fmt(entries: GradedRepList) -> str:
    return "[" + ", ".join(f"H^{d}={lab} x{m}" for d, lab, m in entries) + "]"


def sweep_cohomology_ualpha(N: int, k: int) -> SweepResult:
    res = SweepResult("cohomology-ualpha", N, k)
    if N < 2 * k + 2:
        res.skipped = "needs N >= 2k + 2"
        return res
    sp = SpaceParams(N, k)
    for beta in enumerate_diagrams(N - k, k):
        for sign in ((1,) if sp.odd else (1, -1)):
            res.checked += 1
            generic = schur_spinor_generic(sp, beta, sign)
            closed = schur_spinor_closed_form(sp, beta, sign)
            if generic != closed:
                res.counterexamples.append(
                    f"beta={beta} sign={sign}: generic {_fmt(generic)} closed {_fmt(closed)}"
                )
    return res


def sweep_wt(N: int, k: int) -> SweepResult:
    res = SweepResult("wt", N, k)
    if N < 2 * k + 3:
        res.skipped = "needs N >= 2k + 3"
        return res
    sp = SpaceParams(N, k)
    for beta in enumerate_diagrams(k + 1, k):
        if beta.width > beta.height + 1:
            continue
        for s1 in (1, -1):
            for s2 in (1, -1):
                res.checked += 1
                got = cohomology_ogr_hom_spinors(sp, beta, s1, s2)
                want = hom_spinors_closed_form(sp, beta, s1, s2)
                if got != want:
                    res.counterexamples.append(
                        f"beta={beta} signs=({s1},{s2}): got {_fmt(got)} expected {_fmt(want)}"
                    )
    return res


def sweep_vanishing_terms(N: int, k: int) -> SweepResult:
    res = SweepResult("vanishing-terms", N, k)
    if N < 2 * k + 2:
        res.skipped = "needs N >= 2k + 2"
        return res
    sp = SpaceParams(N, k)
    square = enumerate_diagrams(k, k)
    for mu in square:
        for nu in square:
            if not _hypotheses_hold(mu, nu):
                continue
            res.checked += 1
            if not check_vanishing_pair(sp, mu, nu, strict=False):
                gamma, _, coh = _pair_nonvanishing(N, k, *sorted((mu, nu)))[0]
                res.counterexamples.append(f"mu={mu} nu={nu}: summand {gamma} gives {_fmt(coh)}")
    return res


def sweep_cross_point(N: int, k: int) -> SweepResult:
    res = SweepResult("corollary-vanishing", N, k)
    if N % 2 or N < 2 * k + 4:
        res.skipped = "needs even N >= 2k + 4"
        return res
    sp = SpaceParams(N, k)
    for t1 in POINT_TYPES:
        for t2 in POINT_TYPES:
            res.checked += 1
            if not check_corollary_vanishing(sp, t1, t2):
                res.counterexamples.append(f"points ({t1}, {t2}) do not vanish")
    return res


def _run_ext(res: SweepResult, label: str, fn: Callable[[], ExtTable], expected: dict) -> None:
    res.checked += 1
    try:
        table = fn()
    except CheckFailed as exc:
        res.counterexamples.append(f"{label}: {exc}")
        return
    if table.status != DETERMINATE:
        res.indeterminate.append(label)
    elif table.as_dict() != expected:
        res.counterexamples.append(f"{label}: assembled {table.as_dict()} expected {expected}")


def sweep_same_p_D(N: int, k: int) -> SweepResult:
    res = SweepResult("same-p-D", N, k)
    if N % 2 or k > N // 2 - 2:
        res.skipped = "needs even N = 2n and k <= n - 2"
        return res
    sp = SpaceParams(N, k)
    for s1 in (1, -1):
        for s2 in (1, -1):
            expected = {0: 1, 1: 1} if s1 == s2 else {}
            _run_ext(res, f"signs=({s1},{s2})", lambda: ext_same_point_D(sp, s1, s2), expected)
    return res


def sweep_same_p_B(N: int, k: int) -> SweepResult:
    """``N`` is the ambient even dimension or the reduced odd one; even ``N`` uses ``N - 1``."""
    reduced = N if N % 2 else N - 1
    res = SweepResult("same-p-B", reduced, k)
    if reduced < 2 * k + 3:
        res.skipped = "needs N' >= 2k + 3"
        return res
    _run_ext(res, f"N'={reduced}", lambda: ext_same_point_B(SpaceParams(reduced, k)), {0: 1, 1: 1})
    return res


def sweep_resolution_example(N: int, k: int) -> SweepResult:
    res = SweepResult("resolution-example", N, k)
    if N < 2 * k + 2 or k > 3:
        res.skipped = "tabulated for k <= 3 and N >= 2k + 2"
        return res
    sp = SpaceParams(N, k)
    for sign in ((1,) if sp.odd else (1, -1)):
        res.checked += 1
        resolution = build_resolution(sp, sign)
        got = {term.t: list(term.summands) for term in resolution}
        want = classical_resolution(sp, sign)
        if got != want:
            res.counterexamples.append(f"sign={sign}: built {got} expected {want}")
        if resolution.euler_rank() != 0:
            res.counterexamples.append(f"sign={sign}: Euler rank {resolution.euler_rank()}")
    return res


SWEEPS: dict[str, Callable[[int, int], SweepResult]] = {
    "cohomology-ualpha": sweep_cohomology_ualpha,
    "wt": sweep_wt,
    "vanishing-terms": sweep_vanishing_terms,
    "corollary-vanishing": sweep_cross_point,
    "same-p-D": sweep_same_p_D,
    "same-p-B": sweep_same_p_B,
    "resolution-example": sweep_resolution_example,
}


def run_sweep_task(task: tuple[str, int, int]) -> SweepResult:
    check, N, k = task
    return SWEEPS[check](N, k)


# ---------------------------------------------------------------- report


CASES = ("different-fibers", "same-fiber-distinct", "same-point-nonbranching", "same-point-branching")


@dataclass
class CaseResult:
    table: ExtTable
    passed: bool
    detail: str = ""


@dataclass
class CriterionReport:
    genus: int
    k: int
    cases: dict[str, CaseResult]

    @property
    def verdict(self) -> str:
        if any(c.table.status != DETERMINATE for c in self.cases.values()):
            return "indeterminate"
        return "pass" if all(c.passed for c in self.cases.values()) else "fail"


def _same_point_ok(table: ExtTable) -> bool:
    d = table.as_dict()
    return (
        table.status == DETERMINATE
        and d.get(0, 0) == 1
        and all(0 <= deg <= 1 for deg, mult in d.items() if mult)
    )


def _guarded(fn: Callable[[], ExtTable]) -> tuple[ExtTable, str]:
    try:
        return fn(), ""
    except CheckFailed as exc:
        return ExtTable(), str(exc)


def bondal_orlov_report(g: int, k: int) -> CriterionReport:
    """Check every cohomological input of the criterion for ``X_k`` over a genus ``g`` curve.

    ``N = 2g + 2``.  Distinct points over different branch values need full
    vanishing for every pair of point types; distinct points in one fiber
    need vanishing between opposite half-spinors; a point needs ``Hom = k``
    and Ext in degrees ``0..1``, at non-branching (type D) and branching
    (type B on ``V_P``) points alike.
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    if not 1 <= k <= g - 1:
        raise ValueError(f"need 1 <= k <= g - 1, got g = {g}, k = {k}")
    sp = SpaceParams(2 * g + 2, k)
    cases: dict[str, CaseResult] = {}

    failures = [
        f"{t1}/{t2}"
        for t1 in POINT_TYPES
        for t2 in POINT_TYPES
        if not check_corollary_vanishing(sp, t1, t2)
    ]
    cases["different-fibers"] = CaseResult(ExtTable(), not failures, ", ".join(failures))

    table, err = _guarded(lambda: ext_same_point_D(sp, 1, -1))
    cases["same-fiber-distinct"] = CaseResult(
        table, not err and table.status == DETERMINATE and not table.total, err
    )

    table, err = _guarded(lambda: ext_same_point_D(sp, 1, 1))
    cases["same-point-nonbranching"] = CaseResult(table, not err and _same_point_ok(table), err)

    table, err = _guarded(lambda: ext_same_point_B(SpaceParams(sp.N - 1, k)))
    cases["same-point-branching"] = CaseResult(table, not err and _same_point_ok(table), err)
    return CriterionReport(g, k, cases)
