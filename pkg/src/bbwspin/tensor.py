"""Schur-functor tensor calculus.

Littlewood-Richardson products, the branching of a Schur functor of
``O + U`` to ``U``, the decomposition of ``Lambda^m(Sym^2 U)``, and the
relative Borel-Bott-Weil pushforward along ``Gr_B(k, O + U') -> B``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, Mapping, Optional

from . import kernels
from .diagrams import (
    YoungDiagram,
    enumerate_diagrams,
    expand_horizontal,
    expand_vertical,
)


@dataclass(frozen=True)
class SchurSum:
    """Formal sum of Schur functors with positive multiplicities.

    ``shift`` is a homological shift applied to the whole sum: a nonzero
    shift ``s`` means the sum sits in cohomological degree ``s``.
    """

    terms: Mapping[YoungDiagram, int] = field(default_factory=dict)
    shift: int = 0

    def __post_init__(self):
        clean = {d: m for d, m in self.terms.items() if m}
        if any(m < 0 for m in clean.values()):
            raise ValueError("multiplicities must be positive")
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def of(cls, diagrams: Iterable[YoungDiagram], shift: int = 0) -> "SchurSum":
        return cls(Counter(diagrams), shift)

    def __iter__(self) -> Iterator[tuple[YoungDiagram, int]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, d: YoungDiagram) -> int:
        return self.terms.get(d, 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurSum):
            return NotImplemented
        return self.shift == other.shift and self.terms == other.terms

    def __hash__(self):
        return hash((tuple(self.terms.items()), self.shift))

    def truncate(self, max_height: int) -> "SchurSum":
        return SchurSum({d: m for d, m in self.terms.items() if d.height <= max_height}, self.shift)

    def dimension(self, m: int) -> int:
        from .weyl import dim_schur

        return sum(mult * dim_schur(d, m) for d, mult in self.terms.items())


@lru_cache(maxsize=None)
def _lr_cached(mu: YoungDiagram, nu: YoungDiagram, max_rows: int) -> SchurSum:
    # LR coefficients are symmetric; the shorter content means fewer labels.
    if (nu.height, nu.size) > (mu.height, mu.size):
        mu, nu = nu, mu
    raw = kernels.lr_coefficients(mu.rows, nu.rows, max_rows)
    return SchurSum({YoungDiagram(k): v for k, v in raw.items()})


def lr_product(mu: YoungDiagram, nu: YoungDiagram, max_height: Optional[int] = None) -> SchurSum:
    """Decompose ``Sigma^mu (x) Sigma^nu``, dropping shapes taller than ``max_height``.

    Tableaux that would put a box below row ``max_height`` are pruned during
    enumeration; since boxes are never removed, this drops exactly the shapes
    the truncation would drop and leaves the other coefficients unchanged.
    """
    return _lr_cached(mu, nu, -1 if max_height is None else max_height)


def _horizontal_strips(shape: tuple[int, ...], a: int) -> Iterator[tuple[int, ...]]:
    rows = list(shape) + [0]
    n = len(rows)

    def rec(i: int, remaining: int, acc: list[int]):
        if i == n:
            if remaining == 0:
                yield tuple(acc)
            return
        cap = remaining if i == 0 else min(remaining, rows[i - 1] - rows[i])
        for c in range(cap + 1):
            yield from rec(i + 1, remaining - c, acc + [rows[i] + c])

    yield from rec(0, a, [])


def lr_product_pieri(mu: YoungDiagram, nu: YoungDiagram) -> SchurSum:
    """Independent route to ``lr_product``: Jacobi-Trudi plus Pieri.

    ``s_nu = det(h_{nu_i - i + j})``; each monomial in the ``h``'s is applied
    to ``s_mu`` by repeated Pieri steps and the signed results are summed.
    Exponential in the height of ``nu``, so only for checking.
    """
    ell = nu.height
    total: Counter = Counter()
    for perm in permutations(range(ell)):
        parts = [nu[i] - i + perm[i] for i in range(ell)]
        if any(p < 0 for p in parts):
            continue
        inversions = sum(1 for i in range(ell) for j in range(i + 1, ell) if perm[i] > perm[j])
        sign = -1 if inversions % 2 else 1
        current = Counter({mu.rows: 1})
        for a in parts:
            nxt: Counter = Counter()
            for shape, mult in current.items():
                for new in _horizontal_strips(shape, a):
                    nxt[YoungDiagram(new).rows] += mult
            current = nxt
        for shape, mult in current.items():
            total[YoungDiagram(shape)] += sign * mult
    if any(v < 0 for v in total.values()):
        raise AssertionError("Jacobi-Trudi expansion produced a negative coefficient")
    return SchurSum(total)


def cauchy_one_plus(beta_prime: YoungDiagram, k: int) -> SchurSum:
    """Restrict ``Sigma^beta'`` from ``GL(k+1)`` to ``GL(k)``: all interlacing shapes."""
    if beta_prime.height > k + 1:
        raise ValueError(f"{beta_prime} has more than k + 1 = {k + 1} rows")
    b = beta_prime.padded(k + 1)
    ranges = [range(b[i + 1], b[i] + 1) for i in range(k)]
    return SchurSum.of(YoungDiagram(g) for g in product(*ranges))


def wedge_sym2(m: int, k: int) -> SchurSum:
    """``Lambda^m(Sym^2 U)`` for ``U`` of rank ``k``.

    The summands are horizontal 1-expansions of the symmetric diagrams in the
    ``k x k`` square with ``|nu| + diag_length(nu) = 2m``, each once.
    """
    if not 0 <= m <= k * (k + 1) // 2:
        raise ValueError(f"m = {m} out of range for rank {k}")
    return SchurSum.of(
        expand_horizontal(nu, 1)
        for nu in enumerate_diagrams(k, k, symmetric_only=True, weight_target=2 * m)
    )


def horizontal_contraction(beta: YoungDiagram, p: int) -> Optional[YoungDiagram]:
    """The ``tau`` with ``expand_horizontal(tau, p) == beta``, or ``None``."""
    s = beta.diag_length
    rows = beta.rows
    if s and rows[s - 1] - p < s:
        return None
    tau = YoungDiagram(tuple(r - p for r in rows[:s]) + rows[s:])
    return tau if expand_horizontal(tau, p) == beta else None


def pushforward_p2(beta: YoungDiagram, k: int) -> Optional[SchurSum]:
    """Relative pushforward of ``Sigma^beta U_k`` from ``Gr_B(k, O + U')`` to ``B``.

    Nonzero only when ``beta`` is a horizontal 1-expansion of some ``tau``;
    then it is ``Sigma^{expand_vertical(tau, 1)}(O + U')`` in cohomological
    degree ``diag_length(tau)``, returned as a one-term ``SchurSum`` over
    ``GL(k+1)`` shapes with that ``shift``.  ``None`` means zero.
    """
    if beta.height > k:
        raise ValueError(f"{beta} has more than k = {k} rows")
    tau = horizontal_contraction(beta, 1)
    if tau is None:
        return None
    return SchurSum({expand_vertical(tau, 1): 1}, shift=tau.diag_length)
