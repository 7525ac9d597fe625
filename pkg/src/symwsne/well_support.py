"""Small-support profiles that nearly well support an equilibrium value.

The search space is every ordered pair ``(I, J)`` of size-``kappa``
multisets over the pure strategies, ordered lexicographically with ``I``
outer and ``J`` inner; multisets themselves are ordered by their count
vectors, ascending. :func:`search_ws` returns the first pair in that
order whose uniform strategies satisfy the well-support inequalities.

Internally the scan runs on an integer-scaled copy of the game and
skips whole blocks of ``J`` that provably contain no solution. The
first hit and its global position are exactly those of a naive scan;
only the amount of work differs.
"""
from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import mpmath

from .exceptions import BudgetExceededError, DimensionError
from .game import BimatrixGame, MixedStrategy, StrategyProfile, as_fraction, well_supports

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8
# Number of I multisets handed to a worker at a time.
CHUNK_SIZE = 32


def kappa(delta) -> int:
    """Support size ``ceil(2 ln(1/delta) / delta^2)``.

    Evaluated with interval arithmetic, doubling the working precision
    until the enclosing interval contains no integer. For rational
    ``delta`` in (0, 1) the value is never an integer (``ln`` of a
    rational other than 1 is irrational), but an interval that collapses
    onto an integer ``m`` is still answered with ``m``.
    """
    delta = as_fraction(delta)
    if not 0 < delta < 1:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    iv = mpmath.iv
    prec = 64
    while prec <= 1 << 16:
        with mpmath.workprec(prec):
            d = iv.mpf(delta.numerator) / delta.denominator
            val = 2 * iv.log(1 / d) / (d * d)
            lo, hi = val.a, val.b
            clo, chi = int(mpmath.ceil(lo)), int(mpmath.ceil(hi))
            if clo == chi:
                return clo
            if lo == hi and lo == int(lo):
                return int(lo)
        prec *= 2
    raise ArithmeticError(f"could not certify kappa({delta})")


@dataclass(frozen=True)
class Multiset:
    """Multiset over ``0..n-1`` stored as a count vector."""

    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in counts):
            raise ValueError("negative multiplicity")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def of(cls, n: int, elements: Sequence[int]) -> "Multiset":
        counts = [0] * n
        for e in elements:
            counts[e] += 1
        return cls(tuple(counts))

    @property
    def size(self) -> int:
        return sum(self.counts)

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.counts) if c > 0)


@dataclass(frozen=True)
class WsParams:
    v: Fraction
    u: Fraction
    delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "v", as_fraction(self.v))
        object.__setattr__(self, "u", as_fraction(self.u))
        object.__setattr__(self, "delta", as_fraction(self.delta))
        if not 0 < self.delta < 1:
            raise ValueError(f"delta must lie in (0, 1), got {self.delta}")

    @property
    def kappa(self) -> int:
        return kappa(self.delta)


def strategy_from_multiset(ms: Multiset) -> MixedStrategy:
    k = ms.size
    if k < 1:
        raise ValueError("cannot build a strategy from an empty multiset")
    return MixedStrategy(tuple(Fraction(c, k) for c in ms.counts))


# -- enumeration ------------------------------------------------------------

def count_multisets(n: int, k: int) -> int:
    """Number of size-``k`` multisets over ``n`` elements."""
    if n < 1 or k < 0:
        return 0
    return math.comb(n + k - 1, k)


def multiset_rank(counts: Sequence[int]) -> int:
    """Position of ``counts`` among all vectors of its length and sum."""
    n = len(counts)
    r = sum(counts)
    rank = 0
    for m in range(n - 1):
        rest = n - m - 1
        # Vectors sharing the prefix but with a smaller entry at m.
        for smaller in range(counts[m]):
            rank += count_multisets(rest, r - smaller)
        r -= counts[m]
    return rank


def multiset_unrank(n: int, k: int, rank: int) -> tuple[int, ...]:
    total = count_multisets(n, k)
    if not 0 <= rank < total:
        raise IndexError(f"rank {rank} outside [0, {total})")
    counts = []
    r = k
    for m in range(n - 1):
        rest = n - m - 1
        c = 0
        while True:
            block = count_multisets(rest, r - c)
            if rank < block:
                break
            rank -= block
            c += 1
        counts.append(c)
        r -= c
    counts.append(r)
    return tuple(counts)


def _next_counts(counts: list[int]) -> bool:
    """Advance ``counts`` in place to its lexicographic successor."""
    n = len(counts)
    j = n - 1
    while j >= 1 and counts[j] == 0:
        j -= 1
    if j == 0:
        return False
    tail = counts[j]
    counts[j] = 0
    counts[j - 1] += 1
    counts[n - 1] = tail - 1
    return True


def enumerate_multisets(n: int, k: int, start: int = 0) -> Iterator[Multiset]:
    """Yield every size-``k`` multiset over ``n`` elements in lex order.

    ``start`` resumes from that rank, which lets callers partition the
    sequence into contiguous blocks.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if start >= count_multisets(n, k):
        return
    counts = list(multiset_unrank(n, k, start))
    while True:
        yield Multiset(tuple(counts))
        if not _next_counts(counts):
            return


# -- single pair --------------------------------------------------------------

def check_ws(game: BimatrixGame, params: WsParams, I: Multiset, J: Multiset):
    """Decide the well-support system for one pair of multisets.

    The system's equalities pin ``x`` and ``y`` completely, so deciding
    it means evaluating the inequalities. Returns the profile on success
    and ``None`` otherwise.
    """
    k = params.kappa
    if I.size != k or J.size != k:
        raise ValueError(f"multisets must have size kappa={k}")
    if len(I.counts) != game.n or len(J.counts) != game.n:
        raise DimensionError("multiset length differs from game dimension")
    tv = params.v - params.delta
    tu = params.u - params.delta
    x = strategy_from_multiset(I)
    y = strategy_from_multiset(J)
    for i in I.elements:
        if sum(r * p for r, p in zip(game.R[i], y.weights)) < tv:
            return None
    for j in J.elements:
        if sum(game.C[i][j] * p for i, p in enumerate(x.weights)) < tu:
            return None
    profile = StrategyProfile(x, y)
    assert well_supports(game, profile, tv, tu)
    return profile


# -- pair search ----------------------------------------------------------------

@dataclass(frozen=True)
class SearchStats:
    """Bookkeeping for one :func:`search_ws` run.

    ``pairs_examined`` is the number of pairs a naive lexicographic scan
    looks at up to and including the answer (all of them on
    exhaustion). ``work`` counts the search nodes actually visited and
    is what the budget limits.
    """

    pairs_examined: int
    pairs_total: int
    work: int
    kappa: int

    @property
    def exhausted(self) -> bool:
        return self.pairs_examined == self.pairs_total


@dataclass(frozen=True)
class WsSearchResult:
    profile: StrategyProfile | None
    I: Multiset | None
    J: Multiset | None
    stats: SearchStats

    @property
    def found(self) -> bool:
        return self.profile is not None


class _Scaled:
    """Integer image of a game and thresholds for the inner loop.

    With ``D`` the common denominator of all payoffs and thresholds
    ``p/q``, the test ``R[i] . y >= p/q`` on a ``k``-uniform ``y`` with
    counts ``b`` becomes ``q * sum(Rint[i][j] * b[j]) >= p * D * k``.
    """

    def __init__(self, game: BimatrixGame, params: WsParams):
        k = params.kappa
        D = 1
        for e in game.entries():
            D = math.lcm(D, e.denominator)
        self.n = game.n
        self.k = k
        self.R = [[int(e * D) for e in row] for row in game.R]
        self.Ccols = [[int(game.C[i][j] * D) for i in range(game.n)] for j in range(game.n)]
        tv = params.v - params.delta
        tu = params.u - params.delta
        self.qv, self.Tv = tv.denominator, tv.numerator * D * k
        self.qu, self.Tu = tu.denominator, tu.numerator * D * k

    def state(self):
        return (self.n, self.k, self.R, self.Ccols, self.qv, self.Tv, self.qu, self.Tu)


class _Engine:
    def __init__(self, state, budget):
        self.n, self.k, self.R, self.Ccols, self.qv, self.Tv, self.qu, self.Tu = state
        self.budget = budget
        self.work = 0

    def scan(self, start: int, stop: int):
        """Scan I ranks ``[start, stop)``; return ``(I, J)`` or ``None``."""
        n, k = self.n, self.k
        counts = list(multiset_unrank(n, k, start))
        for _ in range(start, stop):
            J = self.first_j(counts)
            if J is not None:
                return tuple(counts), J
            if not _next_counts(counts):
                break
        return None

    def first_j(self, a: list[int]):
        """Lexicographically first J that works with I = ``a``, or None."""
        n = self.n
        self._tick()
        allowed = [
            self.qu * sum(ai * c for ai, c in zip(a, col) if ai) >= self.Tu
            for col in self.Ccols
        ]
        if not any(allowed):
            return None
        rows = [self.R[i] for i in range(n) if a[i]]
        # suffix_max[m][t]: best payoff for row t over allowed columns >= m.
        suffix_max = [None] * (n + 1)
        best = [None] * len(rows)
        for m in range(n - 1, -1, -1):
            if allowed[m]:
                best = [
                    row[m] if b is None or row[m] > b else b
                    for row, b in zip(rows, best)
                ]
            suffix_max[m] = best
        b = [0] * n
        if self._dfs(0, self.k, [0] * len(rows), rows, allowed, suffix_max, b):
            return tuple(b)
        return None

    def _dfs(self, m, r, sums, rows, allowed, suffix_max, b):
        self._tick()
        qv, Tv = self.qv, self.Tv
        if r == 0:
            if all(qv * s >= Tv for s in sums):
                b[m:] = [0] * (self.n - m)
                return True
            return False
        bound = suffix_max[m]
        if bound[0] is None:
            return False
        for s, mx in zip(sums, bound):
            if qv * (s + r * mx) < Tv:
                return False
        if m == self.n - 1:
            # All remaining mass sits on the last column, which the bound
            # above already certified.
            b[m] = r
            return True
        top = r if allowed[m] else 0
        for c in range(top + 1):
            b[m] = c
            new_sums = [s + c * row[m] for s, row in zip(sums, rows)] if c else sums
            if self._dfs(m + 1, r - c, new_sums, rows, allowed, suffix_max, b):
                return True
        b[m] = 0
        return False

    def _tick(self):
        self.work += 1
        if self.work > self.budget:
            raise BudgetExceededError(
                f"search budget of {self.budget} work units exhausted", self.work
            )


def _scan_chunk(state, start, stop, budget):
    engine = _Engine(state, budget)
    try:
        hit = engine.scan(start, stop)
    except BudgetExceededError:
        return None, engine.work, True
    return hit, engine.work, False


def _chunks(total, size):
    start = 0
    while start < total:
        yield start, min(start + size, total)
        start += size


def search_ws(
    game: BimatrixGame,
    params: WsParams,
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> WsSearchResult:
    """Find the first pair of size-``kappa`` multisets in lex order whose
    strategies well support ``(v - delta, u - delta)``.

    With ``jobs > 1`` consecutive blocks of ``I`` ranks are scanned in
    worker processes; blocks are merged in order, so the answer, the
    reported statistics and any budget abort are independent of
    ``jobs``.

    Raises
    ------
    BudgetExceededError
        When more than ``budget`` search nodes would be visited before
        the answer is known.
    """
    scaled = _Scaled(game, params)
    n, k = scaled.n, scaled.k
    M = count_multisets(n, k)
    state = scaled.state()
    chunks = _chunks(M, CHUNK_SIZE)

    spent = 0
    hit = None
    over = False
    if jobs <= 1:
        for start, stop in chunks:
            hit, work, over = _scan_chunk(state, start, stop, budget - spent)
            spent += work
            if over:
                break
            if hit is not None:
                break
    else:
        hit, spent, over = _parallel_scan(state, chunks, budget, jobs)
    if over or spent > budget:
        raise BudgetExceededError(
            f"search budget of {budget} work units exhausted", min(spent, budget + 1)
        )

    if hit is None:
        stats = SearchStats(M * M, M * M, spent, k)
        logger.debug("no pair found among %d", M * M)
        return WsSearchResult(None, None, None, stats)

    I, J = Multiset(hit[0]), Multiset(hit[1])
    profile = check_ws(game, params, I, J)
    if profile is None:
        raise AssertionError("integer scan and exact check disagree")
    index = multiset_rank(I.counts) * M + multiset_rank(J.counts)
    return WsSearchResult(profile, I, J, SearchStats(index + 1, M * M, spent, k))


def _parallel_scan(state, chunks, budget, jobs):
    spent = 0
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending = []
        chunks = iter(chunks)

        def refill():
            while len(pending) < 2 * jobs:
                nxt = next(chunks, None)
                if nxt is None:
                    return
                pending.append(pool.submit(_scan_chunk, state, nxt[0], nxt[1], budget))

        refill()
        while pending:
            fut = pending.pop(0)
            hit, work, over = fut.result()
            spent += work
            if over or spent > budget:
                for f in pending:
                    f.cancel()
                return None, spent, True
            if hit is not None:
                for f in pending:
                    f.cancel()
                return hit, spent, False
            refill()
    return None, spent, False
