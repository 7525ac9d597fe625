"""Plain-text game and profile files, plus seeded random games.

Game file::

    # comment lines start with '#'
    symmetric 2        (or: bimatrix 2)
    1 0
    0 1
                       (bimatrix files continue with n rows of C)

Entries are integers, finite decimals or ``p/q``. Profile files hold two
lines of ``n`` entries: the row strategy, then the column strategy.
"""
from __future__ import annotations

import re
from fractions import Fraction

import numpy as np

from .exceptions import GameFormatError
from .game import BimatrixGame, MixedStrategy, StrategyProfile, is_symmetric

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?|[+-]?(\d+\.\d*|\.\d+)")
# Longest token accepted; guards against absurd bignum inputs.
MAX_TOKEN = 4096


def _lines(text):
    """Yield ``(lineno, [(col, token), ...])`` for content lines."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", line)]
        yield lineno, tokens


def _parse_rational(token, line, col) -> Fraction:
    if len(token) > MAX_TOKEN:
        raise GameFormatError(f"entry longer than {MAX_TOKEN} characters", line, col)
    if not _RATIONAL.fullmatch(token):
        raise GameFormatError(f"malformed rational {token!r}", line, col)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise GameFormatError(f"zero denominator in {token!r}", line, col) from None


def _parse_rows(lines, n, what, last_line):
    rows = []
    for _ in range(n):
        item = next(lines, None)
        if item is None:
            raise GameFormatError(f"expected {n} rows for {what}, got {len(rows)}", last_line)
        lineno, tokens = item
        if len(tokens) != n:
            raise GameFormatError(
                f"expected {n} entries in {what} row, got {len(tokens)}", lineno
            )
        rows.append(tuple(_parse_rational(tok, lineno, col) for col, tok in tokens))
        last_line = lineno
    return rows, last_line


def parse_game(text: str) -> BimatrixGame:
    lines = _lines(text)
    header = next(lines, None)
    if header is None:
        raise GameFormatError("empty game file")
    lineno, tokens = header
    words = [t for _, t in tokens]
    if len(words) != 2 or words[0] not in ("symmetric", "bimatrix"):
        raise GameFormatError("header must be 'symmetric N' or 'bimatrix N'", lineno, 1)
    kind = words[0]
    try:
        n = int(words[1])
    except ValueError:
        raise GameFormatError(f"bad dimension {words[1]!r}", lineno, tokens[1][0]) from None
    if n < 1:
        raise GameFormatError("dimension must be positive", lineno, tokens[1][0])
    R, last = _parse_rows(lines, n, "R", lineno)
    if kind == "symmetric":
        C = [tuple(col) for col in zip(*R)]
    else:
        C, last = _parse_rows(lines, n, "C", last)
    extra = next(lines, None)
    if extra is not None:
        raise GameFormatError("unexpected content after the matrices", extra[0])
    return BimatrixGame(tuple(R), tuple(C))


def format_rational(q: Fraction) -> str:
    return str(q)


def render_game(game: BimatrixGame, symmetric: bool | None = None) -> str:
    if symmetric is None:
        symmetric = is_symmetric(game)
    out = [f"{'symmetric' if symmetric else 'bimatrix'} {game.n}"]
    mats = (game.R,) if symmetric else (game.R, game.C)
    for M in mats:
        out.extend(" ".join(format_rational(e) for e in row) for row in M)
    return "\n".join(out) + "\n"


def parse_profile(text: str, n: int | None = None) -> StrategyProfile:
    rows = []
    for lineno, tokens in _lines(text):
        rows.append((lineno, [_parse_rational(t, lineno, c) for c, t in tokens]))
    if len(rows) != 2:
        raise GameFormatError(f"profile needs 2 lines, got {len(rows)}")
    strategies = []
    for lineno, w in rows:
        if n is not None and len(w) != n:
            raise GameFormatError(f"expected {n} entries, got {len(w)}", lineno)
        try:
            strategies.append(MixedStrategy(tuple(w)))
        except ValueError as exc:
            raise GameFormatError(str(exc), lineno) from None
    if strategies[0].n != strategies[1].n:
        raise GameFormatError("row and column strategies differ in length")
    return StrategyProfile(*strategies)


def render_profile(profile: StrategyProfile) -> str:
    return "".join(
        " ".join(format_rational(p) for p in s.weights) + "\n"
        for s in (profile.row, profile.col)
    )


def generate_game(kind: str, n: int, seed: int, symmetric: bool = False) -> BimatrixGame:
    """Seeded random game.

    ``uniform`` entries are ``k/1000`` with ``k`` uniform on 0..1000;
    ``win-lose`` entries are 0 or 1. Uses numpy's PCG64 seeded with
    ``seed``; ``R`` is drawn first, then ``C`` unless ``symmetric``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)

    def draw():
        if kind == "uniform":
            return [[Fraction(int(k), 1000) for k in row] for row in rng.integers(0, 1001, (n, n))]
        if kind == "win-lose":
            return [[Fraction(int(k)) for k in row] for row in rng.integers(0, 2, (n, n))]
        raise ValueError(f"unknown game kind {kind!r}")

    R = draw()
    if symmetric:
        return BimatrixGame.symmetric(R)
    return BimatrixGame(R, draw())
