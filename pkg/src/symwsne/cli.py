"""Command-line interface.

Results go to stdout as ``key=value`` lines with exact rationals;
diagnostics go to stderr. Exit codes: 0 success, 1 negative answer
(infeasible / not found / above epsilon), 2 usage or parse error,
3 search budget exhausted, 4 guarantee violated.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .algorithm import half_wsne
from .exceptions import (
    BudgetExceededError,
    GuaranteeViolatedError,
    NotSymmetricError,
    WsneError,
)
from .game import StrategyProfile, as_fraction, ensure_normalized, wsne_epsilon
from .io import generate_game, parse_game, parse_profile, render_game
from .oracle import DEFAULT_MAX_N, support_enumeration_ne
from .prevent_exceed import PeParams, solve_pe, symmetric_pe
from .sampling import SampleConfig, demonstrate_existence
from .well_support import DEFAULT_BUDGET, WsParams, kappa, search_ws

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET, EXIT_GUARANTEE = 0, 1, 2, 3, 4


class _Printer:
    def __init__(self, out, decimal):
        self.out = out
        self.decimal = decimal

    def __call__(self, key, value):
        if isinstance(value, (list, tuple)):
            text = " ".join(str(v) for v in value)
        else:
            text = str(value)
        self.out.write(f"{key}={text}\n")
        if self.decimal and _numeric(value):
            vals = value if isinstance(value, (list, tuple)) else [value]
            self.out.write(f"{key}~=" + " ".join(f"{float(v):.6f}" for v in vals) + "\n")

    def profile(self, profile, prefix=""):
        self(prefix + "row", profile.row.weights)
        self(prefix + "col", profile.col.weights)

    def report(self, rep):
        for name in ("row_payoff", "col_payoff", "row_wsne_regret", "col_wsne_regret",
                     "epsilon_wsne", "epsilon_ne"):
            self(name, getattr(rep, name))


def _numeric(value):
    vals = value if isinstance(value, (list, tuple)) else [value]
    return bool(vals) and all(isinstance(v, Fraction) for v in vals)


def _rational(text):
    try:
        return as_fraction(text)
    except (ValueError, TypeError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_game(path):
    game = parse_game(_read(path))
    return ensure_normalized(game)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symwsne", description=__doc__.splitlines()[0])
    p.add_argument("--decimal", action="store_true",
                   help="also print decimal approximations")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("kappa", help="support size for a given delta")
    s.add_argument("--delta", type=_rational, required=True)

    def search_opts(s):
        s.add_argument("--jobs", type=int, default=1)
        s.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="max search nodes visited (default 10^8)")

    s = sub.add_parser("solve", help="(1/2+delta)-WSNE of a symmetric game")
    s.add_argument("game")
    s.add_argument("--delta", type=_rational, required=True)
    search_opts(s)

    s = sub.add_parser("verify", help="regrets of a profile")
    s.add_argument("game")
    s.add_argument("--profile", required=True)
    s.add_argument("--epsilon", type=_rational, default=Fraction(1))
    s.add_argument("--raw", action="store_true", help="do not normalize the game")

    s = sub.add_parser("pe", help="profile preventing exceeding a threshold")
    s.add_argument("game")
    s.add_argument("--u", type=_rational, required=True)
    s.add_argument("--two-sided", action="store_true")
    s.add_argument("--v", type=_rational)

    s = sub.add_parser("ws-search", help="exhaustive well-support search")
    s.add_argument("game")
    s.add_argument("--v", type=_rational, required=True)
    s.add_argument("--u", type=_rational, required=True)
    s.add_argument("--delta", type=_rational, required=True)
    search_opts(s)

    s = sub.add_parser("sample", help="sampling demonstrator around an exact NE")
    s.add_argument("game")
    s.add_argument("--delta", type=_rational, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--ne-index", type=int, default=0,
                   help="which oracle equilibrium to sample around")

    s = sub.add_parser("oracle", help="exact equilibria by support enumeration")
    s.add_argument("game")
    s.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)

    s = sub.add_parser("gen", help="emit a seeded random game file")
    s.add_argument("--kind", choices=["uniform", "win-lose"], required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--symmetric", action="store_true")
    return p


def _normalization(emit, shift, scale):
    emit("shift", shift)
    emit("scale", scale)


def cmd_kappa(args, emit):
    emit("kappa", kappa(args.delta))
    return EXIT_OK


def cmd_solve(args, emit):
    game, shift, scale = _load_game(args.game)
    sol = half_wsne(game, args.delta, jobs=args.jobs, budget=args.budget)
    for note in sol.warnings:
        print(f"warning: {note}", file=sys.stderr)
    emit("path", sol.path.value)
    emit("delta", sol.delta)
    emit("kappa", sol.kappa)
    _normalization(emit, shift, scale)
    emit.profile(sol.profile)
    emit("epsilon_wsne", sol.certificate.epsilon_wsne)
    emit("epsilon_ne", sol.certificate.epsilon_ne)
    emit("pairs_examined", sol.pairs_examined)
    emit("work", sol.work)
    return EXIT_OK


def cmd_verify(args, emit):
    game = parse_game(_read(args.game))
    shift, scale = Fraction(0), Fraction(1)
    if not args.raw:
        game, shift, scale = ensure_normalized(game)
    profile = parse_profile(_read(args.profile), game.n)
    rep = wsne_epsilon(game, profile)
    _normalization(emit, shift, scale)
    emit.report(rep)
    return EXIT_OK if rep.epsilon_wsne <= args.epsilon else EXIT_NO


def cmd_pe(args, emit):
    game, shift, scale = _load_game(args.game)
    _normalization(emit, shift, scale)
    if args.two_sided:
        v = args.v if args.v is not None else args.u
        profile = solve_pe(game, PeParams(v, args.u))
    else:
        if args.v is not None:
            raise _Usage("--v needs --two-sided")
        x = symmetric_pe(game, args.u)
        profile = None if x is None else StrategyProfile(x, x)
    if profile is None:
        emit("feasible", "no")
        return EXIT_NO
    emit("feasible", "yes")
    emit.profile(profile)
    return EXIT_OK


def cmd_ws_search(args, emit):
    game, shift, scale = _load_game(args.game)
    params = WsParams(args.v, args.u, args.delta)
    res = search_ws(game, params, jobs=args.jobs, budget=args.budget)
    _normalization(emit, shift, scale)
    emit("kappa", res.stats.kappa)
    emit("found", "yes" if res.found else "no")
    emit("pairs_examined", res.stats.pairs_examined)
    emit("pairs_total", res.stats.pairs_total)
    emit("work", res.stats.work)
    if not res.found:
        return EXIT_NO
    emit("I", res.I.counts)
    emit("J", res.J.counts)
    emit.profile(res.profile)
    emit("epsilon_wsne", wsne_epsilon(game, res.profile).epsilon_wsne)
    return EXIT_OK


def cmd_sample(args, emit):
    game, shift, scale = _load_game(args.game)
    records = support_enumeration_ne(game)
    if not 0 <= args.ne_index < len(records):
        raise _Usage(f"--ne-index must be below {len(records)}")
    ne = records[args.ne_index]
    out = demonstrate_existence(game, ne.profile, SampleConfig(args.delta, args.trials, args.seed))
    _normalization(emit, shift, scale)
    emit.profile(ne.profile, prefix="ne_")
    emit("ne_v", ne.v)
    emit("ne_u", ne.u)
    emit("kappa", out.kappa)
    emit("rng", out.rng)
    emit("trials", out.trials)
    emit("successes", out.successes)
    emit("empirical_failure_rate", out.empirical_failure_rate)
    emit("per_side_bound", f"{out.per_side_bound:.12g}")
    emit("union_bound", f"{out.union_bound:.12g}")
    emit("two_sided_bound", f"{2 * out.union_bound:.12g}")
    if out.first_success is not None:
        emit.profile(out.first_success, prefix="first_success_")
    return EXIT_OK if out.successes else EXIT_NO


def cmd_oracle(args, emit):
    game, shift, scale = _load_game(args.game)
    records = support_enumeration_ne(game, args.max_n)
    _normalization(emit, shift, scale)
    emit("count", len(records))
    for k, rec in enumerate(records):
        emit(f"ne{k}_row", rec.profile.row.weights)
        emit(f"ne{k}_col", rec.profile.col.weights)
        emit(f"ne{k}_v", rec.v)
        emit(f"ne{k}_u", rec.u)
        emit(f"ne{k}_symmetric", "yes" if rec.symmetric else "no")
    return EXIT_OK


def cmd_gen(args, emit):
    game = generate_game(args.kind, args.n, args.seed, symmetric=args.symmetric)
    emit.out.write(render_game(game, symmetric=args.symmetric))
    return EXIT_OK


class _Usage(Exception):
    pass


COMMANDS = {
    "kappa": cmd_kappa,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "pe": cmd_pe,
    "ws-search": cmd_ws_search,
    "sample": cmd_sample,
    "oracle": cmd_oracle,
    "gen": cmd_gen,
}


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    emit = _Printer(stdout, args.decimal)
    try:
        return COMMANDS[args.command](args, emit)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except GuaranteeViolatedError as exc:
        print(f"error: guarantee violated: {exc}", file=sys.stderr)
        return EXIT_GUARANTEE
    except (_Usage, NotSymmetricError, WsneError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
