"""Exact feasibility for linear systems over nonnegative variables.

Phase-one simplex on a dense tableau of Fractions, pivoting with
Bland's rule so the method terminates on degenerate systems.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exceptions import MalformedSystemError
from .game import ZERO, as_fraction

LE, EQ, GE = "<=", "==", ">="
_RELATIONS = {LE, EQ, GE}


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise MalformedSystemError(f"unknown relation {self.relation!r}")
        object.__setattr__(self, "coeffs", tuple(as_fraction(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", as_fraction(self.rhs))

    def holds(self, x: Sequence[Fraction]) -> bool:
        lhs = sum((a * b for a, b in zip(self.coeffs, x)), ZERO)
        if self.relation == LE:
            return lhs <= self.rhs
        if self.relation == GE:
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass
class LinearSystem:
    """Constraints ``a . x (<=|==|>=) b`` over ``num_vars`` variables."""

    num_vars: int
    constraints: list[Constraint] = field(default_factory=list)
    nonneg: bool = True

    def add(self, coeffs, relation, rhs) -> "LinearSystem":
        self.constraints.append(Constraint(tuple(coeffs), relation, rhs))
        return self

    def validate(self) -> None:
        if self.num_vars < 1:
            raise MalformedSystemError("num_vars must be positive")
        if not self.nonneg:
            raise MalformedSystemError("free variables are not supported")
        for k, c in enumerate(self.constraints):
            if len(c.coeffs) != self.num_vars:
                raise MalformedSystemError(
                    f"constraint {k} has {len(c.coeffs)} coefficients, "
                    f"expected {self.num_vars}"
                )

    def is_satisfied_by(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.num_vars or any(v < 0 for v in x):
            return False
        return all(c.holds(x) for c in self.constraints)


def solve_feasible(system: LinearSystem) -> tuple[Fraction, ...] | None:
    """Return a feasible point of ``system`` or ``None`` if there is none.

    The returned point satisfies every constraint exactly; this is
    re-checked before returning. The pivot sequence is fully determined
    by the input, so equal systems give equal answers.
    """
    system.validate()
    n = system.num_vars
    rows = system.constraints
    m = len(rows)
    if m == 0:
        return tuple(ZERO for _ in range(n))

    # Column layout: originals | one slack/surplus per inequality | artificials.
    n_slack = sum(1 for c in rows if c.relation != EQ)
    n_cols = n + n_slack + m
    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    s = n
    for r, c in enumerate(rows):
        row = [ZERO] * (n_cols + 1)
        row[:n] = c.coeffs
        if c.relation == LE:
            row[s] = Fraction(1)
            s += 1
        elif c.relation == GE:
            row[s] = Fraction(-1)
            s += 1
        row[-1] = c.rhs
        if c.rhs < 0:
            row = [-v for v in row]
        row[n + n_slack + r] = Fraction(1)
        tableau.append(row)
        basis.append(n + n_slack + r)

    # Reduced costs of "minimize sum of artificials".
    cost = [ZERO] * (n_cols + 1)
    for row in tableau:
        for k in range(n + n_slack):
            cost[k] -= row[k]
        cost[-1] -= row[-1]

    while True:
        entering = next((k for k in range(n_cols) if cost[k] < 0), None)
        if entering is None:
            break
        leaving, best = None, None
        for r, row in enumerate(tableau):
            a = row[entering]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[r] < basis[leaving]
                ):
                    leaving, best = r, ratio
        # Phase one is bounded below by zero, so some row always qualifies.
        _pivot(tableau, cost, leaving, entering)
        basis[leaving] = entering

    if cost[-1] != 0:
        return None

    x = [ZERO] * n
    for r, b in enumerate(basis):
        if b < n:
            x[b] = tableau[r][-1]
    x = tuple(x)
    if not system.is_satisfied_by(x):
        raise AssertionError("simplex returned a point that fails substitution")
    return x


def _pivot(tableau, cost, r, k):
    prow = tableau[r]
    p = prow[k]
    if p != 1:
        prow[:] = [v / p for v in prow]
    for row in tableau:
        if row is prow:
            continue
        f = row[k]
        if f:
            row[:] = [a - f * b for a, b in zip(row, prow)]
    f = cost[k]
    if f:
        cost[:] = [a - f * b for a, b in zip(cost, prow)]
