"""Exact phase-one simplex for conic feasibility questions.

The one question asked here is: can ``target`` be written as

    sum_j mu_j * gens[j] + sum_k nu_k * free[k],    mu >= 0, nu free?

Either a certificate ``(mu, nu)`` is returned, or a Farkas witness ``y`` with
``y . gens[j] <= 0``, ``y . free[k] = 0`` and ``y . target > 0``.
Bland's rule keeps the pivoting finite.  The tableau is kept integral by
fraction-free pivoting, so all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence


@dataclass(frozen=True)
class ConicResult:
    feasible: bool
    multipliers: tuple[Fraction, ...] | None = None  # mu, one per generator
    free_multipliers: tuple[Fraction, ...] | None = None  # nu
    witness: tuple[Fraction, ...] | None = None  # Farkas y when infeasible
    pivots: int = 0


def conic_combination(
    target: Sequence, gens: Sequence[Sequence], free: Sequence[Sequence] = ()
) -> ConicResult:
    d = len(target)
    cols = [tuple(Fraction(c) for c in g) for g in gens]
    ng = len(cols)
    for f in free:
        f = tuple(Fraction(c) for c in f)
        cols.append(f)
        cols.append(tuple(-c for c in f))
    n = len(cols)
    b = [Fraction(c) for c in target]

    # Constraint i is scaled by a nonzero integer so that it has integer
    # entries and a nonnegative right-hand side; x is unchanged by this, and
    # the dual is scaled back at the end.
    scale = []
    M = []  # structural | artificial | rhs, all integers over the denominator D
    for i in range(d):
        entries = [cols[j][i] for j in range(n)] + [b[i]]
        m = lcm(*(e.denominator for e in entries))
        if b[i] < 0:
            m = -m
        scale.append(m)
        art = [0] * d
        art[i] = 1
        M.append([int(e * m) for e in entries[:-1]] + art + [int(entries[-1] * m)])
    width = n + d + 1
    # reduced costs for "minimize sum of artificials"; cost[-1] is minus the objective
    cost = [0] * width
    for row in M:
        for j in range(n):
            cost[j] -= row[j]
        cost[-1] -= row[-1]
    basis = [n + i for i in range(d)]
    D = 1

    # Integer (Edmonds) pivoting: the true tableau is M / D.  Every update
    # divides exactly by the previous pivot, so entries stay integral.
    pivots = 0
    while True:
        enter = next((j for j in range(n + d) if cost[j] < 0), None)  # Bland
        if enter is None:
            break
        r = None
        for i in range(d):
            a = M[i][enter]
            if a > 0:
                if r is None:
                    r = i
                    continue
                lhs, rhs = M[i][-1] * M[r][enter], M[r][-1] * a
                if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                    r = i
        if r is None:  # cannot happen: phase-one objective is bounded below
            raise ArithmeticError("unbounded phase-one problem")
        p = M[r][enter]
        prow = M[r]
        support = [(j, v) for j, v in enumerate(prow) if v]
        for i in range(d):
            if i == r:
                continue
            row = M[i]
            f = row[enter]
            if f:
                M[i] = [p * a for a in row]
                row = M[i]
                for j, v in support:
                    row[j] -= f * v
            else:
                M[i] = row = [p * a for a in row]
            if D != 1:
                M[i] = [a // D for a in row]
        f = cost[enter]
        cost = [p * a for a in cost]
        if f:
            for j, v in support:
                cost[j] -= f * v
        if D != 1:
            cost = [a // D for a in cost]
        D = p
        basis[r] = enter
        pivots += 1

    if cost[-1] == 0:
        x = [Fraction(0)] * n
        for i, j in enumerate(basis):
            if j < n:
                x[j] = Fraction(M[i][-1], D)
        mu = tuple(x[:ng])
        nu = tuple(x[ng + 2 * k] - x[ng + 2 * k + 1] for k in range((n - ng) // 2))
        return ConicResult(True, mu, nu, None, pivots)

    # dual prices of the scaled system: reduced cost of artificial i is 1 - y_i
    witness = tuple(scale[i] * (1 - Fraction(cost[n + i], D)) for i in range(d))
    return ConicResult(False, None, None, witness, pivots)
