"""Exact rational linear programming via a dense two-phase simplex.

Bland's rule is used throughout, so the method terminates on every input.
Instances here are tiny (dimension <= ~10, a few dozen constraints), which
makes the dense Fraction tableau entirely adequate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Optional[Fraction] = None
    x: Optional[tuple] = None


def _pivot(T, obj, basis, r, col):
    piv = T[r][col]
    inv = 1 / piv
    T[r] = [v * inv for v in T[r]]
    for i, row in enumerate(T):
        if i != r and row[col] != 0:
            f = row[col]
            T[i] = [a - f * b for a, b in zip(row, T[r])]
    if obj[col] != 0:
        f = obj[col]
        obj[:] = [a - f * b for a, b in zip(obj, T[r])]
    basis[r] = col


def _run_simplex(T, obj, basis, ncols) -> str:
    """Maximize; obj holds reduced costs (entry > 0 improves) plus -value in rhs."""
    while True:
        col = next((j for j in range(ncols) if obj[j] > 0), None)
        if col is None:
            return OPTIMAL
        best = None
        for i, row in enumerate(T):
            if row[col] > 0:
                ratio = row[-1] / row[col]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED
        _pivot(T, obj, basis, best[1], col)


def lp_solve(ineqs: Sequence[tuple[Sequence, object]], c: Sequence, sense: str = "max") -> LPResult:
    """Optimize c.x over {x : a.x <= b for (a, b) in ineqs}, x free.

    Returns an LPResult; for status "optimal" the optimum is attained at
    the returned point (a basic solution).
    """
    if sense not in ("max", "min"):
        raise ValueError("sense must be 'max' or 'min'")
    n = len(c)
    cf = [Fraction(v) for v in c]
    if sense == "min":
        cf = [-v for v in cf]
    m = len(ineqs)
    if m == 0:
        raise ValueError("empty constraint system is unbounded")
    # variables: u (n), v (n) with x = u - v, slack s (m), artificials (m)
    nstruct = 2 * n + m
    T = []
    rhs_sign = []
    for k, (a, b) in enumerate(ineqs):
        row = [Fraction(v) for v in a] + [-Fraction(v) for v in a]
        row += [Fraction(1 if j == k else 0) for j in range(m)]
        row.append(Fraction(b))
        if row[-1] < 0:
            row = [-v for v in row]
        T.append(row)
    # phase 1: artificial basis
    for k, row in enumerate(T):
        art = [Fraction(1 if j == k else 0) for j in range(m)]
        T[k] = row[:-1] + art + [row[-1]]
    ncols = nstruct + m
    basis = [nstruct + k for k in range(m)]
    obj = [Fraction(0)] * (ncols + 1)
    for j in range(nstruct):
        obj[j] = sum(row[j] for row in T)
    obj[-1] = sum(row[-1] for row in T)
    status = _run_simplex(T, obj, basis, nstruct)  # artificials never re-enter
    if obj[-1] != 0:
        return LPResult(INFEASIBLE)
    # drive leftover artificials out of the basis
    drop = []
    for i in range(len(T)):
        if basis[i] >= nstruct:
            col = next((j for j in range(nstruct) if T[i][j] != 0), None)
            if col is None:
                drop.append(i)
            else:
                _pivot(T, obj, basis, i, col)
    for i in sorted(drop, reverse=True):
        del T[i]
        del basis[i]
    # phase 2
    T = [row[:nstruct] + [row[-1]] for row in T]
    full_c = cf + [-v for v in cf] + [Fraction(0)] * m
    obj = [Fraction(0)] * (nstruct + 1)
    for j in range(nstruct):
        obj[j] = full_c[j] - sum(full_c[basis[i]] * T[i][j] for i in range(len(T)))
    obj[-1] = -sum(full_c[basis[i]] * T[i][-1] for i in range(len(T)))
    status = _run_simplex(T, obj, basis, nstruct)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    xs = [Fraction(0)] * nstruct
    for i, b in enumerate(basis):
        xs[b] = T[i][-1]
    x = tuple(xs[j] - xs[n + j] for j in range(n))
    value = -obj[-1]
    if sense == "min":
        value = -value
    return LPResult(OPTIMAL, value, x)
