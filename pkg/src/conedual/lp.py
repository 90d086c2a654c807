"""Exact linear programming over the rationals with checkable certificates.

A dense two-phase simplex using Bland's smallest-index rule, so every run
terminates and is fully deterministic.  All variables are implicitly
nonnegative; callers encode a free variable as a difference of two
nonnegative ones.  Every answer carries evidence that can be re-verified
without trusting the solver:

* ``LPOptimal``     a feasible point and the exact objective value,
* ``LPInfeasible``  Farkas multipliers, one per constraint, that combine
                    the constraints into ``(something <= 0) > 0`` on the
                    nonnegative orthant,
* ``LPUnbounded``   an improving recession ray.

``verify_lp_result`` re-checks any of the three against the original
problem with exact arithmetic; ``solve_lp`` runs it internally before
returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MalformedProblem

LEQ = "<="
GEQ = ">="
EQ = "=="
_RELS = (LEQ, GEQ, EQ)

_F0 = Fraction(0)
_F1 = Fraction(1)


def _frac(v):
    if isinstance(v, float):
        raise MalformedProblem("floating point coefficients are not accepted")
    try:
        return Fraction(v)
    except (TypeError, ValueError) as exc:
        raise MalformedProblem(f"not a rational coefficient: {v!r}") from exc


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    rel: str
    rhs: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_frac(v) for v in self.coeffs))
        object.__setattr__(self, "rhs", _frac(self.rhs))
        if self.rel not in _RELS:
            raise MalformedProblem(f"unknown relation {self.rel!r}")


@dataclass(frozen=True)
class LPProblem:
    n_vars: int
    constraints: tuple
    objective: tuple
    sense: str = "max"

    def __post_init__(self):
        if not isinstance(self.n_vars, int) or self.n_vars < 1:
            raise MalformedProblem("n_vars must be a positive integer")
        if self.sense not in ("max", "min"):
            raise MalformedProblem(f"unknown sense {self.sense!r}")
        cons = tuple(
            c if isinstance(c, Constraint) else Constraint(*c) for c in self.constraints
        )
        object.__setattr__(self, "constraints", cons)
        object.__setattr__(self, "objective", tuple(_frac(v) for v in self.objective))
        if len(self.objective) != self.n_vars:
            raise MalformedProblem("objective length disagrees with n_vars")
        for k, c in enumerate(cons):
            if len(c.coeffs) != self.n_vars:
                raise MalformedProblem(f"constraint {k} has {len(c.coeffs)} coefficients, expected {self.n_vars}")


@dataclass(frozen=True)
class LPOptimal:
    point: tuple
    value: Fraction


@dataclass(frozen=True)
class LPInfeasible:
    certificate: tuple


@dataclass(frozen=True)
class LPUnbounded:
    ray: tuple


def _require(cond, message):
    if not cond:
        raise AssertionError(f"internal solver error: {message}")


def _pivot(T, basis, pr, pc):
    p = T[pr][pc]
    if p != 1:
        T[pr] = [v / p for v in T[pr]]
    prow = T[pr]
    for r in range(len(T)):
        if r == pr:
            continue
        f = T[r][pc]
        if f:
            row = T[r]
            T[r] = [a - f * b if b else a for a, b in zip(row, prow)]
    basis[pr] = pc


def _iterate(T, basis, m, limit):
    """Bland's rule simplex loop on a tableau whose last row is reduced costs.

    Only columns below ``limit`` may enter.  Returns None at optimality, or
    the entering column index when the problem is unbounded along it.
    """
    while True:
        cost = T[m]
        pc = None
        for j in range(limit):
            if cost[j] < 0:
                pc = j
                break
        if pc is None:
            return None
        pr = None
        best = None
        for i in range(m):
            t = T[i][pc]
            if t > 0:
                ratio = T[i][-1] / t
                if best is None or ratio < best or (ratio == best and basis[i] < basis[pr]):
                    best = ratio
                    pr = i
        if pr is None:
            return pc
        _pivot(T, basis, pr, pc)


def _solve_square(M, rhs):
    """Exact Gauss-Jordan solve of an invertible square system."""
    n = len(M)
    aug = [list(M[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        _require(piv is not None, "singular basis matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][-1] for i in range(n)]


def solve_lp(problem: LPProblem):
    """Solve exactly; returns LPOptimal, LPInfeasible, or LPUnbounded."""
    if not isinstance(problem, LPProblem):
        raise MalformedProblem("expected an LPProblem")
    n = problem.n_vars
    cons = problem.constraints
    m = len(cons)
    obj = problem.objective
    obj_min = [-v for v in obj] if problem.sense == "max" else list(obj)

    n_slack = sum(1 for c in cons if c.rel != EQ)
    width = n + n_slack

    A0 = []
    b0 = []
    flip = []
    s = n
    for c in cons:
        row = [_F0] * width
        for j, v in enumerate(c.coeffs):
            row[j] = v
        if c.rel == LEQ:
            row[s] = _F1
            s += 1
        elif c.rel == GEQ:
            row[s] = -_F1
            s += 1
        rhs = c.rhs
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
            flip.append(-_F1)
        else:
            flip.append(_F1)
        A0.append(row)
        b0.append(rhs)

    # Phase 1: one artificial per row; artificial columns never re-enter.
    T = []
    for i in range(m):
        unit = [_F0] * m
        unit[i] = _F1
        T.append(A0[i][:] + unit + [b0[i]])
    basis = [width + i for i in range(m)]
    cost = []
    for j in range(width + m + 1):
        direct = _F1 if width <= j < width + m else _F0
        cost.append(direct - sum(T[i][j] for i in range(m)))
    T.append(cost)

    status = _iterate(T, basis, m, limit=width)
    _require(status is None, "phase 1 cannot be unbounded")
    value1 = sum(T[i][-1] for i in range(m) if basis[i] >= width)

    if value1 > 0:
        # Dual multipliers of the artificial objective prove infeasibility.
        M = []
        rhs = []
        for r in range(m):
            col = basis[r]
            if col < width:
                M.append([A0[c][col] for c in range(m)])
                rhs.append(_F0)
            else:
                unit = [_F0] * m
                unit[col - width] = _F1
                M.append(unit)
                rhs.append(_F1)
        y = _solve_square(M, rhs)
        cert = tuple(flip[i] * y[i] for i in range(m))
        result = LPInfeasible(cert)
        _require(verify_lp_result(problem, result), "invalid infeasibility certificate")
        return result

    # Drive leftover artificials out of the basis; rows that cannot pivot
    # became 0 = 0 and are redundant.
    drop = set()
    for i in range(m):
        if basis[i] >= width:
            pc = next((j for j in range(width) if T[i][j] != 0), None)
            if pc is None:
                drop.add(i)
            else:
                _pivot(T, basis, i, pc)

    keep = [i for i in range(m) if i not in drop]
    rows2 = [T[i][:width] + [T[i][-1]] for i in keep]
    basis2 = [basis[i] for i in keep]
    m2 = len(rows2)
    cmin = obj_min + [_F0] * n_slack
    cost2 = []
    for j in range(width + 1):
        direct = cmin[j] if j < width else _F0
        cost2.append(direct - sum(cmin[basis2[i]] * rows2[i][j] for i in range(m2)))
    T2 = rows2 + [cost2]

    status = _iterate(T2, basis2, m2, limit=width)
    if status is None:
        xstd = [_F0] * width
        for i in range(m2):
            xstd[basis2[i]] = T2[i][-1]
        point = tuple(xstd[:n])
        value = sum(o * p for o, p in zip(obj, point))
        result = LPOptimal(point, value)
    else:
        pc = status
        ray = [_F0] * width
        ray[pc] = _F1
        for i in range(m2):
            ray[basis2[i]] = -T2[i][pc]
        result = LPUnbounded(tuple(ray[:n]))
    _require(verify_lp_result(problem, result), "solver output failed verification")
    return result


def verify_lp_result(problem: LPProblem, result) -> bool:
    """Re-check a solver answer against the problem, trusting nothing."""
    n = problem.n_vars
    cons = problem.constraints

    if isinstance(result, LPOptimal):
        x = result.point
        if len(x) != n or any(v < 0 for v in x):
            return False
        for c in cons:
            lhs = sum(a * v for a, v in zip(c.coeffs, x))
            if c.rel == LEQ and not lhs <= c.rhs:
                return False
            if c.rel == GEQ and not lhs >= c.rhs:
                return False
            if c.rel == EQ and lhs != c.rhs:
                return False
        return sum(o * v for o, v in zip(problem.objective, x)) == result.value

    if isinstance(result, LPInfeasible):
        z = result.certificate
        if len(z) != len(cons):
            return False
        for zi, c in zip(z, cons):
            if c.rel == LEQ and zi > 0:
                return False
            if c.rel == GEQ and zi < 0:
                return False
        combined_rhs = _F0
        combined = [_F0] * n
        for zi, c in zip(z, cons):
            if zi == 0:
                continue
            combined_rhs += zi * c.rhs
            for j, a in enumerate(c.coeffs):
                combined[j] += zi * a
        # On x >= 0 the combination forces (<= 0) > 0, a contradiction.
        return all(v <= 0 for v in combined) and combined_rhs > 0

    if isinstance(result, LPUnbounded):
        r = result.ray
        if len(r) != n or any(v < 0 for v in r) or all(v == 0 for v in r):
            return False
        for c in cons:
            d = sum(a * v for a, v in zip(c.coeffs, r))
            if c.rel == LEQ and d > 0:
                return False
            if c.rel == GEQ and d < 0:
                return False
            if c.rel == EQ and d != 0:
                return False
        gain = sum(o * v for o, v in zip(problem.objective, r))
        return gain > 0 if problem.sense == "max" else gain < 0

    return False
