"""Homogeneous functionals on the extended orthant.

Linear functionals are coefficient vectors; sublinear and superlinear ones
are finite maxima and minima of linear branches.  Open sets of the weak
upper topology are unions of basic blocks, where a block is a finite set of
linear functionals and a point belongs to the block's basic open when every
pairing strictly exceeds one.  The Minkowski functional of such a union has
the closed form max-over-blocks of min-over-block pairings.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .convex_sep import ExtVec, as_extvec
from .errors import DimensionMismatch, EmptyList, InfiniteCoefficient
from .extreal import INF, ONE, ZERO, ExtReal, ext_max, ext_min
from .lp import Constraint, EQ, GEQ, LPInfeasible, LPOptimal, LPProblem, solve_lp

_F0 = Fraction(0)
_F1 = Fraction(1)


class LinFun:
    """Linear functional y -> sum_i c_i y_i with extended arithmetic."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = as_extvec(coeffs)

    @property
    def dim(self) -> int:
        return self.coeffs.dim

    @property
    def is_finite(self) -> bool:
        return all(c.is_finite for c in self.coeffs)

    def fraction_coeffs(self):
        if not self.is_finite:
            raise InfiniteCoefficient(f"{self!r} has an infinite coefficient")
        return tuple(c.as_fraction() for c in self.coeffs)

    def eval(self, y) -> ExtReal:
        y = as_extvec(y)
        if y.dim != self.dim:
            raise DimensionMismatch(f"{self.dim} versus {y.dim}")
        total = ZERO
        for c, v in zip(self.coeffs, y):
            if c.num and v.num:
                # zero factors contribute nothing, including 0 * inf
                total = total + c * v
        return total

    def __eq__(self, other):
        if not isinstance(other, LinFun):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("lin", self.coeffs))

    def __repr__(self):
        return f"LinFun{self.coeffs!r}"


class _BranchFun:
    __slots__ = ("branches",)

    def __init__(self, branches):
        branches = tuple(b if isinstance(b, LinFun) else LinFun(b) for b in branches)
        if not branches:
            raise EmptyList("at least one branch is required")
        d = branches[0].dim
        for b in branches[1:]:
            if b.dim != d:
                raise DimensionMismatch("branches disagree on dimension")
        self.branches = branches

    @property
    def dim(self) -> int:
        return self.branches[0].dim

    @property
    def is_finite(self) -> bool:
        return all(b.is_finite for b in self.branches)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.branches == other.branches

    def __hash__(self):
        return hash((type(self).__name__, self.branches))

    def __repr__(self):
        inner = ", ".join(repr(b.coeffs) for b in self.branches)
        return f"{type(self).__name__}{{{inner}}}"


class SublinFun(_BranchFun):
    """Pointwise maximum of finitely many linear functionals."""

    def eval(self, y) -> ExtReal:
        return ext_max(b.eval(y) for b in self.branches)


class SuperlinFun(_BranchFun):
    """Pointwise minimum of finitely many linear functionals."""

    def eval(self, y) -> ExtReal:
        return ext_min(b.eval(y) for b in self.branches)


def member_u(f, y) -> bool:
    """Strict side of the unit level set: f(y) > 1."""
    return ONE < f.eval(y)


def member_a(f, y) -> bool:
    """Complementary side: f(y) <= 1."""
    return f.eval(y) <= ONE


class OpenSetRep:
    """Union of basic opens, one block (finite set of LinFun) per basic open."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        out = []
        dim = None
        for block in blocks:
            funs = tuple(b if isinstance(b, LinFun) else LinFun(b) for b in block)
            if not funs:
                raise EmptyList("blocks must be nonempty")
            for f in funs:
                if dim is None:
                    dim = f.dim
                elif f.dim != dim:
                    raise DimensionMismatch("blocks disagree on dimension")
            out.append(funs)
        self.blocks = tuple(out)

    @property
    def dim(self):
        return self.blocks[0][0].dim if self.blocks else None

    def contains(self, y) -> bool:
        y = as_extvec(y)
        return any(all(ONE < f.eval(y) for f in block) for block in self.blocks)

    def __repr__(self):
        return f"OpenSetRep(blocks={len(self.blocks)})"


def minkowski(rep: OpenSetRep, y) -> ExtReal:
    """Largest scale r with y inside r times the open set; zero if none.

    For a basic block the pairings must all exceed r, so the answer is the
    minimum pairing; a union takes the best block.
    """
    y = as_extvec(y)
    if rep.dim is not None and rep.dim != y.dim:
        raise DimensionMismatch(f"{rep.dim} versus {y.dim}")
    best = ZERO
    for block in rep.blocks:
        v = ext_min(f.eval(y) for f in block)
        if best < v:
            best = v
    return best


def _dominated_detail(f: LinFun, phi: SublinFun):
    """LP decision of coordinatewise domination by a convex combination.

    Returns (True, weights, None) or (False, None, violating point).  The
    violating point comes from the Farkas multipliers of the coordinate
    rows and satisfies f(w) > phi(w) exactly.
    """
    if f.dim != phi.dim:
        raise DimensionMismatch(f"{f.dim} versus {phi.dim}")
    fc = f.fraction_coeffs()
    branches = [h.fraction_coeffs() for h in phi.branches]
    k = len(branches)
    constraints = [Constraint((_F1,) * k, EQ, _F1)]
    for j in range(f.dim):
        constraints.append(
            Constraint(tuple(b[j] for b in branches), GEQ, fc[j])
        )
    res = solve_lp(LPProblem(k, tuple(constraints), (_F0,) * k, "max"))
    if isinstance(res, LPOptimal):
        return True, res.point, None
    assert isinstance(res, LPInfeasible)
    ys = res.certificate[1:]
    witness = ExtVec(tuple(ExtReal.from_fraction(v) for v in ys))
    if not phi.eval(witness) < f.eval(witness):
        raise AssertionError("internal error: domination witness failed verification")
    return False, None, witness


def dominated_by_max(f: LinFun, phi: SublinFun):
    """Decide f <= phi on the whole orthant; finite coefficients only.

    A linear functional sits below a maximum of linear ones on the
    nonnegative orthant exactly when it sits below a convex combination of
    them coordinatewise, so one exact LP decides the pointwise order.  On
    success the combination weights are returned as a certificate.
    """
    ok, lam, _ = _dominated_detail(f, phi)
    return ok, lam


def specialization_leq(y, y_prime, c_gens) -> bool:
    """Order induced by pairing against every generator of the dual cone."""
    y = as_extvec(y)
    y_prime = as_extvec(y_prime)
    if y.dim != y_prime.dim:
        raise DimensionMismatch(f"{y.dim} versus {y_prime.dim}")
    for x in c_gens:
        x = x if isinstance(x, LinFun) else LinFun(x)
        if not x.eval(y) <= x.eval(y_prime):
            return False
    return True


def _unit(dim, j):
    return ExtVec(tuple(ONE if i == j else ZERO for i in range(dim)))


def _sample_points(dim, budget, seed):
    rng = random.Random(seed)
    pts = [_unit(dim, j) for j in range(dim)]
    pts.append(ExtVec((ONE,) * dim))
    pts.append(ExtVec((ExtReal(1, 2),) * dim))
    while len(pts) < budget:
        entries = []
        for _ in range(dim):
            if rng.randrange(10) == 0:
                entries.append(INF)
            else:
                entries.append(ExtReal(rng.randrange(0, 9), rng.randrange(1, 5)))
        pts.append(ExtVec(entries))
    return pts[:budget]


def leq_functional(phi, psi, sample_budget: int = 200, seed: int = 1729):
    """Pointwise order phi <= psi on the orthant.

    Exact when the comparison reduces to linear-versus-linear or to the
    domination LP (finite coefficients).  A minimum on the left against
    anything else is only refutable by search: the sampled path returns
    False with a witness point, or True meaning no violation was found
    within the budget.
    """
    if phi.dim != psi.dim:
        raise DimensionMismatch(f"{phi.dim} versus {psi.dim}")

    if isinstance(phi, SublinFun):
        # a maximum is below psi iff every branch is
        for b in phi.branches:
            ok, wit = leq_functional(b, psi, sample_budget, seed)
            if not ok:
                return False, wit
        return True, None

    if isinstance(psi, SuperlinFun):
        # below a minimum iff below every branch; any branch witness works
        for g in psi.branches:
            ok, wit = leq_functional(phi, g, sample_budget, seed)
            if not ok:
                return False, wit
        return True, None

    if isinstance(phi, LinFun) and isinstance(psi, LinFun):
        for j in range(phi.dim):
            if not phi.coeffs[j] <= psi.coeffs[j]:
                return False, _unit(phi.dim, j)
        return True, None

    if isinstance(phi, LinFun) and isinstance(psi, SublinFun):
        if phi.is_finite and psi.is_finite:
            ok, _, wit = _dominated_detail(phi, psi)
            return ok, wit

    # semi-decision: minimum on the left, or infinite coefficients
    for y in _sample_points(phi.dim, sample_budget, seed):
        if not phi.eval(y) <= psi.eval(y):
            return False, y
    return True, None
