"""Separation of finitely generated convex subsets of the extended orthant
from the open corner (all coordinates strictly above one).

Either outcome comes with an exact certificate: simplex weights whose
pairing with every generator stays at or below one, or an explicit convex
combination of generators that lands inside the corner.  Certificates are
re-verified here with extended-real arithmetic before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, EmptyList
from .extreal import ONE, ZERO, ExtReal, as_extreal
from .lp import Constraint, EQ, LEQ, LPInfeasible, LPOptimal, LPProblem, solve_lp

_F0 = Fraction(0)
_F1 = Fraction(1)


class ExtVec:
    """A point of the extended nonnegative orthant with a fixed dimension."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(as_extreal(e) for e in entries)
        if not entries:
            raise DimensionMismatch("vectors must have positive dimension")
        if any(e is NotImplemented for e in entries):
            raise TypeError("entries must be ExtReal, int, or Fraction")
        self.entries = entries

    @property
    def dim(self) -> int:
        return len(self.entries)

    def scale(self, r) -> "ExtVec":
        r = as_extreal(r)
        return ExtVec(tuple(r * e for e in self.entries))

    def __add__(self, other):
        if not isinstance(other, ExtVec):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionMismatch(f"{self.dim} versus {other.dim}")
        return ExtVec(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if not isinstance(other, ExtVec):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def as_extvec(x) -> ExtVec:
    return x if isinstance(x, ExtVec) else ExtVec(x)


def in_corner(x: ExtVec) -> bool:
    """True iff every coordinate strictly exceeds one (infinity counts)."""
    return all(ONE < e for e in as_extvec(x))


@dataclass(frozen=True)
class SeparationWeights:
    """A point of the standard simplex: nonnegative rationals summing to one."""

    values: tuple

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if any(v < 0 for v in vals):
            raise ValueError("weights must be nonnegative")
        if sum(vals) != 1:
            raise ValueError("weights must sum to one exactly")

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class Separated:
    weights: SeparationWeights


@dataclass(frozen=True)
class MeetsCorner:
    """The hull meets the corner; witness pairs (generator index, weight)."""

    witness: tuple


def _check_generators(generators, dim):
    gens = [as_extvec(g) for g in generators]
    if not gens:
        raise EmptyList("at least one generator is required")
    if not isinstance(dim, int) or dim < 1:
        raise DimensionMismatch("dimension must be a positive integer")
    for k, g in enumerate(gens):
        if g.dim != dim:
            raise DimensionMismatch(f"generator {k} has dimension {g.dim}, expected {dim}")
    return gens


def separate(generators, dim: int):
    """Separate the convex hull of the generators from the open corner.

    Weights at coordinates where some generator is infinite are forced to
    zero (a positive weight there would push the pairing to infinity), and
    an exact LP runs on the remaining coordinates.  Infeasibility of that
    LP means the hull meets the corner, and the Farkas certificate is
    turned into an explicit witness combination.
    """
    gens = _check_generators(generators, dim)
    inf_coords = sorted({i for g in gens for i in range(dim) if g[i].is_infinite})
    fin = [i for i in range(dim) if i not in set(inf_coords)]

    if not fin:
        outcome = MeetsCorner(_cover_witness(gens, inf_coords))
        _assert_valid(gens, dim, outcome)
        return outcome

    k = len(fin)
    constraints = [Constraint((_F1,) * k, EQ, _F1)]
    for g in gens:
        constraints.append(
            Constraint(tuple(g[i].as_fraction() for i in fin), LEQ, _F1)
        )
    res = solve_lp(LPProblem(k, tuple(constraints), (_F0,) * k, "max"))

    if isinstance(res, LPOptimal):
        full = [_F0] * dim
        for pos, i in enumerate(fin):
            full[i] = res.point[pos]
        outcome = Separated(SeparationWeights(tuple(full)))
        _assert_valid(gens, dim, outcome)
        return outcome

    assert isinstance(res, LPInfeasible)
    outcome = MeetsCorner(_witness_from_certificate(gens, fin, inf_coords, res.certificate))
    _assert_valid(gens, dim, outcome)
    return outcome


def hull_disjoint_from_corner(generators, dim: int) -> bool:
    """Decision form: True iff a separating weight vector exists."""
    return isinstance(separate(generators, dim), Separated)


def _cover_witness(gens, inf_coords):
    """Uniform combination of generators covering every infinite coordinate."""
    cover = sorted({next(j for j, g in enumerate(gens) if g[i].is_infinite) for i in inf_coords})
    share = Fraction(1, len(cover))
    return tuple((j, share) for j in cover)


def _witness_from_certificate(gens, fin, inf_coords, certificate):
    """Build a hull point in the corner from Farkas multipliers.

    The multipliers of the generator rows, negated and normalised, give a
    convex combination whose finite coordinates all exceed one.  If some
    coordinates were eliminated as infinite, a small slice of an
    infinity-covering combination is mixed in without dropping any finite
    coordinate back to one.
    """
    w = [-z for z in certificate[1:]]
    total = sum(w)
    base = {j: wj / total for j, wj in enumerate(w) if wj > 0}

    if not inf_coords:
        return tuple(sorted(base.items()))

    cover = sorted({next(j for j, g in enumerate(gens) if g[i].is_infinite) for i in inf_coords})
    share = Fraction(1, len(cover))
    eps = Fraction(1, 2)
    for i in fin:
        x = sum(mu * gens[j][i].as_fraction() for j, mu in base.items())
        y = sum(share * gens[j][i].as_fraction() for j in cover)
        if y < x:
            # keep (1 - eps) x + eps y above one
            eps = min(eps, (x - 1) / (x - y) / 2)
    combo = {j: mu * (1 - eps) for j, mu in base.items()}
    for j in cover:
        combo[j] = combo.get(j, _F0) + eps * share
    return tuple(sorted((j, v) for j, v in combo.items() if v > 0))


def combination_point(generators, witness) -> ExtVec:
    """Evaluate a weighted combination of generators with extended arithmetic."""
    gens = [as_extvec(g) for g in generators]
    dim = gens[0].dim
    out = [ZERO] * dim
    for j, coeff in witness:
        c = ExtReal.from_fraction(Fraction(coeff))
        for i in range(dim):
            out[i] = out[i] + c * gens[j][i]
    return ExtVec(out)


def verify_separated(generators, weights, dim=None) -> bool:
    """Exact recheck: weights in the simplex and every pairing at most one."""
    gens = [as_extvec(g) for g in generators]
    if dim is not None and any(g.dim != dim for g in gens):
        return False
    vals = list(weights)
    if len(vals) != gens[0].dim:
        return False
    if any(v < 0 for v in vals) or sum(vals, _F0) != 1:
        return False
    ext = [ExtReal.from_fraction(Fraction(v)) for v in vals]
    for g in gens:
        total = ZERO
        for a, p in zip(ext, g):
            total = total + a * p
        if not total <= ONE:
            return False
    return True


def verify_meets_corner(generators, witness) -> bool:
    """Exact recheck: witness weights form a simplex point landing in the corner."""
    coeffs = [Fraction(c) for _, c in witness]
    idxs = [j for j, _ in witness]
    gens = [as_extvec(g) for g in generators]
    if any(j < 0 or j >= len(gens) for j in idxs):
        return False
    if any(c < 0 for c in coeffs) or sum(coeffs, _F0) != 1:
        return False
    return in_corner(combination_point(gens, witness))


def _assert_valid(gens, dim, outcome):
    if isinstance(outcome, Separated):
        ok = verify_separated(gens, outcome.weights, dim)
    else:
        ok = verify_meets_corner(gens, outcome.witness)
    if not ok:
        raise AssertionError("internal error: separation certificate failed verification")
