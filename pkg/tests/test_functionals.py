import random
from fractions import Fraction

import pytest

from conedual import (
    INF,
    ONE,
    ZERO,
    ExtReal,
    ExtVec,
    LinFun,
    OpenSetRep,
    SublinFun,
    SuperlinFun,
    dominated_by_max,
    leq_functional,
    member_a,
    member_u,
    minkowski,
    specialization_leq,
)
from conedual.errors import DimensionMismatch, EmptyList, InfiniteCoefficient
from conedual.oracles import dominates_on_grid, minkowski_by_scaling_scan

F = Fraction


def _rand_linfun(rng, dim, inf_chance=0):
    entries = []
    for _ in range(dim):
        if inf_chance and rng.randrange(inf_chance) == 0:
            entries.append(INF)
        else:
            entries.append(ExtReal(rng.randint(0, 6), rng.randint(1, 3)))
    return LinFun(entries)


def _rand_point(rng, dim, inf_chance=8):
    entries = []
    for _ in range(dim):
        if rng.randrange(inf_chance) == 0:
            entries.append(INF)
        else:
            entries.append(ExtReal(rng.randint(0, 8), rng.randint(1, 4)))
    return ExtVec(entries)


def test_eval_examples():
    assert LinFun([1, 1]).eval(ExtVec([2, 3])) == ExtReal(5)
    assert SuperlinFun([[2, 0], [0, 2]]).eval(ExtVec([1, 4])) == ExtReal(2)
    assert LinFun([0, 1]).eval(ExtVec([INF, 0])) == ZERO
    assert SublinFun([[2, 0], [0, 2]]).eval(ExtVec([1, 4])) == ExtReal(8)


def test_eval_validation():
    with pytest.raises(DimensionMismatch):
        LinFun([1, 1]).eval(ExtVec([1, 2, 3]))
    with pytest.raises(EmptyList):
        SublinFun([])
    with pytest.raises(DimensionMismatch):
        SublinFun([[1, 2], [1, 2, 3]])


def test_membership_examples():
    phi = LinFun([1, 1])
    assert member_u(phi, ExtVec([1, 1]))
    assert member_a(phi, ExtVec([ExtReal(1, 2), ExtReal(1, 2)]))
    zero = ExtVec([0, 0])
    for f in (phi, SublinFun([[3, 1]]), SuperlinFun([[5, INF]])):
        assert member_a(f, zero)
        assert not member_u(f, zero)


def test_membership_complementarity():
    rng = random.Random(3)
    for _ in range(60):
        dim = rng.randint(1, 4)
        f = SublinFun([_rand_linfun(rng, dim, 12) for _ in range(rng.randint(1, 3))])
        y = _rand_point(rng, dim)
        assert member_u(f, y) != member_a(f, y)


def test_minkowski_examples():
    assert minkowski(OpenSetRep([[[1, 1]]]), ExtVec([2, 3])) == ExtReal(5)
    assert minkowski(OpenSetRep([[[2, 0], [0, 2]]]), ExtVec([1, 4])) == ExtReal(2)
    assert minkowski(OpenSetRep([[[1, 1]], [[2, 0], [0, 2]]]), ExtVec([0, 0])) == ZERO
    assert minkowski(OpenSetRep([]), ExtVec([5, 5])) == ZERO


def test_minkowski_matches_min_of_block():
    rng = random.Random(17)
    for _ in range(50):
        dim = rng.randint(1, 4)
        block = [_rand_linfun(rng, dim, 10) for _ in range(rng.randint(1, 3))]
        rep = OpenSetRep([block])
        fun = SuperlinFun(block)
        for _ in range(8):
            y = _rand_point(rng, dim)
            assert minkowski(rep, y) == fun.eval(y)


def test_minkowski_scaling_scan():
    rep = OpenSetRep([[[1, 1]], [[2, 0], [0, 2]]])
    for y in (ExtVec([2, 3]), ExtVec([1, 4]), ExtVec([0, 0]), ExtVec([INF, 2])):
        value = minkowski(rep, y)
        probes = [ExtReal(1, 2), ONE, ExtReal(2), ExtReal(100)]
        if value.is_finite and not value.is_zero:
            v = value.as_fraction()
            probes += [ExtReal.from_fraction(v / 2), value, ExtReal.from_fraction(2 * v)]
        assert minkowski_by_scaling_scan(rep, y, probes)


def test_open_set_membership_is_union_of_blocks():
    rep = OpenSetRep([[[2, 0], [0, 2]], [[0, 3]]])
    assert rep.contains(ExtVec([2, 2]))          # first block
    assert rep.contains(ExtVec([0, ExtReal(1, 2)]))  # second block: 3 * 1/2 > 1
    assert not rep.contains(ExtVec([2, ExtReal(1, 4)]))


def test_dominated_by_max_examples():
    ok, lam = dominated_by_max(LinFun([1, 1]), SublinFun([[2, 0], [0, 2]]))
    assert ok and lam == (F(1, 2), F(1, 2))
    ok, lam = dominated_by_max(LinFun([2, 0]), SublinFun([[2, 0]]))
    assert ok and lam == (F(1),)
    ok, lam = dominated_by_max(LinFun([2, 1]), SublinFun([[2, 0], [0, 2]]))
    assert not ok and lam is None
    with pytest.raises(InfiniteCoefficient):
        dominated_by_max(LinFun([INF, 0]), SublinFun([[2, 0]]))


def test_dominated_by_max_agrees_with_grid_oracle():
    rng = random.Random(23)
    for _ in range(60):
        dim = rng.randint(1, 3)
        f = _rand_linfun(rng, dim)
        phi = SublinFun([_rand_linfun(rng, dim) for _ in range(rng.randint(1, 3))])
        ok, lam = dominated_by_max(f, phi)
        assert ok == dominates_on_grid(f, phi)
        if ok:
            # the certificate really is a simplex combination sitting above f
            assert sum(lam) == 1 and all(v >= 0 for v in lam)
            fc = f.fraction_coeffs()
            branches = [h.fraction_coeffs() for h in phi.branches]
            for j in range(dim):
                assert sum(l * b[j] for l, b in zip(lam, branches)) >= fc[j]


def test_specialization_order_examples():
    gens = [LinFun([1, 0]), LinFun([1, 1])]
    assert specialization_leq(ExtVec([1, 1]), ExtVec([2, 0]), gens)
    assert not specialization_leq(ExtVec([2, 0]), ExtVec([1, 1]), gens)
    assert specialization_leq(ExtVec([0, 0]), ExtVec([2, 0]), gens)


def test_specialization_order_is_a_preorder():
    rng = random.Random(7)
    gens = [LinFun([1, 0]), LinFun([1, 1]), LinFun([0, 2])]
    pts = [_rand_point(rng, 2) for _ in range(12)]
    for y in pts:
        assert specialization_leq(y, y, gens)
    for a in pts:
        for b in pts:
            for c in pts:
                if specialization_leq(a, b, gens) and specialization_leq(b, c, gens):
                    assert specialization_leq(a, c, gens)


def test_specialization_order_respects_cone_combinations():
    # pairings against generators bound pairings against every nonnegative
    # combination of them
    rng = random.Random(29)
    gens = [_rand_linfun(rng, 3, 10) for _ in range(3)]
    for _ in range(40):
        y = _rand_point(rng, 3)
        y2 = _rand_point(rng, 3)
        if not specialization_leq(y, y2, gens):
            continue
        coeffs = [ExtReal(rng.randint(0, 4), rng.randint(1, 3)) for _ in gens]
        combined = [ZERO, ZERO, ZERO]
        for c, g in zip(coeffs, gens):
            for j in range(3):
                combined[j] = combined[j] + c * g.coeffs[j]
        mix = LinFun(combined)
        assert mix.eval(y) <= mix.eval(y2)


def test_projection_regression():
    gens = [LinFun([1, 0]), LinFun([1, 1])]
    proj = LinFun([0, 1])
    y, y2 = ExtVec([1, 1]), ExtVec([2, 0])
    assert specialization_leq(y, y2, gens)
    assert proj.eval(y) == ONE
    assert proj.eval(y2) == ZERO
    assert not proj.eval(y) <= proj.eval(y2)


def test_leq_functional_examples():
    ok, wit = leq_functional(LinFun([1, 0]), LinFun([2, 0]))
    assert ok and wit is None
    ok, wit = leq_functional(SuperlinFun([[2, 0], [0, 2]]), LinFun([1, 1]))
    assert ok
    # the semi-decision's verdict agrees with a dense grid scan
    assert dominates_on_grid(SuperlinFun([[2, 0], [0, 2]]), LinFun([1, 1]))
    ok, wit = leq_functional(LinFun([1, 1]), SuperlinFun([[2, 0], [0, 2]]))
    assert not ok
    assert ONE < LinFun([1, 1]).eval(wit) or not SuperlinFun([[2, 0], [0, 2]]).eval(wit) >= LinFun([1, 1]).eval(wit)
    # the witness refutes the comparison exactly
    assert not LinFun([1, 1]).eval(wit) <= SuperlinFun([[2, 0], [0, 2]]).eval(wit)


def test_leq_functional_mixed_reps():
    ok, wit = leq_functional(SublinFun([[1, 0], [0, 1]]), SublinFun([[1, 1]]))
    assert ok
    ok, wit = leq_functional(SublinFun([[3, 0]]), SublinFun([[2, 0], [0, 2]]))
    assert not ok and wit is not None
    ok, wit = leq_functional(LinFun([0, INF]), LinFun([0, INF]))
    assert ok
    ok, wit = leq_functional(LinFun([0, INF]), LinFun([0, 1]))
    assert not ok


def test_leq_functional_refutations_carry_valid_witnesses():
    rng = random.Random(41)
    for _ in range(50):
        dim = rng.randint(1, 3)
        kinds = [LinFun, SublinFun, SuperlinFun]
        def make(kind):
            if kind is LinFun:
                return _rand_linfun(rng, dim, 10)
            return kind([_rand_linfun(rng, dim, 10) for _ in range(rng.randint(1, 3))])
        phi = make(kinds[rng.randrange(3)])
        psi = make(kinds[rng.randrange(3)])
        ok, wit = leq_functional(phi, psi, sample_budget=60, seed=101)
        if not ok:
            assert not phi.eval(wit) <= psi.eval(wit)


def test_unit_level_set_laws_pointwise():
    rng = random.Random(53)
    for _ in range(40):
        dim = rng.randint(1, 4)
        branches = [_rand_linfun(rng, dim, 12) for _ in range(rng.randint(1, 3))]
        low = SuperlinFun(branches)
        high = SublinFun(branches)
        for _ in range(10):
            y = _rand_point(rng, dim)
            assert member_u(low, y) == all(member_u(b, y) for b in branches)
            assert member_u(high, y) == any(member_u(b, y) for b in branches)


def test_order_matches_level_set_inclusion_on_samples():
    # phi <= psi exactly when the strict side of phi sits inside psi's
    rng = random.Random(59)
    for _ in range(30):
        dim = rng.randint(1, 3)
        phi = _rand_linfun(rng, dim)
        bump = LinFun([ExtReal(rng.randint(0, 3), rng.randint(1, 2)) for _ in range(dim)])
        psi = LinFun([a + b for a, b in zip(phi.coeffs, bump.coeffs)])
        ok, _ = leq_functional(phi, psi)
        assert ok
        for _ in range(8):
            y = _rand_point(rng, dim)
            if member_u(phi, y):
                assert member_u(psi, y)


def test_closed_side_is_convex_for_max_reps():
    rng = random.Random(61)
    ts = [F(0), F(1, 4), F(1, 2), F(3, 4), F(1)]
    for _ in range(25):
        dim = rng.randint(1, 3)
        phi = SublinFun([_rand_linfun(rng, dim, 12) for _ in range(rng.randint(1, 3))])
        inside = [y for y in (_rand_point(rng, dim) for _ in range(25)) if member_a(phi, y)]
        for a in inside[:4]:
            for b in inside[:4]:
                for t in ts:
                    combo = a.scale(ExtReal.from_fraction(t)) + b.scale(ExtReal.from_fraction(1 - t))
                    assert member_a(phi, combo)


def test_open_side_is_convex_for_min_reps():
    rng = random.Random(67)
    ts = [F(0), F(1, 2), F(1)]
    for _ in range(25):
        dim = rng.randint(1, 3)
        psi = SuperlinFun([_rand_linfun(rng, dim, 12) for _ in range(rng.randint(1, 3))])
        inside = [y for y in (_rand_point(rng, dim) for _ in range(25)) if member_u(psi, y)]
        for a in inside[:4]:
            for b in inside[:4]:
                for t in ts:
                    combo = a.scale(ExtReal.from_fraction(t)) + b.scale(ExtReal.from_fraction(1 - t))
                    assert member_u(psi, combo)


def test_homogeneity_including_zero_and_infinite_points():
    rng = random.Random(71)
    for _ in range(30):
        dim = rng.randint(1, 4)
        funs = [
            _rand_linfun(rng, dim, 10),
            SublinFun([_rand_linfun(rng, dim, 10) for _ in range(2)]),
            SuperlinFun([_rand_linfun(rng, dim, 10) for _ in range(2)]),
        ]
        y = _rand_point(rng, dim, inf_chance=5)
        for f in funs:
            for r in (ZERO, ExtReal(1, 2), ExtReal(2), ExtReal(7, 3)):
                assert f.eval(y.scale(r)) == r * f.eval(y)
