"""Finite T0 spaces as posets, their up-set topology, and the cone of
monotone extended-real functions.

On a finite poset the open sets are exactly the up-sets, and a function
into the extended nonnegative reals is lower semicontinuous exactly when it
is monotone.  Open sets are passed around as integer bitmasks over the
elements 0 .. n-1.
"""

from __future__ import annotations

from itertools import permutations

from .errors import (
    EmptyList,
    NotAntisymmetric,
    NotLSC,
    NotReflexive,
    NotTransitive,
    NotUpSet,
    PosetMismatch,
    TooLarge,
)
from .extreal import ZERO, ExtReal, as_extreal, ext_max, ext_min

_MAX_OPENS_SIZE = 12
_MAX_ISO_SIZE = 5


class FinitePoset:
    """Validated partial order on elements 0 .. size-1."""

    __slots__ = ("n", "_leq", "_up")

    def __init__(self, table):
        rows = [tuple(bool(v) for v in row) for row in table]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("relation table must be square and nonempty")
        for i in range(n):
            if not rows[i][i]:
                raise NotReflexive(i)
        for i in range(n):
            for j in range(n):
                if i != j and rows[i][j] and rows[j][i]:
                    raise NotAntisymmetric(i, j)
        for i in range(n):
            for j in range(n):
                if rows[i][j]:
                    for k in range(n):
                        if rows[j][k] and not rows[i][k]:
                            raise NotTransitive(i, j, k)
        self.n = n
        self._leq = rows
        self._up = tuple(
            sum(1 << j for j in range(n) if rows[i][j]) for i in range(n)
        )

    @classmethod
    def from_pairs(cls, size, pairs, add_reflexive=True):
        table = [[i == j and add_reflexive for j in range(size)] for i in range(size)]
        for i, j in pairs:
            if not (0 <= i < size and 0 <= j < size):
                raise ValueError(f"pair ({i}, {j}) outside 0..{size - 1}")
            table[i][j] = True
        return cls(table)

    def leq(self, i, j) -> bool:
        return self._leq[i][j]

    def up_mask(self, i) -> int:
        """Bitmask of the principal filter of i."""
        return self._up[i]

    def is_up_closed(self, mask) -> bool:
        for i in range(self.n):
            if mask >> i & 1 and self._up[i] & ~mask:
                return False
        return True

    def pairs(self):
        return [(i, j) for i in range(self.n) for j in range(self.n) if self._leq[i][j]]

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self._leq == other._leq

    def __hash__(self):
        return hash(self._leq)

    def __repr__(self):
        rel = [(i, j) for i, j in self.pairs() if i != j]
        return f"FinitePoset(n={self.n}, leq={rel})"


def validate_poset(table) -> FinitePoset:
    """Validate a square relation table; raises with a witness on failure."""
    return FinitePoset(table)


def all_opens(poset: FinitePoset, max_size: int = _MAX_OPENS_SIZE):
    """All up-sets as bitmasks, in ascending mask order."""
    if poset.n > max_size:
        raise TooLarge(f"open-set enumeration is capped at {max_size} elements")
    return [mask for mask in range(1 << poset.n) if poset.is_up_closed(mask)]


def is_lsc(values, poset: FinitePoset):
    """Monotonicity check; returns (True, None) or (False, violating pair)."""
    vals = [as_extreal(v) for v in values]
    if len(vals) != poset.n:
        raise ValueError(f"expected {poset.n} values, got {len(vals)}")
    for i in range(poset.n):
        for j in range(poset.n):
            if poset.leq(i, j) and not vals[i] <= vals[j]:
                return False, (i, j)
    return True, None


class LscFun:
    """Monotone function from a finite poset into the extended reals."""

    __slots__ = ("poset", "values")

    def __init__(self, poset: FinitePoset, values):
        vals = tuple(as_extreal(v) for v in values)
        ok, pair = is_lsc(vals, poset)
        if not ok:
            raise NotLSC(pair)
        self.poset = poset
        self.values = vals

    def __getitem__(self, i) -> ExtReal:
        return self.values[i]

    def __add__(self, other):
        if not isinstance(other, LscFun):
            return NotImplemented
        _same_poset(self, other)
        return LscFun(self.poset, tuple(a + b for a, b in zip(self.values, other.values)))

    def scale(self, r) -> "LscFun":
        r = as_extreal(r)
        return LscFun(self.poset, tuple(r * v for v in self.values))

    @classmethod
    def sup(cls, funs):
        funs = list(funs)
        if not funs:
            raise EmptyList("sup over an empty family")
        for f in funs[1:]:
            _same_poset(funs[0], f)
        n = funs[0].poset.n
        return cls(funs[0].poset, tuple(ext_max(f[i] for f in funs) for i in range(n)))

    @classmethod
    def inf(cls, funs):
        funs = list(funs)
        if not funs:
            raise EmptyList("inf over an empty family")
        for f in funs[1:]:
            _same_poset(funs[0], f)
        n = funs[0].poset.n
        return cls(funs[0].poset, tuple(ext_min(f[i] for f in funs) for i in range(n)))

    def __eq__(self, other):
        if not isinstance(other, LscFun):
            return NotImplemented
        return self.poset == other.poset and self.values == other.values

    def __hash__(self):
        return hash((self.poset, self.values))

    def __repr__(self):
        return "LscFun(" + ", ".join(str(v) for v in self.values) + ")"


def _same_poset(a, b):
    if a.poset != b.poset:
        raise PosetMismatch("operands live over different posets")


def step(poset: FinitePoset, r, open_mask: int) -> LscFun:
    """The function r on the open set and zero elsewhere."""
    if not poset.is_up_closed(open_mask):
        raise NotUpSet(f"mask {open_mask:b} is not an up-set", witness=open_mask)
    r = as_extreal(r)
    return LscFun(poset, tuple(r if open_mask >> i & 1 else ZERO for i in range(poset.n)))


def to_steps(f: LscFun):
    """Decompose into steps whose pointwise supremum is exactly f.

    One step per distinct nonzero value v, supported on the up-set where f
    reaches at least v.  Returned in ascending value order.
    """
    levels = sorted({v for v in f.values if not v.is_zero})
    out = []
    for v in levels:
        mask = sum(1 << i for i in range(f.poset.n) if v <= f[i])
        out.append((v, mask))
    return out


def _is_transitive(n, rel):
    adj = [set() for _ in range(n)]
    for i, j in rel:
        adj[i].add(j)
    for i in range(n):
        for j in adj[i]:
            for k in adj[j]:
                if k not in adj[i]:
                    return False
    return True


def _canonical_key(n, rel):
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted((perm[i], perm[j]) for i, j in rel))
        if best is None or key < best:
            best = key
    return best


def posets_up_to_iso(n: int):
    """All posets on n elements up to isomorphism, in a canonical order.

    Representatives are topologically labelled: i <= j in the order implies
    i <= j as integers.
    """
    if n < 1:
        raise ValueError("poset size must be positive")
    if n > _MAX_ISO_SIZE:
        raise TooLarge(f"poset enumeration is capped at {_MAX_ISO_SIZE} elements")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    found = {}
    for bits in range(1 << len(pairs)):
        rel = [pairs[t] for t in range(len(pairs)) if bits >> t & 1]
        if not _is_transitive(n, rel):
            continue
        key = _canonical_key(n, rel)
        if key not in found:
            found[key] = rel
    posets = []
    for key in sorted(found):
        posets.append(FinitePoset.from_pairs(n, found[key]))
    return posets
