"""Decoding and encoding of the wire formats used by the CLI.

Decoders raise ParseError with the JSON path of the offending field, so
malformed input reports where and what was expected.
"""

from __future__ import annotations

from fractions import Fraction

from .convex_sep import ExtVec
from .errors import ParseError
from .extreal import ExtReal, parse_extreal
from .finspace import FinitePoset
from .functionals import LinFun, OpenSetRep, SublinFun, SuperlinFun
from .valuations import SimpleValuation, ValuationOnOpens


def fail(path, expected, got):
    raise ParseError(f"{path}: expected {expected}, got {got!r}")


def decode_extreal(obj, path) -> ExtReal:
    if isinstance(obj, str):
        try:
            return parse_extreal(obj)
        except ParseError as exc:
            raise ParseError(f"{path}: {exc}") from None
    if isinstance(obj, bool) or not isinstance(obj, int):
        fail(path, '"p/q", "p", or "inf"', obj)
    if obj < 0:
        fail(path, "a nonnegative value", obj)
    return ExtReal(obj)


def decode_fraction(obj, path) -> Fraction:
    v = decode_extreal(obj, path)
    if v.is_infinite:
        fail(path, "a finite rational", obj)
    return v.as_fraction()


def decode_vector(obj, path) -> ExtVec:
    if not isinstance(obj, list) or not obj:
        fail(path, "a nonempty array of extended rationals", obj)
    return ExtVec([decode_extreal(v, f"{path}[{i}]") for i, v in enumerate(obj)])


def decode_int(obj, path, minimum=None) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        fail(path, "an integer", obj)
    if minimum is not None and obj < minimum:
        fail(path, f"an integer >= {minimum}", obj)
    return obj


def require_key(obj, key, path):
    if not isinstance(obj, dict):
        fail(path, "an object", obj)
    if key not in obj:
        raise ParseError(f"{path}: missing key {key!r}")
    return obj[key]


def decode_functional(obj, path):
    kind = require_key(obj, "kind", path)
    if kind == "lin":
        return LinFun(decode_vector(require_key(obj, "coeffs", path), f"{path}.coeffs"))
    if kind in ("max", "min"):
        raw = require_key(obj, "branches", path)
        if not isinstance(raw, list) or not raw:
            fail(f"{path}.branches", "a nonempty array of coefficient arrays", raw)
        branches = [
            LinFun(decode_vector(b, f"{path}.branches[{i}]")) for i, b in enumerate(raw)
        ]
        return SublinFun(branches) if kind == "max" else SuperlinFun(branches)
    fail(f"{path}.kind", '"lin", "max", or "min"', kind)


def decode_sublinear(obj, path) -> SublinFun:
    f = decode_functional(obj, path)
    if isinstance(f, LinFun):
        return SublinFun([f])
    if isinstance(f, SublinFun):
        return f
    fail(f"{path}.kind", '"lin" or "max"', "min")


def decode_open_set(obj, path) -> OpenSetRep:
    raw = require_key(obj, "blocks", path)
    if not isinstance(raw, list):
        fail(f"{path}.blocks", "an array of blocks", raw)
    blocks = []
    for i, block in enumerate(raw):
        if not isinstance(block, list) or not block:
            fail(f"{path}.blocks[{i}]", "a nonempty array of coefficient arrays", block)
        blocks.append(
            [
                LinFun(decode_vector(b, f"{path}.blocks[{i}][{k}]"))
                for k, b in enumerate(block)
            ]
        )
    return OpenSetRep(blocks)


def decode_poset(obj, path) -> FinitePoset:
    size = decode_int(require_key(obj, "size", path), f"{path}.size", minimum=1)
    raw = require_key(obj, "leq", path)
    if not isinstance(raw, list):
        fail(f"{path}.leq", "an array of [i, j] pairs", raw)
    pairs = []
    for i, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            fail(f"{path}.leq[{i}]", "a pair [i, j]", pair)
        a = decode_int(pair[0], f"{path}.leq[{i}][0]", minimum=0)
        b = decode_int(pair[1], f"{path}.leq[{i}][1]", minimum=0)
        if a >= size or b >= size:
            fail(f"{path}.leq[{i}]", f"indices below {size}", pair)
        pairs.append((a, b))
    return FinitePoset.from_pairs(size, pairs)


def decode_valuation(obj, poset, path) -> SimpleValuation:
    raw = require_key(obj, "weights", path)
    if not isinstance(raw, list) or len(raw) != poset.n:
        fail(f"{path}.weights", f"an array of {poset.n} extended rationals", raw)
    return SimpleValuation(
        poset, [decode_extreal(v, f"{path}.weights[{i}]") for i, v in enumerate(raw)]
    )


def decode_open_table(obj, poset, path) -> ValuationOnOpens:
    raw = require_key(obj, "table", path)
    if not isinstance(raw, list):
        fail(f"{path}.table", 'an array of {"open": [...], "value": ...}', raw)
    table = {}
    for i, entry in enumerate(raw):
        members = require_key(entry, "open", f"{path}.table[{i}]")
        if not isinstance(members, list):
            fail(f"{path}.table[{i}].open", "an array of element indices", members)
        mask = 0
        for k, e in enumerate(members):
            idx = decode_int(e, f"{path}.table[{i}].open[{k}]", minimum=0)
            if idx >= poset.n:
                fail(f"{path}.table[{i}].open[{k}]", f"indices below {poset.n}", e)
            mask |= 1 << idx
        value = decode_extreal(require_key(entry, "value", f"{path}.table[{i}]"), f"{path}.table[{i}].value")
        if mask in table:
            raise ParseError(f"{path}.table[{i}]: duplicate open set")
        table[mask] = value
    try:
        return ValuationOnOpens(poset, table)
    except ValueError as exc:
        raise ParseError(f"{path}.table: {exc}") from None


def encode_extreal(v: ExtReal) -> str:
    return str(v)


def encode_fraction(v) -> str:
    f = Fraction(v)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def encode_vector(vec) -> list:
    return [str(v) for v in vec]


def encode_fractions(values) -> list:
    return [encode_fraction(v) for v in values]


def mask_to_indices(mask: int) -> list:
    out = []
    i = 0
    while mask >> i:
        if mask >> i & 1:
            out.append(i)
        i += 1
    return out
