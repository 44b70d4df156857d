"""Number shapes: concrete presentations of nat/int/rat numbers.

A label names a kind of number (nat, int, rat); a shape is one concrete way
of presenting those numbers, carrying two equalities:

* instance equality ``=S`` - structural identity of representations;
* label equality ``=L`` - "denotes the same number".

A shape is normal when the two coincide on its whole domain, subnormal when
label equality is strictly coarser. ``decode`` maps instances to exact
integers/rationals; it exists for testing and conversion, not as part of the
shape vocabulary itself.

Pair-valued shapes store plain Python integers as components; the integer
shape parameter of the ratio-number construction is session configuration
(see the ratio module), since all supported integer shapes present the same
numbers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from . import ratio
from .errors import (
    CapacityError,
    LabelMismatch,
    NegativeIntoNat,
    ShapeMismatch,
    UnsupportedOperation,
    UnsupportedShape,
)
from .terms import Div, Lit, classify, format_term, parse_term

LABELS = ("nat", "int", "rat")

# Recognized labels whose shapes are infinite objects; requests are refused.
REJECTED_LABELS = ("real", "complex")

# Size cap for the set-theoretic naturals.
SET_NAT_CAP = 1 << 16


class _Bot:
    """Marker returned by rational division when the shape has no bottom instance."""

    def __repr__(self):
        return "bot"


BOT = _Bot()


@dataclass(frozen=True)
class Instance:
    shape_id: str
    payload: object


@dataclass(frozen=True)
class ShapeDescriptor:
    label: str
    shape_id: str
    normal: bool


@dataclass(frozen=True)
class NormalityReport:
    shape_id: str
    bound: int
    normal: bool
    witness: Optional[tuple[Instance, Instance]]


Number = Union[int, Fraction]


class Shape:
    shape_id: str = ""
    label: str = ""
    normal: bool = True
    operations: tuple[str, ...] = ()

    # -- construction -------------------------------------------------

    def make(self, payload) -> Instance:
        self.validate(payload)
        return Instance(self.shape_id, payload)

    def validate(self, payload) -> None:
        raise NotImplementedError

    def encode(self, k: int) -> Instance:
        """Canonical instance for an external integer."""
        raise NotImplementedError

    def encode_exact(self, value: Number) -> Instance:
        if isinstance(value, Fraction) and value.denominator != 1:
            raise UnsupportedOperation(f"{self.shape_id} holds no non-integer values")
        return self.encode(int(value))

    def decode(self, inst: Instance) -> Optional[Number]:
        """Exact value of an instance; None for a bottom-class instance."""
        raise NotImplementedError

    # -- equality ------------------------------------------------------

    def instance_eq(self, i: Instance, j: Instance) -> bool:
        return i.payload == j.payload

    def label_eq(self, i: Instance, j: Instance) -> bool:
        return self.decode(i) == self.decode(j)

    # -- arithmetic ----------------------------------------------------

    def add(self, i: Instance, j: Instance) -> Instance:
        raise UnsupportedOperation(f"{self.shape_id} has no addition")

    def mul(self, i: Instance, j: Instance) -> Instance:
        raise UnsupportedOperation(f"{self.shape_id} has no multiplication")

    def neg(self, i: Instance) -> Instance:
        raise UnsupportedOperation(f"{self.shape_id} has no negation")

    def div(self, i: Instance, j: Instance):
        raise UnsupportedOperation(f"{self.shape_id} has no division")

    # -- bounded enumeration (for normality checks) ---------------------

    def bounded_instances(self, bound: int) -> Iterator[Instance]:
        raise NotImplementedError

    # -- JSON ------------------------------------------------------------

    def payload_to_json(self, payload):
        return payload

    def payload_from_json(self, data):
        return data


# ---------------------------------------------------------------------------
# nat shapes


class _DecimalNat(Shape):
    """Digit strings, redundant leading zeroes allowed. Subnormal: 007 =L 7."""

    shape_id = "nat.dec"
    label = "nat"
    normal = False
    operations = ("add", "mul")

    def validate(self, payload):
        if not isinstance(payload, str) or not payload or not payload.isdigit():
            raise UnsupportedShape(f"bad decimal payload {payload!r}")

    def encode(self, k):
        if k < 0:
            raise NegativeIntoNat(f"{k} < 0")
        return Instance(self.shape_id, str(k))

    def decode(self, inst):
        return int(inst.payload)

    def add(self, i, j):
        return self.encode(self.decode(i) + self.decode(j))

    def mul(self, i, j):
        return self.encode(self.decode(i) * self.decode(j))

    def bounded_instances(self, bound):
        max_len = len(str(bound)) + 2
        digits = "0123456789"
        for length in range(1, max_len + 1):
            for tup in itertools.product(digits, repeat=length):
                yield Instance(self.shape_id, "".join(tup))


class _StrictDecimalNat(_DecimalNat):
    """Digit strings without redundant leading zeroes."""

    shape_id = "nat.sdn"
    normal = True

    def validate(self, payload):
        super().validate(payload)
        if payload != str(int(payload)):
            raise UnsupportedShape(f"redundant leading zero in {payload!r}")

    def bounded_instances(self, bound):
        for k in range(bound + 1):
            yield self.encode(k)


class _DedekindNat(Shape):
    """Successor counts: the instance for k stands for k applications of S to 0."""

    shape_id = "nat.dedekind"
    label = "nat"
    normal = True
    operations = ("add", "mul")

    def validate(self, payload):
        if not isinstance(payload, int) or payload < 0:
            raise UnsupportedShape(f"bad successor count {payload!r}")

    def encode(self, k):
        if k < 0:
            raise NegativeIntoNat(f"{k} < 0")
        return Instance(self.shape_id, k)

    def decode(self, inst):
        return inst.payload

    def add(self, i, j):
        return Instance(self.shape_id, i.payload + j.payload)

    def mul(self, i, j):
        return Instance(self.shape_id, i.payload * j.payload)

    def bounded_instances(self, bound):
        for k in range(bound + 1):
            yield self.encode(k)


def _vn_succ(s: frozenset) -> frozenset:
    return s | frozenset([s])


def _set_sorted(s: frozenset) -> list:
    return sorted(s, key=len)


class _VonNeumannNat(Shape):
    """Nested sets with n = {0, ..., n-1}; order coincides with membership."""

    shape_id = "nat.vn"
    label = "nat"
    normal = True
    operations = ("add", "mul")

    def validate(self, payload):
        if not isinstance(payload, frozenset):
            raise UnsupportedShape("von Neumann payload must be a frozenset")
        if payload != self.encode(len(payload)).payload:
            raise UnsupportedShape("not a von Neumann natural")

    def encode(self, k):
        if k < 0:
            raise NegativeIntoNat(f"{k} < 0")
        if k > SET_NAT_CAP:
            raise CapacityError(f"{k} exceeds the set-nat cap {SET_NAT_CAP}")
        s = frozenset()
        for _ in range(k):
            s = _vn_succ(s)
        return Instance(self.shape_id, s)

    def decode(self, inst):
        return len(inst.payload)

    def _count(self, inst) -> int:
        return len(inst.payload)

    def add(self, i, j):
        s = i.payload
        for _ in range(self._count(j)):
            s = _vn_succ(s)
        if len(s) > SET_NAT_CAP:
            raise CapacityError("sum exceeds the set-nat cap")
        return Instance(self.shape_id, s)

    def mul(self, i, j):
        return self.encode(self._count(i) * self._count(j))

    def bounded_instances(self, bound):
        s = frozenset()
        yield Instance(self.shape_id, s)
        for _ in range(bound):
            s = _vn_succ(s)
            yield Instance(self.shape_id, s)

    def payload_to_json(self, payload):
        return [self.payload_to_json(e) for e in _set_sorted(payload)]

    def payload_from_json(self, data):
        return frozenset(self.payload_from_json(e) for e in data)


def _zermelo_succ(s: frozenset) -> frozenset:
    return frozenset([s])


def _zermelo_depth(s: frozenset) -> int:
    depth = 0
    while s:
        (s,) = tuple(s)
        depth += 1
    return depth


class _ZermeloNat(Shape):
    """Singleton chains: n+1 = {n}."""

    shape_id = "nat.zermelo"
    label = "nat"
    normal = True
    operations = ("add", "mul")

    def validate(self, payload):
        if not isinstance(payload, frozenset):
            raise UnsupportedShape("Zermelo payload must be a frozenset")
        s = payload
        while s:
            if len(s) != 1:
                raise UnsupportedShape("not a Zermelo natural")
            (s,) = tuple(s)
            if not isinstance(s, frozenset):
                raise UnsupportedShape("not a Zermelo natural")

    def encode(self, k):
        if k < 0:
            raise NegativeIntoNat(f"{k} < 0")
        if k > SET_NAT_CAP:
            raise CapacityError(f"{k} exceeds the set-nat cap {SET_NAT_CAP}")
        s = frozenset()
        for _ in range(k):
            s = _zermelo_succ(s)
        return Instance(self.shape_id, s)

    def decode(self, inst):
        return _zermelo_depth(inst.payload)

    def add(self, i, j):
        s = i.payload
        for _ in range(_zermelo_depth(j.payload)):
            s = _zermelo_succ(s)
        return Instance(self.shape_id, s)

    def mul(self, i, j):
        return self.encode(_zermelo_depth(i.payload) * _zermelo_depth(j.payload))

    def bounded_instances(self, bound):
        s = frozenset()
        yield Instance(self.shape_id, s)
        for _ in range(bound):
            s = _zermelo_succ(s)
            yield Instance(self.shape_id, s)

    def payload_to_json(self, payload):
        return [self.payload_to_json(e) for e in payload]

    def payload_from_json(self, data):
        return frozenset(self.payload_from_json(e) for e in data)


# ---------------------------------------------------------------------------
# int shapes


class _SignedInt(Shape):
    """("+", magnitude) / ("-", magnitude) pairs plus a single unsigned zero."""

    shape_id = "int.signed"
    label = "int"
    normal = True
    operations = ("add", "mul", "neg")

    def validate(self, payload):
        if payload == "0":
            return
        ok = (
            isinstance(payload, tuple)
            and len(payload) == 2
            and payload[0] in "+-"
            and isinstance(payload[1], str)
            and payload[1].isdigit()
            and payload[1] == str(int(payload[1]))
            and int(payload[1]) != 0
        )
        if not ok:
            raise UnsupportedShape(f"bad signed-int payload {payload!r}")

    def encode(self, k):
        if k == 0:
            return Instance(self.shape_id, "0")
        sign = "+" if k > 0 else "-"
        return Instance(self.shape_id, (sign, str(abs(k))))

    def decode(self, inst):
        if inst.payload == "0":
            return 0
        sign, mag = inst.payload
        return int(mag) if sign == "+" else -int(mag)

    def add(self, i, j):
        return self.encode(self.decode(i) + self.decode(j))

    def mul(self, i, j):
        return self.encode(self.decode(i) * self.decode(j))

    def neg(self, i):
        if i.payload == "0":
            return i
        sign, mag = i.payload
        return Instance(self.shape_id, ("-" if sign == "+" else "+", mag))

    def bounded_instances(self, bound):
        for k in range(-bound, bound + 1):
            yield self.encode(k)

    def payload_to_json(self, payload):
        return payload if payload == "0" else [payload[0], payload[1]]

    def payload_from_json(self, data):
        return data if data == "0" else (data[0], data[1])


class _DiffPairInt(Shape):
    """Difference pairs (a, b) of naturals standing for a - b. Subnormal."""

    shape_id = "int.diffpair"
    label = "int"
    normal = False
    operations = ("add", "mul", "neg")

    def validate(self, payload):
        ok = (
            isinstance(payload, tuple)
            and len(payload) == 2
            and all(isinstance(x, int) and x >= 0 for x in payload)
        )
        if not ok:
            raise UnsupportedShape(f"bad difference pair {payload!r}")

    def encode(self, k):
        return Instance(self.shape_id, (k, 0) if k >= 0 else (0, -k))

    def decode(self, inst):
        a, b = inst.payload
        return a - b

    def label_eq(self, i, j):
        a, b = i.payload
        c, d = j.payload
        return a + d == c + b

    def add(self, i, j):
        a, b = i.payload
        c, d = j.payload
        return Instance(self.shape_id, (a + c, b + d))

    def mul(self, i, j):
        a, b = i.payload
        c, d = j.payload
        return Instance(self.shape_id, (a * c + b * d, a * d + b * c))

    def neg(self, i):
        a, b = i.payload
        return Instance(self.shape_id, (b, a))

    def bounded_instances(self, bound):
        for a in range(bound + 1):
            for b in range(bound + 1):
                yield Instance(self.shape_id, (a, b))

    def payload_to_json(self, payload):
        return list(payload)

    def payload_from_json(self, data):
        return (int(data[0]), int(data[1]))


# ---------------------------------------------------------------------------
# rat shapes


def _pcs_canonical(a: int, b: int) -> tuple[int, int]:
    # All pairs with zero second component form one class; its
    # representative is (0, 0).
    if b == 0:
        return (0, 0)
    if b < 0:
        a, b = -a, -b
    g = math.gcd(abs(a), b)
    return (a // g, b // g)


class _PairClassRat(Shape):
    """Classes of integer pairs, held by canonical representatives.

    The class of all (a, 0) pairs is the shape's bottom, representative
    (0, 0). Canonicalization makes instance equality coincide with label
    equality, so the shape is normal.
    """

    shape_id = "rat.pcs"
    label = "rat"
    normal = True
    operations = ("add", "mul", "neg", "div")

    def validate(self, payload):
        ok = (
            isinstance(payload, tuple)
            and len(payload) == 2
            and all(isinstance(x, int) for x in payload)
            and payload == _pcs_canonical(*payload)
        )
        if not ok:
            raise UnsupportedShape(f"not a canonical pair: {payload!r}")

    def encode(self, k):
        return Instance(self.shape_id, (k, 1))

    def encode_exact(self, value):
        q = Fraction(value)
        return Instance(self.shape_id, (q.numerator, q.denominator))

    def encode_bottom(self):
        return Instance(self.shape_id, (0, 0))

    def decode(self, inst):
        a, b = inst.payload
        return None if b == 0 else Fraction(a, b)

    def label_eq(self, i, j):
        a, b = i.payload
        c, d = j.payload
        return (b == 0 and d == 0) or (b != 0 and d != 0 and a * d == b * c)

    def _wrap(self, a, b):
        return Instance(self.shape_id, _pcs_canonical(a, b))

    def add(self, i, j):
        a, b = i.payload
        c, d = j.payload
        return self._wrap(a * d + b * c, b * d)

    def mul(self, i, j):
        a, b = i.payload
        c, d = j.payload
        return self._wrap(a * c, b * d)

    def neg(self, i):
        a, b = i.payload
        return self._wrap(-a, b)

    def div(self, i, j):
        a, b = i.payload
        c, d = j.payload
        return self._wrap(a * d, b * c)

    def bounded_instances(self, bound):
        yield Instance(self.shape_id, (0, 0))
        for b in range(1, bound + 1):
            for a in range(-bound, bound + 1):
                if math.gcd(abs(a), b) == 1:
                    yield Instance(self.shape_id, (a, b))

    def payload_to_json(self, payload):
        return list(payload)

    def payload_from_json(self, data):
        return (int(data[0]), int(data[1]))


class _SimplifiedFractermRat(Shape):
    """Rationals presented as their simplified simple fracterms.

    Numbers here *are* terms, so the shape has no bottom instance: no
    simplified simple fracterm has a zero denominator.
    """

    shape_id = "rat.ssft"
    label = "rat"
    normal = True
    operations = ("add", "mul", "neg", "div")

    def validate(self, payload):
        if not (isinstance(payload, Div) and classify(payload).simplified):
            raise UnsupportedShape(f"not a simplified simple fracterm: {payload!r}")

    def encode(self, k):
        return Instance(self.shape_id, Div(Lit(str(k)), Lit("1")))

    def encode_exact(self, value):
        q = Fraction(value)
        return Instance(self.shape_id, Div(Lit(str(q.numerator)), Lit(str(q.denominator))))

    def decode(self, inst):
        t = inst.payload
        return Fraction(t.left.value, t.right.value)

    def add(self, i, j):
        return self.encode_exact(self.decode(i) + self.decode(j))

    def mul(self, i, j):
        return self.encode_exact(self.decode(i) * self.decode(j))

    def neg(self, i):
        return self.encode_exact(-self.decode(i))

    def div(self, i, j):
        d = self.decode(j)
        if d == 0:
            return BOT
        return self.encode_exact(self.decode(i) / d)

    def bounded_instances(self, bound):
        for b in range(1, bound + 1):
            for a in range(-bound, bound + 1):
                if math.gcd(abs(a), b) == 1:
                    yield Instance(self.shape_id, Div(Lit(str(a)), Lit(str(b))))

    def payload_to_json(self, payload):
        return format_term(payload)

    def payload_from_json(self, data):
        return parse_term(data)


class _RatioNumberRat(Shape):
    """Raw integer pairs as numbers: no canonicalization, hence subnormal."""

    shape_id = "rat.rns"
    label = "rat"
    normal = False
    operations = ("add", "mul", "neg", "div")

    def validate(self, payload):
        ok = (
            isinstance(payload, tuple)
            and len(payload) == 2
            and all(isinstance(x, int) for x in payload)
        )
        if not ok:
            raise UnsupportedShape(f"bad ratio-number payload {payload!r}")

    def encode(self, k):
        return Instance(self.shape_id, (k, 1))

    def encode_exact(self, value):
        q = Fraction(value)
        return Instance(self.shape_id, (q.numerator, q.denominator))

    def encode_bottom(self):
        return Instance(self.shape_id, (0, 0))

    def _rn(self, inst) -> ratio.RatioNumber:
        return ratio.RatioNumber(*inst.payload)

    def _wrap(self, rn: ratio.RatioNumber) -> Instance:
        return Instance(self.shape_id, (rn.a, rn.b))

    def decode(self, inst):
        a, b = inst.payload
        return None if b == 0 else Fraction(a, b)

    def label_eq(self, i, j):
        return ratio.rn_label_eq(self._rn(i), self._rn(j))

    def add(self, i, j):
        return self._wrap(ratio.rn_add(self._rn(i), self._rn(j)))

    def mul(self, i, j):
        return self._wrap(ratio.rn_mul(self._rn(i), self._rn(j)))

    def neg(self, i):
        return self._wrap(ratio.rn_neg(self._rn(i)))

    def div(self, i, j):
        return self._wrap(ratio.rn_div(self._rn(i), self._rn(j)))

    def bounded_instances(self, bound):
        span = min(bound, 8)
        for m in range(span + 1):
            for a in range(-m, m + 1):
                for b in range(-m, m + 1):
                    if max(abs(a), abs(b)) == m:
                        yield Instance(self.shape_id, (a, b))

    def payload_to_json(self, payload):
        return list(payload)

    def payload_from_json(self, data):
        return (int(data[0]), int(data[1]))


# ---------------------------------------------------------------------------
# Registry and module-level operations

_SHAPES: dict[str, Shape] = {
    s.shape_id: s
    for s in (
        _DecimalNat(),
        _StrictDecimalNat(),
        _DedekindNat(),
        _VonNeumannNat(),
        _ZermeloNat(),
        _SignedInt(),
        _DiffPairInt(),
        _PairClassRat(),
        _SimplifiedFractermRat(),
        _RatioNumberRat(),
    )
}

SHAPE_IDS = tuple(_SHAPES)


def get_shape(shape_id: str) -> Shape:
    if shape_id in _SHAPES:
        return _SHAPES[shape_id]
    head = shape_id.split(".", 1)[0]
    if head in REJECTED_LABELS:
        raise UnsupportedShape(
            f"label {head!r} is recognized but has only infinite presentations"
        )
    raise UnsupportedShape(f"unknown shape {shape_id!r}")


def describe(shape_id: str) -> ShapeDescriptor:
    s = get_shape(shape_id)
    return ShapeDescriptor(label=s.label, shape_id=s.shape_id, normal=s.normal)


def _pair_shape(i: Instance, j: Instance) -> Shape:
    if i.shape_id != j.shape_id:
        raise ShapeMismatch(f"{i.shape_id} vs {j.shape_id}")
    return get_shape(i.shape_id)


def encode(k: int, shape_id: str) -> Instance:
    return get_shape(shape_id).encode(k)


def decode(inst: Instance) -> Optional[Number]:
    return get_shape(inst.shape_id).decode(inst)


def make_instance(shape_id: str, payload) -> Instance:
    return get_shape(shape_id).make(payload)


def instance_eq(i: Instance, j: Instance) -> bool:
    return _pair_shape(i, j).instance_eq(i, j)


def label_eq(i: Instance, j: Instance) -> bool:
    return _pair_shape(i, j).label_eq(i, j)


def shape_add(i: Instance, j: Instance) -> Instance:
    return _pair_shape(i, j).add(i, j)


def shape_mul(i: Instance, j: Instance) -> Instance:
    return _pair_shape(i, j).mul(i, j)


def shape_neg(i: Instance) -> Instance:
    return get_shape(i.shape_id).neg(i)


def shape_div(i: Instance, j: Instance):
    return _pair_shape(i, j).div(i, j)


def convert(inst: Instance, target_id: str) -> Instance:
    src = get_shape(inst.shape_id)
    dst = get_shape(target_id)
    if src.label != dst.label:
        raise LabelMismatch(f"{src.label} instance cannot become {dst.label}")
    value = src.decode(inst)
    if value is None:
        if hasattr(dst, "encode_bottom"):
            return dst.encode_bottom()
        raise UnsupportedOperation(f"{target_id} has no bottom-class instance")
    return dst.encode_exact(value)


def instance_to_json(inst: Instance):
    return {"shape": inst.shape_id, "value": get_shape(inst.shape_id).payload_to_json(inst.payload)}


def instance_from_json(data) -> Instance:
    shape = get_shape(data["shape"])
    return shape.make(shape.payload_from_json(data["value"]))


def normality_report(shape_id: str, bound: int) -> NormalityReport:
    """Search the bounded domain for a pair that is label-equal but not
    instance-equal; exhaustion without a witness reports the shape normal.

    For rat shapes the domain is bounded by pair components rather than by
    decoded magnitude, which is not finitely enumerable.
    """
    if bound < 1:
        raise UnsupportedOperation("bound must be at least 1")
    shape = get_shape(shape_id)
    seen: dict[object, Instance] = {}
    for inst in shape.bounded_instances(bound):
        key = shape.decode(inst)
        prev = seen.get(key)
        if prev is None:
            seen[key] = inst
            continue
        if not shape.instance_eq(prev, inst) and shape.label_eq(prev, inst):
            return NormalityReport(shape_id, bound, False, (prev, inst))
    return NormalityReport(shape_id, bound, True, None)


def is_normal(shape_id: str, bound: int) -> bool:
    return normality_report(shape_id, bound).normal
