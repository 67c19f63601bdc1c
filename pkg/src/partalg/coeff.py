"""Exact coefficient rings.

Two modes share one interface:

* ``rational`` -- the parameter ``d`` is a fixed exact rational and scalars
  are :class:`fractions.Fraction`.
* ``poly`` -- ``d`` stays formal and scalars are :class:`DeltaPoly`, i.e.
  elements of Q[d].

A computation picks one :class:`Ring` and never mixes the two.  Python ints
are accepted everywhere as mode-neutral integer constants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class ModeError(TypeError):
    """Raised when rational-mode and poly-mode scalars are combined."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.  Decimals are rejected."""
    m = _RATIONAL_RE.match(str(text))
    if m is None:
        raise ValueError(f"not an exact rational: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class DeltaPoly:
    """Univariate polynomial in the formal parameter ``d`` over Q.

    ``coeffs[n]`` is the coefficient of ``d**n``; trailing zeros are
    stripped so that the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def constant(cls, c) -> "DeltaPoly":
        return cls((c,))

    @classmethod
    def delta(cls) -> "DeltaPoly":
        return cls((0, 1))

    @classmethod
    def _raw(cls, coeffs: tuple) -> "DeltaPoly":
        # coeffs already Fractions and stripped
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other) -> "DeltaPoly":
        if isinstance(other, DeltaPoly):
            return other
        if isinstance(other, int):
            return DeltaPoly((other,))
        if isinstance(other, Fraction):
            raise ModeError("cannot combine a rational-mode scalar with a DeltaPoly")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return DeltaPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "DeltaPoly":
        return DeltaPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return DeltaPoly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return DeltaPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, n):
        if not isinstance(n, int) or isinstance(n, bool):
            return NotImplemented
        if n == 0:
            raise ZeroDivisionError("division of DeltaPoly by zero")
        return DeltaPoly._raw(tuple(c / n for c in self.coeffs))

    def __pow__(self, e: int) -> "DeltaPoly":
        if e < 0:
            raise ValueError("negative powers leave Q[d]")
        out = DeltaPoly((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, DeltaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == DeltaPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("DeltaPoly", self.coeffs))
        return self._hash

    def specialize(self, d) -> Fraction:
        """Evaluate at ``d`` by Horner's scheme."""
        d = _as_fraction(d)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * d + c
        return acc

    __call__ = specialize

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if n == 0:
                body = format_rational(mag)
            else:
                mono = "d" if n == 1 else f"d^{n}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"DeltaPoly({str(self)!r})"


Scalar = Union[Fraction, DeltaPoly]


def _mode_of(x) -> str:
    if isinstance(x, DeltaPoly):
        return "poly"
    if isinstance(x, Fraction):
        return "rational"
    raise TypeError(f"not a scalar: {x!r}")


def ring_add(a: Scalar, b: Scalar) -> Scalar:
    if _mode_of(a) != _mode_of(b):
        raise ModeError("mixed-mode addition")
    return a + b


def ring_mul(a: Scalar, b: Scalar) -> Scalar:
    if _mode_of(a) != _mode_of(b):
        raise ModeError("mixed-mode multiplication")
    return a * b


def specialize(p: DeltaPoly, d) -> Fraction:
    return p.specialize(d)


@dataclass(frozen=True)
class Ring:
    """Coefficient ring: symbolic Q[d] when ``delta`` is None, else Q with d fixed."""

    delta: Fraction | None = None

    def __post_init__(self):
        if self.delta is not None and not isinstance(self.delta, Fraction):
            object.__setattr__(self, "delta", _as_fraction(self.delta))

    @property
    def symbolic(self) -> bool:
        return self.delta is None

    @property
    def mode(self) -> str:
        return "poly" if self.delta is None else "rational"

    @property
    def zero(self) -> Scalar:
        return DeltaPoly() if self.delta is None else Fraction(0)

    @property
    def one(self) -> Scalar:
        return DeltaPoly((1,)) if self.delta is None else Fraction(1)

    def delta_value(self) -> Scalar:
        return DeltaPoly.delta() if self.delta is None else self.delta

    def coerce(self, x) -> Scalar:
        """Lift an int/Fraction constant into this ring; type-check scalars."""
        if isinstance(x, DeltaPoly):
            if self.delta is not None:
                raise ModeError("DeltaPoly given to a rational-mode ring")
            return x
        if isinstance(x, (int, Fraction)):
            return DeltaPoly((x,)) if self.delta is None else Fraction(x)
        raise TypeError(f"not a scalar: {x!r}")

    def content(self, a, b) -> Scalar:
        """The value ``a + b*d``."""
        a, b = _as_fraction(a), _as_fraction(b)
        if self.delta is None:
            return DeltaPoly((a, b))
        return a + b * self.delta

    def is_zero(self, x: Scalar) -> bool:
        return not x

    def __str__(self) -> str:
        return "Q[d]" if self.delta is None else f"Q(d={format_rational(self.delta)})"


SYMBOLIC = Ring()


def scalar_to_json(x: Scalar) -> dict:
    if isinstance(x, DeltaPoly):
        return {"mode": "poly", "coeffs": [format_rational(c) for c in x.coeffs]}
    return {"mode": "rational", "value": format_rational(x)}


def scalar_from_json(obj: dict) -> Scalar:
    mode = obj.get("mode")
    if mode == "poly":
        return DeltaPoly(parse_rational(c) for c in obj["coeffs"])
    if mode == "rational":
        return parse_rational(obj["value"])
    raise ValueError(f"unknown scalar mode {mode!r}")


def format_scalar(x: Scalar) -> str:
    return str(x) if isinstance(x, DeltaPoly) else format_rational(x)
