"""Elements of the partition algebra on ``k`` strands.

An :class:`Element` is a finite linear combination of diagrams with
coefficients in a :class:`~partalg.coeff.Ring`.  The product of two diagrams
is ``d**removed`` times their composition.

Multiplication is the hot path of everything downstream, so it does not go
through the generic scalar classes.  Both operands are cleared of
denominators and every coefficient becomes a single Python int:

* rational mode, ``d = p/q``: the weight of ``removed = n`` is
  ``p**n * q**(k - n)``, so the accumulated ints are exact multiples of
  ``q**k``;
* poly mode: an integer polynomial is packed into one int by evaluating it
  at ``2**B`` (Kronecker substitution) and ``d**n`` becomes a shift by
  ``B*n`` bits.  ``B`` is chosen so that no accumulated coefficient can
  overflow its slot, and slots are decoded as balanced digits.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Mapping

from .coeff import SYMBOLIC, DeltaPoly, ModeError, Ring, Scalar, format_scalar, scalar_from_json, scalar_to_json, parse_rational, format_rational
from .diagram import Diagram, canonicalize, compose, diagram_from_json, identity, involution, format_diagram


class AlgebraError(ValueError):
    """Incompatible operands or out-of-range generator indices."""


# left diagram -> right diagram -> (product, removed)
_COMPOSE_ROWS: dict[Diagram, dict[Diagram, tuple[Diagram, int]]] = {}


def _row(x: Diagram) -> dict[Diagram, tuple[Diagram, int]]:
    r = _COMPOSE_ROWS.get(x)
    if r is None:
        r = _COMPOSE_ROWS[x] = {}
    return r


def clear_compose_cache() -> None:
    _COMPOSE_ROWS.clear()


class Element:
    """Immutable linear combination of diagrams on ``k`` strands."""

    __slots__ = ("k", "ring", "_terms")

    def __init__(self, k: int, ring: Ring = SYMBOLIC, terms: Mapping[Diagram, object] | None = None):
        self.k = k
        self.ring = ring
        clean: dict[Diagram, Scalar] = {}
        if terms:
            for d, c in terms.items():
                if d.k != k:
                    raise AlgebraError(f"diagram on {d.k} strands in an element on {k}")
                c = ring.coerce(c)
                if c:
                    clean[d] = clean[d] + c if d in clean else c
                    if not clean[d]:
                        del clean[d]
        self._terms = clean

    @classmethod
    def _make(cls, k: int, ring: Ring, terms: dict) -> "Element":
        # terms already coerced, nonzero
        e = object.__new__(cls)
        e.k = k
        e.ring = ring
        e._terms = terms
        return e

    @classmethod
    def zero(cls, k: int, ring: Ring = SYMBOLIC) -> "Element":
        return cls._make(k, ring, {})

    @classmethod
    def one(cls, k: int, ring: Ring = SYMBOLIC) -> "Element":
        return cls._make(k, ring, {identity(k): ring.one})

    @classmethod
    def from_diagram(cls, d: Diagram, ring: Ring = SYMBOLIC, coeff=1) -> "Element":
        return cls(d.k, ring, {d: coeff})

    @property
    def terms(self) -> dict[Diagram, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Diagram, Scalar]]:
        """Terms in canonical diagram order."""
        for d in sorted(self._terms):
            yield d, self._terms[d]

    def coefficient(self, d: Diagram) -> Scalar:
        return self._terms.get(d, self.ring.zero)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: "Element") -> None:
        if self.k != other.k:
            raise AlgebraError(f"strand counts differ: {self.k} vs {other.k}")
        if self.ring != other.ring:
            raise ModeError(f"coefficient rings differ: {self.ring} vs {other.ring}")

    def _lift(self, other) -> "Element | None":
        if isinstance(other, Element):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, DeltaPoly)):
            return Element._make(self.k, self.ring, _nonzero({identity(self.k): self.ring.coerce(other)}))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for d, c in o._terms.items():
            v = out.get(d)
            if v is None:
                out[d] = c
            else:
                v = v + c
                if v:
                    out[d] = v
                else:
                    del out[d]
        return Element._make(self.k, self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element._make(self.k, self.ring, {d: -c for d, c in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "Element":
        c = self.ring.coerce(c)
        if not c:
            return Element.zero(self.k, self.ring)
        return Element._make(self.k, self.ring, _nonzero({d: c * v for d, v in self._terms.items()}))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return _multiply(self, other)
        if isinstance(other, (int, Fraction, DeltaPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, DeltaPoly)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, n):
        if not isinstance(n, int) or isinstance(n, bool):
            return NotImplemented
        if n == 0:
            raise ZeroDivisionError("element divided by zero")
        return Element._make(self.k, self.ring, {d: c / n for d, c in self._terms.items()})

    def __pow__(self, e: int) -> "Element":
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = Element.one(self.k, self.ring)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def star(self) -> "Element":
        return Element._make(self.k, self.ring, {involution(d): c for d, c in self._terms.items()})

    def specialize(self, delta) -> "Element":
        """Evaluate a poly-mode element at ``d = delta``."""
        if not self.ring.symbolic:
            raise ModeError("element is already specialized")
        ring = Ring(Fraction(delta))
        return Element._make(self.k, ring, _nonzero({d: c.specialize(ring.delta) for d, c in self._terms.items()}))

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.k == other.k and self.ring == other.ring and self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for d, c in self.items():
            parts.append(f"({format_scalar(c)})*[{format_diagram(d)}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Element(k={self.k}, ring={self.ring}, {len(self._terms)} terms)"

    def to_json(self) -> dict:
        terms = []
        for d, c in self.items():
            sj = scalar_to_json(c)
            coeff = sj["coeffs"] if self.ring.symbolic else sj["value"]
            terms.append({"coeff": coeff, "diagram": [list(b) for b in d.blocks]})
        out = {"k": self.k, "mode": self.ring.mode}
        if not self.ring.symbolic:
            out["delta"] = format_rational(self.ring.delta)
        out["terms"] = terms
        return out


def element_from_json(obj: dict) -> Element:
    try:
        k = obj["k"]
        mode = obj["mode"]
        raw = obj["terms"]
    except (KeyError, TypeError):
        raise AlgebraError("element JSON needs 'k', 'mode' and 'terms'") from None
    if mode == "poly":
        ring = SYMBOLIC
    elif mode == "rational":
        if "delta" not in obj:
            raise AlgebraError("rational-mode element JSON needs 'delta'")
        ring = Ring(parse_rational(obj["delta"]))
    else:
        raise AlgebraError(f"unknown mode {mode!r}")
    terms: dict[Diagram, Scalar] = {}
    for t in raw:
        d = canonicalize(k, t["diagram"])
        if mode == "poly":
            c = scalar_from_json({"mode": "poly", "coeffs": t["coeff"]})
        else:
            c = scalar_from_json({"mode": "rational", "value": t["coeff"]})
        terms[d] = terms[d] + c if d in terms else c
    return Element(k, ring, terms)


def _nonzero(terms: dict) -> dict:
    return {d: c for d, c in terms.items() if c}


def _bits(n: int) -> int:
    return max(n, 1).bit_length()


def _multiply(a: Element, b: Element) -> Element:
    k, ring = a.k, a.ring
    if not a._terms or not b._terms:
        return Element.zero(k, ring)
    if ring.symbolic:
        return _multiply_poly(a, b)
    return _multiply_rational(a, b)


def _products(ea: list, eb: list, weights: list[int]) -> dict[Diagram, int]:
    acc: dict[Diagram, int] = {}
    get = acc.get
    for x, ax in ea:
        row = _row(x)
        for y, by in eb:
            r = row.get(y)
            if r is None:
                r = row[y] = compose(x, y)
            z, n = r
            acc[z] = get(z, 0) + ax * by * weights[n]
    return acc


def _multiply_rational(a: Element, b: Element) -> Element:
    k, ring = a.k, a.ring
    p, q = ring.delta.numerator, ring.delta.denominator
    da = lcm(*(c.denominator for c in a._terms.values()))
    db = lcm(*(c.denominator for c in b._terms.values()))
    ea = [(x, c.numerator * (da // c.denominator)) for x, c in a._terms.items()]
    eb = [(y, c.numerator * (db // c.denominator)) for y, c in b._terms.items()]
    weights = [p ** n * q ** (k - n) for n in range(k + 1)]
    acc = _products(ea, eb, weights)
    den = da * db * q ** k
    return Element._make(k, ring, {z: Fraction(v, den) for z, v in acc.items() if v})


def _int_coeffs(terms: dict[Diagram, DeltaPoly]) -> tuple[list, int, int, int]:
    den = lcm(*(c.denominator for p in terms.values() for c in p.coeffs))
    out = []
    big = 0
    deg = 0
    for x, p in terms.items():
        ints = [c.numerator * (den // c.denominator) for c in p.coeffs]
        big = max(big, max(abs(i) for i in ints))
        deg = max(deg, len(ints) - 1)
        out.append((x, ints))
    return out, den, big, deg


def _pack(ints: list[int], width: int) -> int:
    v = 0
    for c in reversed(ints):
        v = (v << width) + c
    return v


def _unpack(v: int, width: int) -> list[int]:
    mask = (1 << width) - 1
    half = 1 << (width - 1)
    out = []
    while v:
        digit = v & mask
        if digit >= half:
            digit -= 1 << width
        out.append(digit)
        v = (v - digit) >> width
    return out


def _multiply_poly(a: Element, b: Element) -> Element:
    k, ring = a.k, a.ring
    ia, da, ba, ga = _int_coeffs(a._terms)
    ib, db, bb, gb = _int_coeffs(b._terms)
    # every slot of the accumulator is a sum of at most |a|*|b|*(min degree + 1) products
    bound = ba * bb * len(ia) * len(ib) * (min(ga, gb) + 1)
    width = _bits(bound) + 2
    ea = [(x, _pack(c, width)) for x, c in ia]
    eb = [(y, _pack(c, width)) for y, c in ib]
    weights = [1 << (width * n) for n in range(k + 1)]
    acc = _products(ea, eb, weights)
    den = da * db
    out = {}
    for z, v in acc.items():
        if v:
            cs = _unpack(v, width)
            out[z] = DeltaPoly._raw(tuple(Fraction(c, den) for c in cs))
    return Element._make(k, ring, out)


def elem_add(a: Element, b: Element) -> Element:
    return a + b


def elem_scale(c, a: Element) -> Element:
    return a.scale(c)


def elem_mul(a: Element, b: Element) -> Element:
    return a * b


def elem_star(a: Element) -> Element:
    return a.star()


# generators

def s_diagram(i: int, k: int) -> Diagram:
    if not 1 <= i <= k - 1:
        raise AlgebraError(f"s_{i} needs 1 <= i <= {k - 1}")
    blocks = [[j, -j] for j in range(1, k + 1) if j not in (i, i + 1)]
    blocks += [[i, -(i + 1)], [i + 1, -i]]
    return canonicalize(k, blocks)


def e_diagram(j: int, k: int) -> Diagram:
    if not 1 <= j <= 2 * k - 1:
        raise AlgebraError(f"e_{j} needs 1 <= j <= {2 * k - 1}")
    if j % 2:
        m = (j + 1) // 2
        blocks = [[t, -t] for t in range(1, k + 1) if t != m] + [[m], [-m]]
    else:
        i = j // 2
        blocks = [[t, -t] for t in range(1, k + 1) if t not in (i, i + 1)]
        blocks.append([i, i + 1, -i, -(i + 1)])
    return canonicalize(k, blocks)


def gen_s(i: int, k: int, ring: Ring = SYMBOLIC) -> Element:
    return Element.from_diagram(s_diagram(i, k), ring)


def gen_e(j: int, k: int, ring: Ring = SYMBOLIC) -> Element:
    return Element.from_diagram(e_diagram(j, k), ring)


def generator_names(r: int) -> list[tuple[str, int]]:
    """Generators of level ``r``: ``e_1..e_{r-1}`` and ``s_1..s_{floor(r/2)-1}``."""
    return [("e", j) for j in range(1, r)] + [("s", i) for i in range(1, r // 2)]


def generators(r: int, k: int, ring: Ring = SYMBOLIC) -> list[tuple[str, int, Element]]:
    if not 0 <= r <= 2 * k:
        raise AlgebraError(f"level {r} out of range for k={k}")
    out = []
    for name, idx in generator_names(r):
        g = gen_e(idx, k, ring) if name == "e" else gen_s(idx, k, ring)
        out.append((name, idx, g))
    return out


def ambient_k(r: int) -> int:
    """Smallest strand count whose algebra contains level ``r``."""
    return max(1, (r + 1) // 2)


def diagram_in_level(d: Diagram, r: int) -> bool:
    k = d.k
    if not 0 <= r <= 2 * k:
        raise AlgebraError(f"level {r} out of range for k={k}")
    m = (r + 1) // 2
    for j in range(m + 1, k + 1):
        if d.block_of(j) != (j, -j):
            return False
    if r % 2 and not d.same_block(m, -m):
        return False
    return True


def in_subalgebra(a: Element, r: int) -> bool:
    return all(diagram_in_level(d, r) for d in a._terms)


def commutator(a: Element, b: Element) -> Element:
    return a * b - b * a


def commutes_with_generators(a: Element, r: int) -> bool:
    if not in_subalgebra(a, r):
        raise AlgebraError(f"element does not lie in level {r}")
    return all(commutator(a, g).is_zero() for _, _, g in generators(r, a.k, a.ring))


def word(names: Iterable[tuple[str, int]], k: int, ring: Ring = SYMBOLIC) -> Element:
    """Product of generators, e.g. ``[("e", 1), ("e", 2)]``."""
    out = Element.one(k, ring)
    for name, idx in names:
        out = out * (gen_e(idx, k, ring) if name == "e" else gen_s(idx, k, ring))
    return out


def diagram_element(d: Diagram, ring: Ring = SYMBOLIC) -> Element:
    return Element.from_diagram(d, ring)


__all__ = [
    "AlgebraError", "Element", "element_from_json", "elem_add", "elem_scale", "elem_mul", "elem_star",
    "s_diagram", "e_diagram", "gen_s", "gen_e", "generators", "generator_names", "ambient_k",
    "diagram_in_level", "in_subalgebra", "commutator", "commutes_with_generators", "word",
    "diagram_element", "diagram_from_json", "clear_compose_cache",
]
