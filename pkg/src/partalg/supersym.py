"""Supersymmetric power sums ``q_n`` and elementary polynomials ``l_n``.

Variables split by parity of position: ``x_1, x_3, ...`` enter the numerator
of the generating function and ``x_2, x_4, ...`` the denominator,

    sum_n l_n t^n = prod_odd (1 + x t) / prod_even (1 - x t).

Taking the logarithmic derivative gives the Newton-type recursion

    n l_n = sum_{i=1..n} (-1)^(i+1) q_i l_(n-i),   l_0 = 1,

which only ever divides by the integer ``n``.  That makes the same code
work for numbers, for polynomials in ``d`` and for commuting algebra
elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import bounds
from .algebra import Element, commutes_with_generators, in_subalgebra
from .coeff import SYMBOLIC, DeltaPoly, Ring, format_rational, parse_rational
from .diagram import Diagram
from .jm import JMCache, RelationCheck, RelationReport

CENTER_RANK_BOUND = 3


@dataclass(frozen=True)
class ContentValue:
    """The exact value ``a + b*d``."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def __add__(self, other: "ContentValue") -> "ContentValue":
        return ContentValue(self.a + other.a, self.b + other.b)

    def __neg__(self) -> "ContentValue":
        return ContentValue(-self.a, -self.b)

    def __sub__(self, other: "ContentValue") -> "ContentValue":
        return self + (-other)

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.b, self.a)

    def __lt__(self, other: "ContentValue") -> bool:
        return self.sort_key() < other.sort_key()

    def evaluate(self, delta) -> Fraction:
        return self.a + self.b * Fraction(delta)

    def to_scalar(self, ring: Ring = SYMBOLIC):
        return ring.content(self.a, self.b)

    def to_json(self) -> dict:
        return {"a": format_rational(self.a), "b": format_rational(self.b)}

    @classmethod
    def from_json(cls, obj: dict) -> "ContentValue":
        return cls(parse_rational(obj["a"]), parse_rational(obj["b"]))

    def __str__(self) -> str:
        return str(DeltaPoly((self.a, self.b)))


def _normalise(values: Sequence, ring: Ring | None):
    """Lift the inputs into one arithmetic and return them with its unit."""
    vals = list(values)
    if any(isinstance(v, Element) for v in vals):
        if not all(isinstance(v, Element) for v in vals):
            raise TypeError("cannot mix algebra elements with numbers")
        return vals, Element.one(vals[0].k, vals[0].ring)
    if ring is None and any(isinstance(v, (ContentValue, DeltaPoly)) for v in vals):
        ring = SYMBOLIC
    if ring is None:
        return [Fraction(v) for v in vals], Fraction(1)
    out = []
    for v in vals:
        out.append(v.to_scalar(ring) if isinstance(v, ContentValue) else ring.coerce(v))
    return out, ring.one


def _power_sums(n_max: int, vals: list, one):
    """[q_1, ..., q_n_max]."""
    qs = [one * 0 for _ in range(n_max)]
    for pos, v in enumerate(vals):
        odd = pos % 2 == 0  # position 1, 3, ... in one-based terms
        p = one
        for n in range(1, n_max + 1):
            p = p * v
            if odd or n % 2:
                qs[n - 1] = qs[n - 1] + p
            else:
                qs[n - 1] = qs[n - 1] - p
    return qs


def eval_q(n: int, values: Sequence, ring: Ring | None = None, one=None):
    """Supersymmetric power sum ``q_n``."""
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    vals, unit = _normalise(values, ring)
    if one is not None:
        unit = one
    if n == 0:
        odd = (len(vals) + 1) // 2
        return unit * (odd - (len(vals) - odd))
    return _power_sums(n, vals, unit)[n - 1]


def l_series(n_max: int, values: Sequence, ring: Ring | None = None, one=None) -> list:
    """[l_0, ..., l_n_max]."""
    if n_max < 0:
        raise ValueError(f"degree must be nonnegative, got {n_max}")
    vals, unit = _normalise(values, ring)
    if one is not None:
        unit = one
    qs = _power_sums(n_max, vals, unit)
    ls = [unit]
    for n in range(1, n_max + 1):
        acc = unit * 0
        for i in range(1, n + 1):
            term = qs[i - 1] * ls[n - i]
            acc = acc + term if i % 2 else acc - term
        ls.append(acc / n)
    return ls


def eval_l(n: int, values: Sequence, ring: Ring | None = None, one=None):
    """Elementary supersymmetric polynomial ``l_n``."""
    return l_series(n, values, ring, one)[n]


def _jm_series(r: int, n_max: int, cache: JMCache) -> list[Element]:
    key = ("l_at_jm", r)
    have = cache.memo.get(key)
    if have is None or len(have) <= n_max:
        values = [cache.N(i) for i in range(1, r + 1)]
        have = l_series(n_max, values, one=cache.one())
        cache.memo[key] = have
    return have


def l_at_jm(n: int, r: int, cache: JMCache) -> Element:
    """``l_n(N_1, ..., N_r)``."""
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    if not 0 <= r <= 2 * cache.k:
        raise ValueError(f"level {r} out of range for k={cache.k}")
    return _jm_series(r, n, cache)[n]


def check_centrality(r: int, n_max: int, cache: JMCache) -> RelationReport:
    """Check that ``l_n(N_1..N_r)`` commutes with every generator of level ``r``."""
    report = RelationReport(level=r, k=cache.k, mode=cache.mode)
    for n in range(n_max + 1):
        x = l_at_jm(n, r, cache)
        ok = in_subalgebra(x, r) and commutes_with_generators(x, r)
        report.entries.append(RelationCheck("SSPCentral", {"r": r, "n": n}, ok))
    return report


class _Echelon:
    """Incremental row echelon form over Q, rows keyed by diagram."""

    def __init__(self):
        self.rows: dict[Diagram, dict[Diagram, Fraction]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict[Diagram, Fraction]) -> dict[Diagram, Fraction]:
        # a row's keys all exceed its pivot, so eliminating pivots in
        # increasing order never reintroduces one already cleared
        v = dict(vec)
        last = None
        while True:
            todo = [key for key in v if key in self.rows and (last is None or last < key)]
            if not todo:
                return v
            p = last = min(todo)
            c = v[p]
            for key, val in self.rows[p].items():
                nv = v.get(key, 0) - c * val
                if nv:
                    v[key] = nv
                else:
                    v.pop(key, None)

    def add(self, vec: dict[Diagram, Fraction]) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        c = v[p]
        self.rows[p] = {key: val / c for key, val in v.items()}
        return True


@dataclass
class CenterSpan:
    k: int
    delta: Fraction
    n_max: int
    product_degree: int
    ranks: list[int] = field(default_factory=list)
    stable: bool = False

    @property
    def rank(self) -> int:
        """Dimension after ``product_degree`` rounds, before the stability round."""
        return self.ranks[-2]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "delta": format_rational(self.delta),
            "n_max": self.n_max,
            "product_degree": self.product_degree,
            "ranks": list(self.ranks),
            "rank": self.rank,
            "stable": self.stable,
        }


def center_span(k: int, delta=Fraction(5), n_max: int | None = None, product_degree: int | None = None,
                bound: int = CENTER_RANK_BOUND) -> CenterSpan:
    """Span of products of ``l_1..l_n_max`` at the JM elements of level ``2k``.

    Round ``t`` multiplies the vectors found in round ``t - 1`` by each
    ``l_n``; ``ranks[t]`` is the dimension after round ``t``.  One extra
    round is run at the end, and the span is stable when it adds nothing.
    """
    bounds.check(k, bound, "k")
    delta = Fraction(delta)
    n_max = 2 * k if n_max is None else n_max
    product_degree = 2 * k if product_degree is None else product_degree
    cache = JMCache(k, Ring(delta))
    gens = [l_at_jm(n, 2 * k, cache) for n in range(1, n_max + 1)]
    ech = _Echelon()
    one = cache.one()
    ech.add(one.terms)
    frontier = [one]
    out = CenterSpan(k, delta, n_max, product_degree, ranks=[len(ech)])
    for _ in range(product_degree + 1):
        fresh = []
        for b in frontier:
            for g in gens:
                x = b * g
                if ech.add(x.terms):
                    fresh.append(x)
        out.ranks.append(len(ech))
        frontier = fresh
    out.stable = out.ranks[-1] == out.ranks[-2]
    return out


def center_rank(k: int, delta=Fraction(5), n_max: int | None = None, product_degree: int | None = None,
                bound: int = CENTER_RANK_BOUND) -> int:
    return center_span(k, delta, n_max, product_degree, bound).rank
