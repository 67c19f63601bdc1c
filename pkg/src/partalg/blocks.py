"""Blocks of the label set ``Lambda_k(d)`` for exact rational ``d``.

Two descriptions are computed independently and compared:

* chains: orbits of the unique ``d``-successor map on shapes;
* generating functions: the factor multisets of ``lam(t)`` after cancelling
  numerator ``i`` against denominator ``j`` whenever ``i + j = d``.

A numerator parameter ``i`` stands for the factor ``1 + (i - d/2) t`` and a
denominator parameter ``j`` for ``1 + (d/2 - j) t``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import bounds
from .coeff import format_rational
from .combinatorics import EMPTY, GraphVertex, Shape, diagonal_datum, vertices_at

BLOCK_BOUND = 6


def integer_delta(delta) -> int | None:
    d = Fraction(delta)
    return d.numerator if d.denominator == 1 else None


@dataclass(frozen=True)
class LabelSet:
    k: int
    delta: Fraction
    members: tuple[GraphVertex, ...]

    def shapes(self) -> list[Shape]:
        return [v.shape for v in self.members]

    def vertex_of(self, shape: Shape) -> GraphVertex:
        return GraphVertex(2 * self.k, self.k - shape.size, shape)


def label_set(k: int, delta) -> LabelSet:
    """Level-``2k`` vertices, without the empty shape when ``d = 0``."""
    delta = Fraction(delta)
    members = vertices_at(2 * k)
    if delta == 0:
        members = [v for v in members if v.shape != EMPTY]
    return LabelSet(k, delta, tuple(members))


def is_delta_pair(mu: Shape, lam: Shape, delta) -> bool:
    d = integer_delta(delta)
    if d is None or not lam.contains(mu) or lam.size == mu.size:
        return False
    rows = [i for i in range(1, len(lam) + 1) if lam[i - 1] != (mu[i - 1] if i <= len(mu) else 0)]
    if len(rows) != 1:
        return False
    i = rows[0]
    return lam[i - 1] - i == d - mu.size


def delta_successor(tau: Shape, delta, k: int) -> Shape | None:
    """The unique ``lam`` of size at most ``k`` with ``(tau, lam)`` a ``d``-pair."""
    d = integer_delta(delta)
    if d is None:
        return None
    found = None
    for i in range(1, len(tau) + 2):
        have = tau[i - 1] if i <= len(tau) else 0
        j = d - tau.size + i  # column of the new right-most box
        cap = tau[i - 2] if i >= 2 else None
        if j <= have or (cap is not None and j > cap):
            continue
        if tau.size + j - have > k:
            continue
        parts = list(tau)
        if i <= len(tau):
            parts[i - 1] = j
        else:
            parts.append(j)
        if found is not None:
            raise AssertionError(f"two {d}-successors of {tau}")
        found = Shape(parts)
    return found


@dataclass(frozen=True)
class BlockPartition:
    k: int
    delta: Fraction
    method: str
    classes: tuple[tuple[GraphVertex, ...], ...]

    def as_sets(self) -> set[frozenset]:
        return {frozenset(c) for c in self.classes}

    def to_json(self) -> list[list[dict]]:
        return [[v.to_json() for v in c] for c in self.classes]


def _ordered(classes: list[list[GraphVertex]], labels: LabelSet) -> tuple[tuple[GraphVertex, ...], ...]:
    rank = {v: n for n, v in enumerate(labels.members)}
    cs = [sorted(c, key=lambda v: (v.shape.size, rank[v])) for c in classes]
    cs.sort(key=lambda c: min(rank[v] for v in c))
    return tuple(tuple(c) for c in cs)


def chain_classes(k: int, delta, bound: int = BLOCK_BOUND) -> BlockPartition:
    """Maximal ``d``-chains, each listed from its smallest shape."""
    bounds.check(k, bound, "k")
    labels = label_set(k, delta)
    shapes = set(labels.shapes())
    succ: dict[Shape, Shape] = {}
    pred: dict[Shape, Shape] = {}
    for tau in shapes:
        lam = delta_successor(tau, delta, k)
        if lam is not None and lam in shapes:
            if lam in pred:
                raise AssertionError(f"{lam} has two predecessors")
            succ[tau] = lam
            pred[lam] = tau
    classes = []
    for start in shapes:
        if start in pred:
            continue
        chain = [start]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        classes.append([labels.vertex_of(s) for s in chain])
    return BlockPartition(k, labels.delta, "chains", _ordered(classes, labels))


def is_delta_chain(chain: list[Shape], delta) -> bool:
    """Consecutive ``d``-pairs whose strips sit in consecutive rows, with
    the outer difference a skew hook."""
    for a, b in zip(chain, chain[1:]):
        if not is_delta_pair(a, b, delta):
            return False
    rows = []
    for a, b in zip(chain, chain[1:]):
        rows.append(next(i for i in range(1, len(b) + 1) if b[i - 1] != (a[i - 1] if i <= len(a) else 0)))
    if any(r2 != r1 + 1 for r1, r2 in zip(rows, rows[1:])):
        return False
    if len(chain) > 1:
        cs = sorted(_skew_contents(chain[0], chain[-1]))
        if cs != list(range(cs[0], cs[0] + len(cs))):
            return False
    return True


def _skew_contents(mu: Shape, lam: Shape) -> list[int]:
    out = []
    for i in range(1, len(lam) + 1):
        start = mu[i - 1] if i <= len(mu) else 0
        out.extend(j - i for j in range(start + 1, lam[i - 1] + 1))
    return out


@dataclass(frozen=True)
class BlockGenFun:
    delta: Fraction
    num: tuple[int, ...]
    den: tuple[int, ...]

    def is_one(self) -> bool:
        return not self.num and not self.den

    def to_json(self) -> dict:
        return {"delta": format_rational(self.delta), "num": list(self.num), "den": list(self.den)}


def genfun_unreduced(v: GraphVertex) -> tuple[list[int], list[int]]:
    k = v.level // 2
    return list(range(k - v.l)), sorted(v.shape.contents())


def genfun(v: GraphVertex, delta) -> BlockGenFun:
    """Factor multisets of ``lam(t)``; for integer ``d`` each numerator ``i``
    cancels one denominator ``d - i`` if present.  Numerator parameters are
    distinct, so the result does not depend on the order of cancellation."""
    delta = Fraction(delta)
    num, den = genfun_unreduced(v)
    d = integer_delta(delta)
    if d is not None:
        left = Counter(den)
        kept = []
        for i in num:
            if left[d - i] > 0:
                left[d - i] -= 1
            else:
                kept.append(i)
        num = kept
        den = sorted(left.elements())
    return BlockGenFun(delta, tuple(num), tuple(den))


def genfun_equal(a: BlockGenFun, b: BlockGenFun) -> bool:
    if a.delta != b.delta:
        raise ValueError(f"generating functions for different parameters: {a.delta} vs {b.delta}")
    return a.num == b.num and a.den == b.den


def genfun_classes(k: int, delta, bound: int = BLOCK_BOUND) -> BlockPartition:
    bounds.check(k, bound, "k")
    labels = label_set(k, delta)
    groups: dict[tuple, list[GraphVertex]] = {}
    for v in labels.members:
        g = genfun(v, labels.delta)
        groups.setdefault((g.num, g.den), []).append(v)
    return BlockPartition(k, labels.delta, "genfun", _ordered(list(groups.values()), labels))


def reduced_form_case(v: GraphVertex, delta) -> int | None:
    """Which case of the closed-form reduction applies: 1, 2 or None."""
    k = v.level // 2
    h = v.shape.height
    d = integer_delta(delta)
    if d is None or not -h <= d <= 2 * k - 2:
        return 1
    if h >= 1 and -h <= d <= -1:
        return 2
    return None


def reduced_form_check(v: GraphVertex, delta) -> bool:
    """Compare :func:`genfun` with the closed form of the applicable case."""
    case = reduced_form_case(v, delta)
    g = genfun(v, delta)
    num, den = genfun_unreduced(v)
    if case == 1:
        return list(g.num) == num and list(g.den) == den
    if case == 2:
        d = integer_delta(delta)
        k = v.level // 2
        h = v.shape.height
        want_num = list(range(d + h + 1, k - v.l))
        datum = diagonal_datum(v.shape)
        want_den = []
        for j, m in datum.mult.items():
            want_den.extend([j] * (m - 1 if j <= d else m))
        return list(g.num) == want_num and list(g.den) == sorted(want_den)
    return True


def block_crosscheck(k: int, delta, bound: int = BLOCK_BOUND) -> bool:
    return chain_classes(k, delta, bound).as_sets() == genfun_classes(k, delta, bound).as_sets()
