"""Jucys-Murphy elements ``L_i``, their normalised versions ``N_i = L_i - d/2``
and the auxiliary involutions ``sigma_i``, defined recursively.

The recursion is transcribed term by term with no simplification; the
relation checker in :func:`verify_relations` is what certifies it.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .algebra import AlgebraError, Element, commutator, gen_e, gen_s, generators, in_subalgebra
from .coeff import SYMBOLIC, Ring


def prod(*factors: Element) -> Element:
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


class JMCache:
    """Memo tables for ``sigma_i`` and ``L_i`` on ``k`` strands over one ring.

    A single lock serialises writers, so one instance may be shared between
    threads.
    """

    def __init__(self, k: int, ring: Ring = SYMBOLIC):
        if k < 1:
            raise AlgebraError(f"strand count must be positive, got {k}")
        self.k = k
        self.ring = ring
        self._sigma: dict[int, Element] = {}
        self._L: dict[int, Element] = {}
        self._gens: dict[tuple[str, int], Element] = {}
        # derived quantities keyed by the module that computes them
        self.memo: dict = {}
        self._lock = threading.RLock()

    @property
    def mode(self) -> str:
        return self.ring.mode

    @property
    def delta(self):
        return self.ring.delta_value()

    def one(self) -> Element:
        return Element.one(self.k, self.ring)

    def zero(self) -> Element:
        return Element.zero(self.k, self.ring)

    def s(self, i: int) -> Element:
        key = ("s", i)
        g = self._gens.get(key)
        if g is None:
            g = self._gens[key] = gen_s(i, self.k, self.ring)
        return g

    def e(self, j: int) -> Element:
        key = ("e", j)
        g = self._gens.get(key)
        if g is None:
            g = self._gens[key] = gen_e(j, self.k, self.ring)
        return g

    def sigma(self, n: int) -> Element:
        if not 2 <= n <= 2 * self.k - 1:
            raise AlgebraError(f"sigma_{n} needs 2 <= index <= {2 * self.k - 1}")
        got = self._sigma.get(n)
        if got is not None:
            return got
        with self._lock:
            if n not in self._sigma:
                self._sigma[n] = self._sigma_rec(n)
            return self._sigma[n]

    def L(self, n: int) -> Element:
        if not 1 <= n <= 2 * self.k:
            raise AlgebraError(f"L_{n} needs 1 <= index <= {2 * self.k}")
        got = self._L.get(n)
        if got is not None:
            return got
        with self._lock:
            if n not in self._L:
                self._L[n] = self._L_rec(n)
            return self._L[n]

    def N(self, n: int) -> Element:
        return self.L(n) - self.one().scale(self.delta) / 2

    def _sigma_rec(self, n: int) -> Element:
        if n == 2:
            return self.one()
        if n == 3:
            return self.s(1)
        s, e, L = self.s, self.e, self.L
        if n % 2:
            i = (n - 1) // 2
            return (
                prod(s(i - 1), s(i), self.sigma(2 * i - 1), s(i), s(i - 1))
                + prod(s(i), e(2 * i - 2), L(2 * i - 2), s(i), e(2 * i - 2), s(i))
                + prod(e(2 * i - 2), L(2 * i - 2), s(i), e(2 * i - 2))
                - prod(s(i), e(2 * i - 2), L(2 * i - 2), s(i - 1), e(2 * i), e(2 * i - 1), e(2 * i - 2))
                - prod(e(2 * i - 2), e(2 * i - 1), e(2 * i), s(i - 1), L(2 * i - 2), e(2 * i - 2), s(i))
            )
        i = n // 2
        return (
            prod(s(i - 1), s(i), self.sigma(2 * i - 2), s(i), s(i - 1))
            + prod(e(2 * i - 2), L(2 * i - 2), s(i), e(2 * i - 2), s(i))
            + prod(s(i), e(2 * i - 2), L(2 * i - 2), s(i), e(2 * i - 2))
            - prod(e(2 * i - 2), L(2 * i - 2), s(i - 1), e(2 * i), e(2 * i - 1), e(2 * i - 2))
            - prod(s(i), e(2 * i - 2), e(2 * i - 1), e(2 * i), s(i - 1), L(2 * i - 2), e(2 * i - 2), s(i))
        )

    def _L_rec(self, n: int) -> Element:
        if n == 1:
            return self.zero()
        if n == 2:
            return self.e(1)
        s, e, L = self.s, self.e, self.L
        if n % 2 == 0:
            i = (n - 2) // 2
            return (
                prod(s(i), L(2 * i), s(i))
                - prod(s(i), L(2 * i), e(2 * i))
                - prod(e(2 * i), L(2 * i), s(i))
                + prod(e(2 * i), L(2 * i), e(2 * i + 1), e(2 * i))
                + self.sigma(2 * i + 1)
            )
        i = (n - 1) // 2
        return (
            prod(s(i), L(2 * i - 1), s(i))
            - L(2 * i) * e(2 * i)
            - e(2 * i) * L(2 * i)
            + (self.one().scale(self.delta) - L(2 * i - 1)) * e(2 * i)
            + self.sigma(2 * i)
        )


def jm_sigma(i: int, cache: JMCache) -> Element:
    return cache.sigma(i)


def jm_L(i: int, cache: JMCache) -> Element:
    return cache.L(i)


def jm_N(i: int, cache: JMCache) -> Element:
    return cache.N(i)


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    indices: dict
    passed: bool

    def to_json(self) -> dict:
        return {"relation": self.relation, "indices": dict(self.indices), "pass": self.passed}


@dataclass
class RelationReport:
    level: int
    k: int
    mode: str
    entries: list[RelationCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.entries)

    @property
    def failures(self) -> list[RelationCheck]:
        return [c for c in self.entries if not c.passed]

    def relations(self) -> set[str]:
        return {c.relation for c in self.entries}

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.entries]


def _relation_instances(r: int, c: JMCache) -> Iterator[tuple[str, dict, Callable[[], bool]]]:
    """Every catalogued identity whose ingredients all lie in level ``r``."""
    s, e, sg, L, N = c.s, c.e, c.sigma, c.L, c.N
    one = c.one()
    dl = one.scale(c.delta)
    k = c.k

    def commutes(a: Element, b: Element) -> bool:
        return commutator(a, b).is_zero()

    def commutes_with_level(a: Element, level: int) -> bool:
        return all(commutes(a, g) for _, _, g in generators(level, k, c.ring))

    # presentation relations
    for i in range(1, r // 2):
        if 2 * i + 2 <= r:
            yield "StRels.1", {"i": i}, lambda i=i: s(i) * e(2 * i) == e(2 * i) and e(2 * i) * s(i) == e(2 * i)
            yield "StRels.2", {"i": i}, lambda i=i: prod(s(i), e(2 * i - 1), s(i)) == e(2 * i + 1)
    for i in range(1, r):
        if i + 2 <= r:
            yield "StRels.3", {"i": i, "j": i + 1}, lambda i=i: prod(e(i), e(i + 1), e(i)) == e(i)
        if i >= 2 and i + 1 <= r:
            yield "StRels.3", {"i": i, "j": i - 1}, lambda i=i: prod(e(i), e(i - 1), e(i)) == e(i)

    # sigma relations
    for i in range(2, r):
        yield "EnyRels.1.i", {"i": i}, lambda i=i: sg(i).star() == sg(i)
        yield "EnyRels.1.ii", {"i": i}, lambda i=i: sg(i) * sg(i) == one
        yield "EnyRels.1.iv", {"i": i}, lambda i=i: commutes_with_level(sg(i), i - 2)
    for i in range(1, r // 2):
        if 2 * i + 2 <= r:
            yield "EnyRels.1.iii", {"i": i}, lambda i=i: sg(2 * i) * sg(2 * i + 1) == s(i) and sg(2 * i + 1) * sg(2 * i) == s(i)
            yield "EnyRels.1.vi", {"i": i}, lambda i=i: sg(2 * i + 1) * e(2 * i) == e(2 * i) and e(2 * i) * sg(2 * i + 1) == e(2 * i)
    for i in range(1, (r - 1) // 2 + 1):
        yield "EnyRels.1.v", {"i": i}, lambda i=i: sg(2 * i) * e(2 * i) == e(2 * i) and e(2 * i) * sg(2 * i) == e(2 * i)

    # JM relations
    for i in range(1, r + 1):
        yield "EnyRels.2.i", {"i": i}, lambda i=i: L(i).star() == L(i)
        for j in range(i + 1, r + 1):
            yield "EnyRels.2.ii", {"i": i, "j": j}, lambda i=i, j=j: commutes(L(i), L(j))
        yield "EnyRels.2.iii", {"r": i}, lambda i=i: commutes_with_level(sum((L(t) for t in range(1, i + 1)), c.zero()), i)
        if i >= 2:
            yield "EnyRels.2.iv", {"i": i}, lambda i=i: commutes_with_level(L(i), i - 1)

    # mixed relations
    for i in range(1, r // 2):
        if 2 * i + 2 <= r:
            yield "EnyRels.3.i", {"i": i}, lambda i=i: prod(e(2 * i + 1), sg(2 * i), e(2 * i + 1)) == (dl - L(2 * i - 1)) * e(2 * i + 1)
    for i in range(1, r):
        yield "EnyRels.3.ii", {"i": i}, lambda i=i: (
            e(i) * (L(i) + L(i + 1)) == e(i).scale(c.delta) and (L(i) + L(i + 1)) * e(i) == e(i).scale(c.delta)
        )
    for i in range(1, (r - 1) // 2 + 1):
        yield "EnyRels.3.iii", {"i": i}, lambda i=i: (
            prod(sg(2 * i), e(2 * i - 1), e(2 * i)) == L(2 * i) * e(2 * i)
            and prod(e(2 * i), e(2 * i - 1), sg(2 * i)) == e(2 * i) * L(2 * i)
        )
    for i in range(1, r // 2):
        if 2 * i + 2 <= r:
            yield "EnyRels.3.iv", {"i": i}, lambda i=i: (
                prod(sg(2 * i + 1), e(2 * i + 1), e(2 * i)) == L(2 * i) * e(2 * i)
                and prod(e(2 * i), e(2 * i + 1), sg(2 * i + 1)) == e(2 * i) * L(2 * i)
            )

    # commuting relations for the normalised elements
    for i in range(1, r):
        for j in range(1, r + 1):
            if j not in (i, i + 1):
                yield "CommutingRels.1", {"i": i, "j": j}, lambda i=i, j=j: commutes(e(i), N(j))
    for i in range(1, r // 2):
        if 2 * i + 2 <= r:
            for j in range(1, r + 1):
                if j not in range(2 * i - 1, 2 * i + 3):
                    yield "CommutingRels.2", {"i": i, "j": j}, lambda i=i, j=j: commutes(s(i), N(j))
                if j not in (2 * i, 2 * i + 1, 2 * i + 2):
                    yield "CommutingRels.3", {"i": i, "j": j}, lambda i=i, j=j: commutes(sg(2 * i + 1), N(j))
    for i in range(1, (r - 1) // 2 + 1):
        for j in range(1, r + 1):
            if j not in (2 * i - 1, 2 * i, 2 * i + 1):
                yield "CommutingRels.4", {"i": i, "j": j}, lambda i=i, j=j: commutes(sg(2 * i), N(j))

    # skein relations
    for i in range(1, r // 2):
        if 2 * i + 2 <= r:
            yield "CoxSkeinRels.1", {"i": i}, lambda i=i: N(2 * i + 1) == (
                prod(s(i), N(2 * i - 1), s(i))
                - prod(sg(2 * i), e(2 * i - 1), e(2 * i))
                - prod(e(2 * i), e(2 * i - 1), sg(2 * i))
                + prod(e(2 * i), e(2 * i - 1), sg(2 * i), e(2 * i - 1), e(2 * i))
                + sg(2 * i)
            )
            yield "CoxSkeinRels.2", {"i": i}, lambda i=i: N(2 * i + 2) == (
                prod(s(i), N(2 * i), s(i))
                - prod(sg(2 * i + 1), e(2 * i - 1), e(2 * i))
                - prod(e(2 * i), e(2 * i - 1), sg(2 * i + 1))
                + prod(e(2 * i), e(2 * i + 1), sg(2 * i + 1), e(2 * i + 1), e(2 * i))
                + sg(2 * i + 1)
            )
            yield "OddSigSkeinRels.1", {"i": i}, lambda i=i: N(2 * i + 2) == (
                prod(sg(2 * i + 1), N(2 * i), sg(2 * i + 1))
                - e(2 * i + 1) * e(2 * i)
                - e(2 * i) * e(2 * i + 1)
                + prod(e(2 * i), e(2 * i + 1), sg(2 * i + 1), e(2 * i + 1), e(2 * i))
                + sg(2 * i + 1)
            )
            yield "OddSigSkeinRels.2", {"i": i}, lambda i=i: N(2 * i + 1) == (
                prod(sg(2 * i + 1), N(2 * i + 1), sg(2 * i + 1))
                + e(2 * i + 1) * e(2 * i)
                + e(2 * i) * e(2 * i + 1)
                - prod(sg(2 * i + 1), e(2 * i + 1), e(2 * i))
                - prod(e(2 * i), e(2 * i + 1), sg(2 * i + 1))
            )
    for i in range(1, r):
        yield "AntiSymmRels.1", {"i": i}, lambda i=i: e(i) * N(i) == -(e(i) * N(i + 1))
        yield "AntiSymmRels.2", {"i": i}, lambda i=i: N(i) * e(i) == -(N(i + 1) * e(i))

    # level membership of the recursively defined elements
    for i in range(1, r + 1):
        yield "Membership.L", {"i": i}, lambda i=i: in_subalgebra(L(i), i)
    for i in range(2, r):
        yield "Membership.sigma", {"i": i}, lambda i=i: in_subalgebra(sg(i), i + 1)


def verify_relations(r: int, cache: JMCache) -> RelationReport:
    """Check every catalogued identity with support in level ``r``.

    Failures, including errors raised while evaluating an instance, become
    report entries rather than exceptions.
    """
    if not 0 <= r <= 2 * cache.k:
        raise AlgebraError(f"level {r} out of range for k={cache.k}")
    report = RelationReport(level=r, k=cache.k, mode=cache.mode)
    for name, idx, check in _relation_instances(r, cache):
        try:
            ok = bool(check())
        except (AlgebraError, ArithmeticError):
            ok = False
        report.entries.append(RelationCheck(name, idx, ok))
    return report
