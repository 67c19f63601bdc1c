"""Partition diagrams on ``k`` top vertices ``1..k`` and ``k`` bottom vertices ``1'..k'``.

A vertex is a nonzero int: ``i`` is the top vertex ``i`` and ``-i`` the bottom
vertex ``i'``.  Vertices are totally ordered ``1 < ... < k < 1' < ... < k'``; a
diagram is stored as the restricted growth string of its set partition in
that order, which is a canonical form: blocks come out sorted by least vertex
and vertices within a block come out sorted.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Sequence

from . import bounds

DEFAULT_ENUM_BOUND = 4


class DiagramError(ValueError):
    """Malformed diagram input."""


def _position(v: int, k: int) -> int:
    if v > 0:
        return v - 1
    return k - v - 1


def _vertex(p: int, k: int) -> int:
    return p + 1 if p < k else -(p - k + 1)


def _relabel(labels: Sequence[int]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    out = []
    for x in labels:
        y = seen.get(x)
        if y is None:
            y = seen[x] = len(seen)
        out.append(y)
    return tuple(out)


class Diagram:
    """Canonical set partition of the ``2k`` vertices of a partition diagram."""

    __slots__ = ("k", "labels", "_hash")

    def __init__(self, k: int, labels: Sequence[int]):
        # labels must already be a restricted growth string; use canonicalize otherwise
        self.k = k
        self.labels = tuple(labels)
        self._hash = hash((k, self.labels))

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        groups: list[list[int]] = []
        for p, lab in enumerate(self.labels):
            if lab == len(groups):
                groups.append([])
            groups[lab].append(_vertex(p, self.k))
        return tuple(tuple(g) for g in groups)

    def block_of(self, v: int) -> tuple[int, ...]:
        lab = self.labels[_position(v, self.k)]
        return tuple(_vertex(p, self.k) for p, x in enumerate(self.labels) if x == lab)

    def same_block(self, u: int, v: int) -> bool:
        return self.labels[_position(u, self.k)] == self.labels[_position(v, self.k)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.k == other.k and self.labels == other.labels

    def __lt__(self, other: "Diagram") -> bool:
        return (self.k, self.labels) < (other.k, other.labels)

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return format_diagram(self)

    def __repr__(self) -> str:
        return f"Diagram({self.k}, {format_diagram(self)!r})"

    def to_json(self) -> dict:
        return {"k": self.k, "blocks": [list(b) for b in self.blocks]}


class ComposeResult(NamedTuple):
    product: Diagram
    removed: int


def canonicalize(k: int, raw_blocks: Iterable[Iterable[int]]) -> Diagram:
    """Build the canonical diagram from blocks given in any order."""
    if not isinstance(k, int) or k < 1:
        raise DiagramError(f"strand count must be a positive integer, got {k!r}")
    labels = [-1] * (2 * k)
    nblocks = 0
    for block in raw_blocks:
        block = list(block)
        if not block:
            continue
        for v in block:
            if not isinstance(v, int) or v == 0 or abs(v) > k:
                raise DiagramError(f"vertex {v!r} out of range for k={k}")
            p = _position(v, k)
            if labels[p] != -1:
                raise DiagramError(f"vertex {format_vertex(v)} appears twice")
            labels[p] = nblocks
        nblocks += 1
    missing = [format_vertex(_vertex(p, k)) for p, x in enumerate(labels) if x == -1]
    if missing:
        raise DiagramError(f"vertices missing from the partition: {' '.join(missing)}")
    return Diagram(k, _relabel(labels))


def identity(k: int) -> Diagram:
    return Diagram(k, tuple(range(k)) * 2)


def compose(pi: Diagram, gamma: Diagram) -> ComposeResult:
    """Stack ``pi`` on top of ``gamma``; report the product and the removed middle components."""
    k = pi.k
    if gamma.k != k:
        raise DiagramError(f"strand counts differ: {pi.k} vs {gamma.k}")
    # nodes 0..k-1 top of pi, k..2k-1 middle, 2k..3k-1 bottom of gamma;
    # position p of pi is node p and position p of gamma is node p + k
    parent = list(range(3 * k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for offset, labels in ((0, pi.labels), (k, gamma.labels)):
        first: dict[int, int] = {}
        for p, lab in enumerate(labels):
            node = p + offset
            f = first.get(lab)
            if f is None:
                first[lab] = node
            else:
                a, b = find(f), find(node)
                if a != b:
                    parent[a] = b

    seen: dict[int, int] = {}
    out = []
    for node in range(k):
        r = find(node)
        lab = seen.get(r)
        if lab is None:
            lab = seen[r] = len(seen)
        out.append(lab)
    for node in range(2 * k, 3 * k):
        r = find(node)
        lab = seen.get(r)
        if lab is None:
            lab = seen[r] = len(seen)
        out.append(lab)
    middle = {find(node) for node in range(k, 2 * k)}
    removed = sum(1 for r in middle if r not in seen)
    return ComposeResult(Diagram(k, out), removed)


def involution(pi: Diagram) -> Diagram:
    """Flip the diagram upside down."""
    k = pi.k
    return Diagram(k, _relabel(pi.labels[k:] + pi.labels[:k]))


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length ``n`` in lexicographic order."""
    if n == 0:
        yield ()
        return
    word = [0] * n

    def rec(i: int, m: int):
        if i == n:
            yield tuple(word)
            return
        for x in range(m + 2):
            word[i] = x
            yield from rec(i + 1, max(m, x))

    word[0] = 0
    yield from rec(1, 0)


def all_diagrams(k: int, bound: int = DEFAULT_ENUM_BOUND) -> list[Diagram]:
    """Every diagram on ``k`` strands, in canonical order.  There are Bell(2k) of them."""
    if k < 1:
        raise DiagramError(f"strand count must be positive, got {k}")
    bounds.check(k, bound, "k")
    return [Diagram(k, w) for w in set_partitions(2 * k)]


def format_vertex(v: int) -> str:
    return str(v) if v > 0 else f"{-v}'"


def format_diagram(d: Diagram) -> str:
    return " | ".join(" ".join(format_vertex(v) for v in b) for b in d.blocks)


def parse_vertex(token: str) -> int:
    t = token.strip()
    primed = t.endswith("'")
    body = t[:-1] if primed else t
    if not body.isdigit() or int(body) == 0:
        raise DiagramError(f"bad vertex token {token!r}")
    return -int(body) if primed else int(body)


def parse_diagram(text: str, k: int | None = None) -> Diagram:
    """Parse the ``"1 2 2' 3 | 3' | 1' 4 4' | 5 5'"`` text format."""
    blocks = []
    for chunk in text.strip().split("|"):
        toks = chunk.split()
        if not toks:
            raise DiagramError(f"empty block in {text!r}")
        blocks.append([parse_vertex(t) for t in toks])
    if k is None:
        k = max(abs(v) for b in blocks for v in b)
    return canonicalize(k, blocks)


def diagram_from_json(obj: dict) -> Diagram:
    try:
        k = obj["k"]
        blocks = obj["blocks"]
    except (KeyError, TypeError):
        raise DiagramError(f"diagram JSON needs 'k' and 'blocks': {obj!r}") from None
    return canonicalize(k, blocks)
