"""Young diagrams, the branching graph and its paths.

Level ``2k`` and level ``2k + 1`` share the vertex set ``{(lam, l) : |lam| = k - l}``.
From an even level a vertex either stays put or loses a box (and ``l``
grows by one); from an odd level it either ticks ``l`` up by one or gains
a box.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import bounds
from .supersym import ContentValue

PARTITION_BOUND = 30
PATH_BOUND = 4

HALF = Fraction(1, 2)


class Shape(tuple):
    """Integer partition stored as a weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Shape":
        """Parse ``"2,1"``; an empty string is the empty shape."""
        text = text.strip()
        if not text or text in ("0", "()", "-"):
            return cls(())
        try:
            return cls(int(t) for t in text.split(","))
        except ValueError:
            raise ValueError(f"bad shape {text!r}") from None

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def height(self) -> int:
        """Number of rows minus one (zero for the empty shape)."""
        return max(len(self) - 1, 0)

    @property
    def width(self) -> int:
        """Number of columns minus one (zero for the empty shape)."""
        return self[0] - 1 if self else 0

    def boxes(self) -> Iterator[tuple[int, int]]:
        """Boxes ``(row, column)``, both counted from 1."""
        for i, part in enumerate(self, start=1):
            for j in range(1, part + 1):
                yield (i, j)

    def contents(self) -> list[int]:
        return [j - i for i, j in self.boxes()]

    def addable_rows(self) -> list[int]:
        rows = [i for i in range(1, len(self) + 1) if i == 1 or self[i - 2] > self[i - 1]]
        return rows + [len(self) + 1]

    def removable_rows(self) -> list[int]:
        return [i for i in range(1, len(self) + 1) if i == len(self) or self[i - 1] > self[i]]

    def add_box(self, row: int) -> "Shape":
        parts = list(self)
        if row == len(parts) + 1:
            parts.append(1)
        else:
            parts[row - 1] += 1
        return Shape(parts)

    def remove_box(self, row: int) -> "Shape":
        parts = list(self)
        parts[row - 1] -= 1
        if parts[row - 1] == 0:
            parts.pop()
        return Shape(parts)

    def contains(self, other: "Shape") -> bool:
        """Whether ``other`` fits inside this shape."""
        return len(other) <= len(self) and all(a <= b for a, b in zip(other, self))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self) + ")"

    def __repr__(self) -> str:
        return f"Shape({list(self)})"


EMPTY = Shape(())


def box_content(row: int, col: int) -> int:
    return col - row


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions_of(n: int, bound: int = PARTITION_BOUND) -> list[Shape]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    bounds.check(n, bound, "n")
    return [Shape(p) for p in _partitions(n, n)]


@dataclass(frozen=True)
class DiagonalDatum:
    lo: int
    hi: int
    mult: dict

    def domain(self) -> list[int]:
        return list(range(self.lo, self.hi + 1)) if self.mult else []


def diagonal_datum(s: Shape) -> DiagonalDatum:
    mult: dict[int, int] = {}
    for c in s.contents():
        mult[c] = mult.get(c, 0) + 1
    return DiagonalDatum(-s.height, s.width, dict(sorted(mult.items())))


def content_multiset(s: Shape) -> list[int]:
    return sorted(s.contents())


@dataclass(frozen=True, order=True)
class GraphVertex:
    level: int
    l: int
    shape: Shape

    def __post_init__(self):
        object.__setattr__(self, "shape", Shape(self.shape))
        if self.level < 0 or self.l < 0:
            raise ValueError(f"bad vertex {self}")
        if self.shape.size + self.l != self.level // 2:
            raise ValueError(
                f"vertex ({self.shape}, {self.l}) does not lie on level {self.level}: "
                f"need |shape| + l = {self.level // 2}"
            )

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "l": self.l}

    def __str__(self) -> str:
        return f"({self.shape},{self.l})@{self.level}"


def vertices_at(level: int, ambient_k: int | None = None) -> list[GraphVertex]:
    """Vertices on ``level``: ``l`` from ``level // 2`` down to 0."""
    if ambient_k is not None and level > 2 * ambient_k + 1:
        raise ValueError(f"level {level} exceeds the graph of A_{2 * ambient_k}")
    half = level // 2
    return [GraphVertex(level, l, lam) for l in range(half, -1, -1) for lam in partitions_of(half - l)]


def edges_from(v: GraphVertex) -> list[GraphVertex]:
    nxt = v.level + 1
    if v.level % 2 == 0:
        out = [GraphVertex(nxt, v.l, v.shape)]
        out += [GraphVertex(nxt, v.l + 1, v.shape.remove_box(r)) for r in v.shape.removable_rows()]
    else:
        out = [GraphVertex(nxt, v.l + 1, v.shape)]
        out += [GraphVertex(nxt, v.l, v.shape.add_box(r)) for r in v.shape.addable_rows()]
    return out


def edges_to(v: GraphVertex) -> list[GraphVertex]:
    """In-neighbours on the previous level."""
    if v.level == 0:
        return []
    prev = v.level - 1
    if prev % 2 == 0:
        out = [GraphVertex(prev, v.l, v.shape)]
        if v.l >= 1:
            out += [GraphVertex(prev, v.l - 1, v.shape.add_box(r)) for r in v.shape.addable_rows()]
    else:
        out = []
        if v.l >= 1:
            out.append(GraphVertex(prev, v.l - 1, v.shape))
        out += [GraphVertex(prev, v.l, v.shape.remove_box(r)) for r in v.shape.removable_rows()]
    return out


@dataclass(frozen=True)
class BranchPath:
    vertices: tuple[GraphVertex, ...]

    @property
    def level(self) -> int:
        return len(self.vertices) - 1

    @property
    def target(self) -> GraphVertex:
        return self.vertices[-1]

    @property
    def shapes(self) -> list[Shape]:
        return [v.shape for v in self.vertices]

    def is_valid(self) -> bool:
        if self.vertices[0] != GraphVertex(0, 0, EMPTY):
            return False
        return all(b in edges_from(a) for a, b in zip(self.vertices, self.vertices[1:]))

    def to_json(self) -> list[dict]:
        return [v.to_json() for v in self.vertices]


def _check_path_bound(target: GraphVertex, bound: int) -> None:
    limit = bounds.cap(bound)
    if target.level > 2 * limit:
        raise bounds.BoundError(
            f"level={target.level} exceeds 2*{limit} (set PARTALG_MAX_K to raise it)"
        )


def enumerate_paths(target: GraphVertex, bound: int = PATH_BOUND) -> list[BranchPath]:
    """All paths from ``(empty, 0)`` at level 0 to ``target``."""
    _check_path_bound(target, bound)
    out: list[BranchPath] = []
    stack: list[GraphVertex] = []

    def back(v: GraphVertex) -> None:
        stack.append(v)
        if v.level == 0:
            out.append(BranchPath(tuple(reversed(stack))))
        else:
            for u in edges_to(v):
                back(u)
        stack.pop()

    back(target)
    out.sort(key=lambda p: p.vertices)
    return out


def path_counts(level: int) -> dict[GraphVertex, int]:
    """Number of paths to every vertex on ``level``, by dynamic programming."""
    counts = {GraphVertex(0, 0, EMPTY): 1}
    for _ in range(level):
        nxt: dict[GraphVertex, int] = {}
        for v, c in counts.items():
            for w in edges_from(v):
                nxt[w] = nxt.get(w, 0) + c
        counts = nxt
    return counts


def count_paths(target: GraphVertex) -> int:
    return path_counts(target.level).get(target, 0)


def standard_path(target: GraphVertex) -> BranchPath:
    """The path that idles at the empty shape for ``l`` steps, then fills
    ``target.shape`` one box per even step, always in the topmost row that
    still has room inside the target."""
    r, l, lam = target.level, target.l, target.shape
    even: list[GraphVertex] = []
    cur = EMPTY
    for i in range(r // 2 + 1):
        if i > l:
            row = min(rr for rr in cur.addable_rows() if lam.contains(cur.add_box(rr)))
            cur = cur.add_box(row)
        even.append(GraphVertex(2 * i, min(i, l), cur))
    verts: list[GraphVertex] = []
    for i in range(r + 1):
        v = even[i // 2]
        verts.append(v if i % 2 == 0 else GraphVertex(i, v.l, v.shape))
    return BranchPath(tuple(verts))


def _changed_box(small: Shape, big: Shape) -> tuple[int, int]:
    for i in range(1, len(big) + 1):
        had = small[i - 1] if i <= len(small) else 0
        if big[i - 1] != had:
            return (i, big[i - 1])
    raise ValueError(f"{big} does not exceed {small} by one box")


def path_contents(path: BranchPath) -> list[ContentValue]:
    """Contents ``cont(T, i)`` for ``i = 1..r``, each as ``a + b*d``."""
    out = []
    vs = path.vertices
    for i in range(1, len(vs)):
        now, before = vs[i].shape, vs[i - 1].shape
        if i % 2 == 0:
            if now == before:
                out.append(ContentValue(-now.size, HALF))
            else:
                row, col = _changed_box(before, now)
                out.append(ContentValue(box_content(row, col), -HALF))
        else:
            if now == before:
                out.append(ContentValue(now.size, -HALF))
            else:
                row, col = _changed_box(now, before)
                out.append(ContentValue(-box_content(row, col), HALF))
    return out


def standard_contents_closed_form(target: GraphVertex) -> tuple[list[ContentValue], list[ContentValue]]:
    """Sorted odd-step and even-step content multisets of the standard path
    to a vertex on an even level, from the closed form."""
    k, l, lam = target.level // 2, target.l, target.shape
    odd = [ContentValue(0, -HALF)] * l + [ContentValue(i, -HALF) for i in range(k - l)]
    even = [ContentValue(0, HALF)] * l + [ContentValue(c, -HALF) for c in lam.contents()]
    return sorted(odd), sorted(even)
