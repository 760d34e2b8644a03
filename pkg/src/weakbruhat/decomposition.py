"""
Substitution (block) decomposition of permutations.

A block is a run of consecutive positions whose values form a contiguous
range. Every permutation of size >= 2 is uniquely one of:

* a direct sum of sum-indecomposable parts (``SERIES``, skeleton 12...k),
* a skew sum of skew-indecomposable parts (``PARALLEL``, skeleton k...21),
* an inflation of a simple skeleton of size >= 4 (``INDECOMPOSABLE``).

Monotone skeletons are kept n-ary, so a SERIES node never has a SERIES child
and likewise for PARALLEL.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .perms import Permutation, PermutationError, identity, lds_width, reversal

__all__ = [
    "NodeKind", "DecompositionTree", "inflate", "enumerate_blocks",
    "is_simple", "block_decompose", "classify_node", "intrinsic_width",
]

# above this size the maximal-block scan is vectorized
_NUMPY_SCAN_MIN = 256


class NodeKind(enum.Enum):
    LEAF = "leaf"
    SERIES = "series"
    PARALLEL = "parallel"
    INDECOMPOSABLE = "indecomposable"


@dataclass(frozen=True)
class DecompositionTree:
    kind: NodeKind
    children: tuple[DecompositionTree, ...] = ()
    skeleton: Permutation | None = None
    span: int = 1

    def skeleton_permutation(self) -> Permutation:
        if self.kind is NodeKind.LEAF:
            return identity(1)
        if self.kind is NodeKind.SERIES:
            return identity(len(self.children))
        if self.kind is NodeKind.PARALLEL:
            return reversal(len(self.children))
        return self.skeleton

    def to_permutation(self) -> Permutation:
        """Re-inflate the tree."""
        if self.kind is NodeKind.LEAF:
            return identity(1)
        parts = [child.to_permutation() for child in self.children]
        return inflate(self.skeleton_permutation(), parts)

    def walk(self, offset: int = 1) -> Iterator[tuple[int, DecompositionTree]]:
        """Pre-order ``(first position, node)`` pairs; positions are 1-based."""
        yield offset, self
        for child in self.children:
            yield from child.walk(offset)
            offset += child.span

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind.value, "span": self.span}
        if self.kind is NodeKind.INDECOMPOSABLE:
            out["skeleton"] = list(self.skeleton.images)
        out["children"] = [child.to_dict() for child in self.children]
        return out

    def render(self, indent: str = "  ") -> str:
        lines = []

        def visit(node: DecompositionTree, depth: int, start: int) -> None:
            where = f"[{start}..{start + node.span - 1}]"
            label = node.kind.value
            if node.kind is NodeKind.INDECOMPOSABLE:
                label += f" {node.skeleton}"
            lines.append(f"{indent * depth}{label} {where}")
            for child in node.children:
                visit(child, depth + 1, start)
                start += child.span

        visit(self, 0, 1)
        return "\n".join(lines)


def inflate(skeleton: Permutation, parts: Sequence[Permutation]) -> Permutation:
    """
    Replace entry j of the skeleton by a copy of ``parts[j]``, shifted up by
    the total size of the parts whose skeleton value is smaller.

    >>> str(inflate(Permutation((1, 3, 2)), [Permutation((2, 3, 1, 4)),
    ...     Permutation((1, 2)), Permutation((3, 2, 1))]))
    '2,3,1,4,8,9,7,6,5'
    """
    if len(parts) != skeleton.n:
        raise PermutationError(
            f"skeleton of size {skeleton.n} needs {skeleton.n} parts, got {len(parts)}"
        )
    sizes = [part.n for part in parts]
    base = [0] * skeleton.n
    running = 0
    for j in skeleton.positions():  # positions in increasing order of value
        base[j - 1] = running
        running += sizes[j - 1]
    images: list[int] = []
    for j, part in enumerate(parts):
        shift = base[j]
        images.extend(v + shift for v in part.images)
    return Permutation(tuple(images))


def enumerate_blocks(p: Permutation) -> list[tuple[int, int]]:
    """All blocks as inclusive 1-based position intervals ``(i, j)``."""
    im = p.images
    n = len(im)
    blocks = []
    for i in range(n):
        lo = hi = im[i]
        for j in range(i, n):
            v = im[j]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == j - i:
                blocks.append((i + 1, j + 1))
    return blocks


def is_simple(p: Permutation) -> bool:
    """Only trivial blocks; sizes 1 and 2 count as simple."""
    n = p.n
    if n <= 2:
        return True
    im = p.images
    for i in range(n):
        lo = hi = im[i]
        for j in range(i + 1, n):
            v = im[j]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == j - i and (i, j) != (0, n - 1):
                return False
    return True


def _standardize(values: Sequence[int]) -> tuple[int, ...]:
    """Relative order of distinct values as a permutation of 1..len."""
    order = sorted(range(len(values)), key=values.__getitem__)
    out = [0] * len(values)
    for rank, idx in enumerate(order, 1):
        out[idx] = rank
    return tuple(out)


def _block_end_from(im: Sequence[int], arr: np.ndarray | None, i: int) -> int:
    """Largest j such that ``im[i..j]`` is a block other than the whole."""
    m = len(im)
    if arr is not None:
        seg = arr[i:]
        spread = np.maximum.accumulate(seg) - np.minimum.accumulate(seg)
        hits = np.flatnonzero(spread == np.arange(len(seg)))
        ends = hits + i
        if i == 0:
            ends = ends[ends != m - 1]
        return int(ends[-1])
    lo = hi = im[i]
    best = i
    for j in range(i + 1, m):
        v = im[j]
        if v < lo:
            lo = v
        elif v > hi:
            hi = v
        if hi - lo == j - i and (i, j) != (0, m - 1):
            best = j
    return best


def _top_split(im: Sequence[int]) -> tuple[NodeKind, list[tuple[int, int]], tuple[int, ...] | None]:
    """
    Kind of the root node and its children as half-open 0-based ranges.
    The skeleton is returned only for INDECOMPOSABLE roots.
    """
    m = len(im)
    if m == 1:
        return NodeKind.LEAF, [], None
    cuts = []
    hi = 0
    for i in range(m - 1):
        if im[i] > hi:
            hi = im[i]
        if hi == i + 1:
            cuts.append(i + 1)
    if cuts:
        bounds = [0, *cuts, m]
        return NodeKind.SERIES, list(zip(bounds, bounds[1:])), None
    lo = m + 1
    for i in range(m - 1):
        if im[i] < lo:
            lo = im[i]
        if lo == m - i:
            cuts.append(i + 1)
    if cuts:
        bounds = [0, *cuts, m]
        return NodeKind.PARALLEL, list(zip(bounds, bounds[1:])), None
    arr = np.asarray(im) if m >= _NUMPY_SCAN_MIN else None
    ranges = []
    i = 0
    while i < m:
        j = _block_end_from(im, arr, i)
        ranges.append((i, j + 1))
        i = j + 1
    skeleton = _standardize([im[a] for a, _ in ranges])
    return NodeKind.INDECOMPOSABLE, ranges, skeleton


def _decompose(im: Sequence[int]) -> DecompositionTree:
    kind, ranges, skeleton = _top_split(im)
    if kind is NodeKind.LEAF:
        return DecompositionTree(NodeKind.LEAF)
    children = []
    for a, b in ranges:
        seg = im[a:b]
        shift = min(seg) - 1
        children.append(_decompose(tuple(v - shift for v in seg)))
    return DecompositionTree(
        kind,
        tuple(children),
        Permutation(skeleton) if skeleton is not None else None,
        len(im),
    )


def block_decompose(p: Permutation) -> DecompositionTree:
    return _decompose(p.images)


def classify_node(sub: Permutation) -> NodeKind:
    """Kind of the root of the decomposition of ``sub`` (size >= 2)."""
    if sub.n < 2:
        raise PermutationError("a node needs at least two elements to classify")
    return _top_split(sub.images)[0]


def intrinsic_width(p: Permutation | DecompositionTree) -> int:
    """Largest width among indecomposable skeletons; 1 if there are none."""
    tree = p if isinstance(p, DecompositionTree) else block_decompose(p)
    best = 1
    for _, node in tree.walk():
        if node.kind is NodeKind.INDECOMPOSABLE:
            best = max(best, lds_width(node.skeleton))
    return best
