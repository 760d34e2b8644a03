"""
Permutations of ``{1, ..., n}`` in one-line notation, the weak order on S_n,
longest decreasing subsequences and increasing chain covers.

All indices and values are 1-based.

>>> p = parse_permutation("2,4,1,3,5")
>>> lds_width(p)
2
>>> increasing_chain_cover(p).value_chains(p)
[[2, 4, 5], [1, 3]]
"""

from __future__ import annotations

import re
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "MAX_SIZE", "PermutationError", "Permutation", "ChainCover",
    "parse_permutation", "identity", "reversal", "compose", "inverse",
    "inversion_set", "inversion_count", "weak_leq", "upper_covers",
    "lds_width", "increasing_chain_cover", "all_permutations",
]

MAX_SIZE = 10**6


class PermutationError(ValueError):
    """Malformed permutation input, or a size mismatch between operands."""


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}``; ``images[i-1]`` is the value at position i."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise PermutationError("empty permutation")
        if n > MAX_SIZE:
            raise PermutationError(f"size {n} exceeds the cap of {MAX_SIZE}")
        seen = bytearray(n + 1)
        for v in images:
            if v < 1 or v > n:
                raise PermutationError(f"image {v} is outside 1..{n}")
            if seen[v]:
                raise PermutationError(f"image {v} is repeated")
            seen[v] = 1

    @property
    def n(self) -> int:
        return len(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __str__(self) -> str:
        return ",".join(map(str, self.images))

    def positions(self) -> tuple[int, ...]:
        """``positions()[v-1]`` is the 1-based position of value v."""
        pos = [0] * len(self.images)
        for i, v in enumerate(self.images, 1):
            pos[v - 1] = i
        return tuple(pos)

    def is_increasing(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def is_decreasing(self) -> bool:
        n = len(self.images)
        return all(v == n + 1 - i for i, v in enumerate(self.images, 1))


@dataclass(frozen=True)
class ChainCover:
    """Partition of positions into chains of increasing positions and values."""

    chains: tuple[tuple[int, ...], ...]
    n: int

    def __len__(self) -> int:
        return len(self.chains)

    def value_chains(self, p: Permutation) -> list[list[int]]:
        return [[p(i) for i in chain] for chain in self.chains]


_SPLIT = re.compile(r"[\s,]+")


def parse_permutation(text: str) -> Permutation:
    """
    Parse comma/whitespace separated images, or a compact digit string.

    >>> parse_permutation("24135").images
    (2, 4, 1, 3, 5)
    >>> parse_permutation("3 1 2").images
    (3, 1, 2)
    """
    stripped = text.strip()
    if not stripped:
        raise PermutationError("empty input")
    tokens = [t for t in _SPLIT.split(stripped) if t]
    if len(tokens) == 1 and len(tokens[0]) > 1:
        # compact form; only meaningful when every image is a single digit
        tokens = list(tokens[0])
    try:
        images = [int(t) for t in tokens]
    except ValueError:
        raise PermutationError(f"not an integer sequence: {text!r}") from None
    return Permutation(tuple(images))


def identity(n: int) -> Permutation:
    if n < 1:
        raise PermutationError("n must be positive")
    return Permutation(tuple(range(1, n + 1)))


def reversal(n: int) -> Permutation:
    if n < 1:
        raise PermutationError("n must be positive")
    return Permutation(tuple(range(n, 0, -1)))


def _check_sizes(p: Permutation, q: Permutation) -> None:
    if p.n != q.n:
        raise PermutationError(f"size mismatch: {p.n} vs {q.n}")


def compose(f: Permutation, g: Permutation) -> Permutation:
    """The product ``fg`` with ``fg(x) = f(g(x))``."""
    _check_sizes(f, g)
    fi = f.images
    return Permutation(tuple(fi[x - 1] for x in g.images))


def inverse(p: Permutation) -> Permutation:
    return Permutation(p.positions())


def inversion_set(p: Permutation) -> frozenset[tuple[int, int]]:
    """
    Value pairs ``(a, b)`` with ``a < b`` where b appears before a.

    >>> sorted(inversion_set(Permutation((2, 3, 1))))
    [(1, 2), (1, 3)]
    """
    im = p.images
    return frozenset(
        (im[j], im[i])
        for i in range(len(im))
        for j in range(i + 1, len(im))
        if im[i] > im[j]
    )


def inversion_count(p: Permutation) -> int:
    """Number of inversions, O(n log n) via a Fenwick tree."""
    n = p.n
    tree = [0] * (n + 1)
    count = 0
    for seen, v in enumerate(p.images):
        # number of earlier values <= v
        s, i = 0, v
        while i > 0:
            s += tree[i]
            i -= i & -i
        count += seen - s
        i = v
        while i <= n:
            tree[i] += 1
            i += i & -i
    return count


def weak_leq(p: Permutation, q: Permutation) -> bool:
    """
    True iff every inversion of p is an inversion of q.

    Checked in O(n^2) without building the sets: for each pair of values
    inverted in p, the same pair must be inverted in q.
    """
    _check_sizes(p, q)
    qpos = q.positions()
    im = p.images
    for i in range(len(im)):
        a = im[i]
        qa = qpos[a - 1]
        for j in range(i + 1, len(im)):
            b = im[j]
            # p has a before b; if a > b it is an inversion and q must agree
            if a > b and qpos[b - 1] < qa:
                return False
    return True


def upper_covers(p: Permutation) -> list[Permutation]:
    """All swaps of an adjacent ascent, in order of position."""
    im = p.images
    covers = []
    for k in range(len(im) - 1):
        if im[k] < im[k + 1]:
            new = list(im)
            new[k], new[k + 1] = new[k + 1], new[k]
            covers.append(Permutation(tuple(new)))
    return covers


def lds_width(p: Permutation | Sequence[int]) -> int:
    """Length of the longest strictly decreasing subsequence, O(n log n)."""
    images = p.images if isinstance(p, Permutation) else p
    # tails[k] = -(largest possible last value of a decreasing run of length k+1)
    tails: list[int] = []
    for v in images:
        x = -v
        k = bisect_left(tails, x)
        if k == len(tails):
            tails.append(x)
        else:
            tails[k] = x
    return len(tails)


def increasing_chain_cover(p: Permutation) -> ChainCover:
    """
    Greedy left-to-right cover: each value joins the chain whose last value is
    the largest one below it, or opens a new chain. Produces exactly
    ``lds_width(p)`` chains.
    """
    chains: list[list[int]] = []
    # sorted last values and the chain each belongs to, kept in parallel
    lasts: list[int] = []
    owner: list[int] = []
    for i, v in enumerate(p.images, 1):
        k = bisect_left(lasts, v)
        if k == 0:
            chains.append([i])
            lasts.insert(0, v)
            owner.insert(0, len(chains) - 1)
        else:
            c = owner[k - 1]
            chains[c].append(i)
            # v replaces lasts[k-1]; still sorted since lasts[k] > v
            lasts[k - 1] = v
    return ChainCover(tuple(tuple(c) for c in chains), p.n)


def all_permutations(n: int) -> Iterable[Permutation]:
    from itertools import permutations

    for images in permutations(range(1, n + 1)):
        yield Permutation(images)
