"""
Two-dimensional naturally labeled posets and brute-force oracles.

``phi`` sends a permutation to the poset realized by the numeric order and
the permutation's one-line order; on ``{1..n}`` it is a bijection onto the
two-dimensional posets for which ``1, 2, ..., n`` is a linear extension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .perms import Permutation

__all__ = [
    "BRUTE_EXTENSION_CAP", "BRUTE_ANTICHAIN_CAP", "PosetError",
    "SizeCapExceeded", "Poset2D", "GenericPoset", "phi", "phi_inverse",
    "relation_holds", "hasse_edges", "is_linear_extension",
    "count_le_bruteforce", "linear_extensions", "max_antichain_bruteforce",
    "ingest_poset_file", "as_poset2d",
]

BRUTE_EXTENSION_CAP = 14
BRUTE_ANTICHAIN_CAP = 20


class PosetError(ValueError):
    """Malformed poset input: bad line, label out of range, or a cycle."""


class SizeCapExceeded(RuntimeError):
    """A brute-force oracle was asked to work above its hard size cap."""


@dataclass(frozen=True)
class Poset2D:
    """
    ``a < b`` in the poset iff ``a < b`` numerically and a precedes b in
    ``sigma``. Comparability is O(1) through the cached position table.
    """

    sigma: Permutation
    pos: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "pos", self.sigma.positions())

    @property
    def n(self) -> int:
        return self.sigma.n

    def less(self, a: int, b: int) -> bool:
        return a < b and self.pos[a - 1] < self.pos[b - 1]

    def relation(self) -> frozenset[tuple[int, int]]:
        n = self.n
        return frozenset(
            (a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)
            if self.less(a, b)
        )


@dataclass(frozen=True)
class GenericPoset:
    """A strict partial order on ``{1..n}`` stored as its transitive closure."""

    n: int
    relation: frozenset[tuple[int, int]]

    def less(self, a: int, b: int) -> bool:
        return (a, b) in self.relation


AnyPoset = Union[Poset2D, GenericPoset]


def phi(p: Permutation) -> Poset2D:
    return Poset2D(p)


def phi_inverse(P: Poset2D) -> Permutation:
    return P.sigma


def _check_label(P: AnyPoset, a: int) -> None:
    if not 1 <= a <= P.n:
        raise PosetError(f"label {a} is outside 1..{P.n}")


def relation_holds(P: AnyPoset, a: int, b: int) -> bool:
    """Strict comparability ``a < b`` in P."""
    _check_label(P, a)
    _check_label(P, b)
    return P.less(a, b)


def hasse_edges(P: AnyPoset) -> set[tuple[int, int]]:
    """Cover pairs ``(a, b)``: ``a < b`` with nothing strictly between."""
    n = P.n
    less = P.less
    return {
        (a, b)
        for a in range(1, n + 1)
        for b in range(1, n + 1)
        if less(a, b) and not any(less(a, c) and less(c, b) for c in range(1, n + 1))
    }


def is_linear_extension(P: AnyPoset, seq: Sequence[int]) -> bool:
    n = P.n
    if sorted(seq) != list(range(1, n + 1)):
        raise PosetError(f"sequence is not an ordering of 1..{n}")
    rank = {x: i for i, x in enumerate(seq)}
    return all(
        rank[a] < rank[b]
        for a in range(1, n + 1)
        for b in range(1, n + 1)
        if P.less(a, b)
    )


def _down_masks(P: AnyPoset) -> list[int]:
    """Bitmask of strict predecessors of each element (bit a-1 for label a)."""
    n = P.n
    masks = [0] * n
    for b in range(1, n + 1):
        m = 0
        for a in range(1, n + 1):
            if P.less(a, b):
                m |= 1 << (a - 1)
        masks[b - 1] = m
    return masks


def _require_cap(P: AnyPoset, cap: int, what: str) -> None:
    if P.n > cap:
        raise SizeCapExceeded(f"{what} is capped at n <= {cap}, got n = {P.n}")


def count_le_bruteforce(P: AnyPoset) -> int:
    """
    Exact number of linear extensions by choosing minimal elements one at a
    time, memoized on the set of elements already placed.
    """
    _require_cap(P, BRUTE_EXTENSION_CAP, "brute-force extension counting")
    n = P.n
    down = _down_masks(P)
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def count(placed: int) -> int:
        if placed == full:
            return 1
        total = 0
        for x in range(n):
            bit = 1 << x
            if not placed & bit and down[x] & placed == down[x]:
                total += count(placed | bit)
        return total

    return count(0)


def linear_extensions(P: AnyPoset) -> Iterator[tuple[int, ...]]:
    """Every linear extension of P as a label sequence, by backtracking."""
    _require_cap(P, BRUTE_EXTENSION_CAP, "linear extension enumeration")
    n = P.n
    down = _down_masks(P)
    prefix: list[int] = []

    def walk(placed: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for x in range(n):
            bit = 1 << x
            if not placed & bit and down[x] & placed == down[x]:
                prefix.append(x + 1)
                yield from walk(placed | bit)
                prefix.pop()

    yield from walk(0)


def max_antichain_bruteforce(P: AnyPoset) -> int:
    """Largest set of pairwise incomparable elements, by branching on bitmasks."""
    _require_cap(P, BRUTE_ANTICHAIN_CAP, "brute-force antichain search")
    n = P.n
    down = _down_masks(P)
    up = [0] * n
    for b in range(n):
        m = down[b]
        while m:
            low = m & -m
            up[low.bit_length() - 1] |= 1 << b
            m ^= low
    # elements incomparable to x (and distinct from it)
    free = [((1 << n) - 1) & ~(down[x] | up[x] | (1 << x)) for x in range(n)]

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        low = mask & -mask
        x = low.bit_length() - 1
        rest = mask ^ low
        return max(best(rest), 1 + best(rest & free[x]))

    return best((1 << n) - 1)


def _closure(n: int, pairs: set[tuple[int, int]]) -> list[int]:
    """Transitive closure as successor bitmasks (bit b-1 set in reach[a-1])."""
    reach = [0] * n
    for a, b in pairs:
        reach[a - 1] |= 1 << (b - 1)
    for k in range(n):
        kbit = 1 << k
        for i in range(n):
            if reach[i] & kbit:
                reach[i] |= reach[k]
    return reach


def ingest_poset_file(text: str) -> GenericPoset:
    """
    Read the poset text format: first line ``n``, then one ``a b`` per line
    asserting ``a < b``. ``#`` starts a comment; blank lines are skipped.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise PosetError("missing size line")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise PosetError(f"line {lineno}: expected the size n, got {head!r}") from None
    if n < 1:
        raise PosetError(f"line {lineno}: size must be positive")
    pairs = set()
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise PosetError(f"line {lineno}: expected 'a b', got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise PosetError(f"line {lineno}: non-integer label in {line!r}") from None
        for x in (a, b):
            if not 1 <= x <= n:
                raise PosetError(f"line {lineno}: label {x} is outside 1..{n}")
        if a == b:
            raise PosetError(f"line {lineno}: cycle {a} < {a}")
        pairs.add((a, b))
    reach = _closure(n, pairs)
    for a in range(n):
        if reach[a] >> a & 1:
            raise PosetError(f"cycle through element {a + 1}")
    relation = frozenset(
        (a + 1, b + 1) for a in range(n) for b in range(n) if reach[a] >> b & 1
    )
    return GenericPoset(n, relation)


def as_poset2d(P: GenericPoset) -> Poset2D | None:
    """
    Return the Poset2D equal to P, or None when P is not of that form.

    The only candidate is the linear extension that puts the larger label
    first whenever two labels are incomparable; it is checked against P.
    """
    n = P.n
    if any(a > b for a, b in P.relation):
        return None
    down = _down_masks(P)
    placed = 0
    word = []
    for _ in range(n):
        # labels are naturally ordered, so some available element always exists
        for x in range(n - 1, -1, -1):
            bit = 1 << x
            if not placed & bit and down[x] & placed == down[x]:
                word.append(x + 1)
                placed |= bit
                break
    candidate = Poset2D(Permutation(tuple(word)))
    return candidate if candidate.relation() == P.relation else None
