"""Exact counts: mixed Eulerian numbers by the composition-level deletion
recursion, plus classical Eulerian and Catalan numbers."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Iterator, Sequence

from .core import Composition, check_composition, check_type


def deletion_children(c: Composition, kind: str = "A") -> list[tuple[Composition, int]]:
    """Compositions reached by one admissible deletion, with multiplicities.

    Deleting the r-th smallest element of block i (1 < i < n) moves r elements
    into block i-1 and the rest into block i+1; which element of an end block
    is deleted depends on the type.
    """
    n = len(c)
    children = []
    if c[0] >= 1:
        children.append(((c[0] + c[1] - 1,) + c[2:], 1))
    for i in range(1, n - 1):
        for r in range(c[i]):
            child = c[: i - 1] + (c[i - 1] + r, c[i] - r - 1 + c[i + 1]) + c[i + 2:]
            children.append((child, 1))
    if c[-1] >= 1:
        mult = 1 if kind == "A" else c[-1]
        children.append((c[: n - 2] + (c[n - 2] + c[n - 1] - 1,), mult))
    return children


@lru_cache(maxsize=None)
def _mixed_eulerian(c: Composition, kind: str) -> int:
    if len(c) == 1:
        return 1 if kind == "A" else 2
    total = sum(m * _mixed_eulerian(child, kind) for child, m in deletion_children(c, kind))
    return total if kind == "A" else 2 * total


def mixed_eulerian(c: Sequence[int], kind: str = "A") -> int:
    return _mixed_eulerian(check_composition(c), check_type(kind))


def mixed_eulerian_A(c: Sequence[int]) -> int:
    return mixed_eulerian(c, "A")


def mixed_eulerian_B(c: Sequence[int]) -> int:
    return mixed_eulerian(c, "B")


def clear_memo():
    _mixed_eulerian.cache_clear()


def iter_compositions(n: int, parts: int | None = None) -> Iterator[Composition]:
    """Weak compositions of n into ``parts`` parts (default n), lexicographic."""
    parts = n if parts is None else parts
    if parts == 1:
        yield (n,)
        return
    for head in range(n + 1):
        for tail in iter_compositions(n - head, parts - 1):
            yield (head,) + tail


def all_compositions(n: int) -> list[Composition]:
    if n < 1:
        raise ValueError("n must be at least 1")
    return list(iter_compositions(n))


@lru_cache(maxsize=None)
def eulerian(n: int, k: int) -> int:
    """Permutations of n letters with k-1 descents; 0 for k outside 1..n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 1 or k > n:
        return 0
    if n == 1:
        return 1
    return k * eulerian(n - 1, k) + (n - k + 1) * eulerian(n - 1, k - 1)


def _descents(w) -> int:
    return sum(1 for a, b in zip(w, w[1:]) if a > b)


@lru_cache(maxsize=None)
def _descent_table(n: int) -> Counter:
    """Counter over S_n of (descents, first letter)."""
    return Counter((_descents(w), w[0]) for w in permutations(range(1, n + 1)))


def eulerian_brute(n: int, k: int) -> int:
    if n < 1:
        raise ValueError("n must be at least 1")
    return sum(v for (d, _), v in _descent_table(n).items() if d == k - 1)


def eulerian_r(n: int, k: int, r: int) -> int:
    """Permutations w of S_{n+1} with k-1 descents and w_1 = r+1, by brute force.

    n = 0 is allowed (S_1 holds only the identity).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0 <= r <= n:
        raise ValueError(f"r={r} outside 0..{n}")
    return _descent_table(n + 1)[(k - 1, r + 1)]


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def superdiagonal_product(c: Sequence[int]) -> int:
    """1^c1 2^c2 ... n^cn."""
    out = 1
    for i, ci in enumerate(c, start=1):
        out *= i**ci
    return out
