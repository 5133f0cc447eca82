"""C-permutations: enumeration, recognition, index functions and descents."""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from .core import (
    Blocks,
    Division,
    NotAdmissible,
    admissible_positions,
    check_composition,
    check_type,
    delete_position,
    make_division,
)

Permutation = tuple[int, ...]
IndexFunction = dict[int, int]

DEFAULT_ENUMERATION_CAP = 10**7


class ResourceLimitExceeded(RuntimeError):
    pass


def format_permutation(w: Sequence[int]) -> str:
    if all(0 <= s <= 9 for s in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    return tuple(int(ch) for ch in text)


def iter_c_permutations(d: Division, kind: str = "A") -> Iterator[Permutation]:
    """Yield every C-permutation of ``d`` in lexicographic order.

    Depth-first over admissible elements taken in increasing order; since the
    blocks are ordered, admissible positions already come out sorted.
    """
    kind = check_type(kind)
    n = len(d.blocks)
    prefix = [0] * n

    def walk(blocks: Blocks, depth: int):
        if depth == n:
            yield tuple(prefix)
            return
        for i, p in admissible_positions(blocks, kind):
            prefix[depth] = blocks[i][p]
            yield from walk(delete_position(blocks, i, p), depth + 1)

    return walk(d.blocks, 0)


def iter_with_index_functions(d: Division, kind: str = "A") -> Iterator[tuple[Permutation, IndexFunction]]:
    """Like :func:`iter_c_permutations`, pairing each w with its index function."""
    kind = check_type(kind)
    n = len(d.blocks)
    prefix = [0] * n
    indices = [0] * n

    def walk(blocks: Blocks, depth: int):
        if depth == n:
            yield tuple(prefix), dict(zip(prefix, indices))
            return
        for i, p in admissible_positions(blocks, kind):
            prefix[depth] = blocks[i][p]
            indices[depth] = i + 1
            yield from walk(delete_position(blocks, i, p), depth + 1)

    return walk(d.blocks, 0)


def enumerate_c_permutations(
    d: Division, kind: str = "A", cap: int = DEFAULT_ENUMERATION_CAP
) -> list[Permutation]:
    out = []
    for w in iter_c_permutations(d, kind):
        if len(out) >= cap:
            raise ResourceLimitExceeded(f"more than {cap} type {kind} C-permutations of {d}")
        out.append(w)
    return out


def enumerate_A(d: Division, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Permutation]:
    return enumerate_c_permutations(d, "A", cap)


def enumerate_B(d: Division, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Permutation]:
    return enumerate_c_permutations(d, "B", cap)


def count_c_permutations(d: Division, kind: str = "A") -> int:
    """Count by walking the deletion tree; the leaves are the C-permutations."""
    kind = check_type(kind)

    def walk(blocks: Blocks) -> int:
        if len(blocks) == 1:
            return 1
        return sum(walk(delete_position(blocks, i, p)) for i, p in admissible_positions(blocks, kind))

    return walk(d.blocks)


def _check_is_permutation(d: Division, w: Sequence[int]):
    if sorted(w) != list(d.ground_set):
        raise ValueError(f"{format_permutation(w)} is not a permutation of the ground set of {d}")


def deletion_chain(d: Division, w: Sequence[int], kind: str = "A") -> list[tuple[Division, int]] | None:
    """Pairs (division before step, 1-based block index of the deleted element).

    Returns None as soon as some step is inadmissible.
    """
    kind = check_type(kind)
    _check_is_permutation(d, w)
    blocks = d.blocks
    chain = []
    for s in w:
        positions = admissible_positions(blocks, kind)
        hit = next(((i, p) for i, p in positions if blocks[i][p] == s), None)
        if hit is None:
            return None
        chain.append((Division(blocks), hit[0] + 1))
        blocks = delete_position(blocks, *hit)
    return chain


def is_c_permutation(d: Division, w: Sequence[int], kind: str = "A") -> bool:
    return deletion_chain(d, w, kind) is not None


def is_c_permutation_A(d: Division, w: Sequence[int]) -> bool:
    return is_c_permutation(d, w, "A")


def is_c_permutation_B(d: Division, w: Sequence[int]) -> bool:
    return is_c_permutation(d, w, "B")


def index_function(d: Division, w: Sequence[int], kind: str = "A") -> IndexFunction:
    """Map each element of ``w`` to the block index it occupied when deleted."""
    chain = deletion_chain(d, w, kind)
    if chain is None:
        raise NotAdmissible(f"{format_permutation(w)} is not a C-permutation of {d}")
    return {s: j for s, (_, j) in zip(w, chain)}


def enumerate_index_functions(d: Division) -> list[IndexFunction]:
    """All maps sending each element of block i into {1..i}, ground-set order."""
    ground = d.ground_set
    ranges = [range(1, i + 1) for i, block in enumerate(d.blocks, start=1) for _ in block]
    return [dict(zip(ground, values)) for values in product(*ranges)]


def freeze_index_function(f: IndexFunction) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(f.items()))


def descent_count(seq: Sequence) -> int:
    return sum(1 for a, b in zip(seq, seq[1:]) if a > b)


def descent_count_with_prefix(lam, seq: Sequence) -> int:
    return descent_count((lam, *seq))


def circular_final_block(c: Sequence[int], w: Sequence[int]) -> int:
    """1-based index of the block that survives the circular deletion of ``w``.

    Blocks B_1..B_{n+1} (the last one empty) sit on a circle in index order.
    Deleting s removes s together with its block; the elements before s in
    that block join the end of the left neighbour, those after it join the
    front of the right neighbour.
    """
    c = check_composition(c)
    n = len(c)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"{format_permutation(w)} is not a permutation of 1..{n}")
    contents = {i + 1: list(block) for i, block in enumerate(make_division(c).blocks)}
    contents[n + 1] = []
    order = list(range(1, n + 2))
    home = {s: b for b, elems in contents.items() for s in elems}
    for s in w:
        b = home[s]
        at = order.index(b)
        left, right = order[at - 1], order[(at + 1) % len(order)]
        elems = contents.pop(b)
        cut = elems.index(s)
        before, after = elems[:cut], elems[cut + 1:]
        contents[left].extend(before)
        contents[right][:0] = after
        for t in before:
            home[t] = left
        for t in after:
            home[t] = right
        order.pop(at)
    (survivor,) = order
    return survivor
