"""Divisions of totally ordered sets and the admissibility/deletion calculus.

A division of an n-element set is a sequence of n disjoint sorted blocks,
every element of an earlier block smaller than every element of a later one.
Blocks are stored as tuples of ints; the empty division (no blocks) only
ever appears as the result of deleting the last element.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Sequence

Composition = tuple[int, ...]
Blocks = tuple[tuple[int, ...], ...]

TYPES = ("A", "B")


class InvalidComposition(ValueError):
    pass


class InvalidDivision(ValueError):
    pass


class NotAdmissible(ValueError):
    pass


def check_composition(c: Iterable[int]) -> Composition:
    """Return ``c`` as a tuple, raising if it is not a composition of n into n parts."""
    c = tuple(int(x) for x in c)
    if not c:
        raise InvalidComposition("composition must have at least one part")
    if any(x < 0 for x in c):
        raise InvalidComposition(f"negative part in {c}")
    if sum(c) != len(c):
        raise InvalidComposition(f"parts of {c} sum to {sum(c)}, expected {len(c)}")
    return c


def parse_composition(text: str) -> Composition:
    """Parse ``"1,0,2,1,1"`` or the compact digit form ``"10211"``."""
    text = text.strip()
    try:
        if "," in text:
            parts = [int(p) for p in text.split(",")]
        elif text.isdigit():
            parts = [int(ch) for ch in text]
        else:
            raise ValueError
    except ValueError:
        raise InvalidComposition(f"cannot parse composition {text!r}") from None
    return check_composition(parts)


def format_composition(c: Sequence[int]) -> str:
    return ",".join(str(x) for x in c)


def check_type(kind: str) -> str:
    kind = kind.upper()
    if kind not in TYPES:
        raise ValueError(f"unknown type {kind!r}, expected A or B")
    return kind


@dataclass(frozen=True)
class Division:
    blocks: Blocks

    def __post_init__(self):
        blocks = tuple(tuple(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        flat = [s for b in blocks for s in b]
        if any(a >= b for a, b in zip(flat, flat[1:])):
            raise InvalidDivision(
                f"blocks {blocks} are not strictly increasing within and across blocks"
            )
        if len(flat) != len(blocks):
            raise InvalidDivision(
                f"{len(blocks)} blocks over {len(flat)} elements; counts must agree"
            )

    @classmethod
    def parse(cls, text: str) -> Division:
        """Parse the ``1|-|2,3|4|5`` text format (``-`` is an empty block)."""
        blocks = []
        for chunk in text.strip().split("|"):
            chunk = chunk.strip()
            if chunk in ("-", ""):
                blocks.append(())
                continue
            try:
                blocks.append(tuple(int(x) for x in chunk.split(",")))
            except ValueError:
                raise InvalidDivision(f"cannot parse block {chunk!r} in {text!r}") from None
        division = cls(tuple(blocks))
        if not division.blocks:
            raise InvalidDivision("empty division")
        return division

    def __str__(self):
        return "|".join(",".join(map(str, b)) if b else "-" for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    @property
    def sizes(self) -> Composition:
        return tuple(len(b) for b in self.blocks)

    @property
    def ground_set(self) -> tuple[int, ...]:
        return tuple(s for b in self.blocks for s in b)

    def block_of(self, s: int) -> int:
        """0-based index of the block holding ``s``."""
        for i, block in enumerate(self.blocks):
            if s in block:
                return i
        raise NotAdmissible(f"{s} is not in the ground set of {self}")


def make_division(c: Sequence[int]) -> Division:
    """Canonical division of {1..n} into consecutive blocks of sizes ``c``."""
    c = check_composition(c)
    ends = list(accumulate(c))
    return Division(tuple(tuple(range(end - size + 1, end + 1)) for size, end in zip(c, ends)))


# Raw-block helpers.  Positions are (block index, offset), both 0-based.
# They skip validation and are shared with the enumeration code.


def admissible_positions(blocks: Blocks, kind: str = "A") -> list[tuple[int, int]]:
    n = len(blocks)
    if n == 0:
        return []
    out = []
    if blocks[0]:
        out.append((0, 0))
    if n == 1:
        return out
    for i in range(1, n - 1):
        out.extend((i, p) for p in range(len(blocks[i])))
    last = blocks[n - 1]
    if last:
        if kind == "A":
            out.append((n - 1, len(last) - 1))
        else:
            out.extend((n - 1, p) for p in range(len(last)))
    return out


def delete_position(blocks: Blocks, i: int, p: int) -> Blocks:
    """Delete the element at ``blocks[i][p]``; admissibility is the caller's job.

    For the last block the removed element's lower and upper neighbours both
    merge into the previous block, which is the type B rule and coincides with
    the type A rule whenever the element is the block maximum.
    """
    n = len(blocks)
    block = blocks[i]
    if n == 1:
        return ()
    if i == 0:
        return (block[p + 1:] + blocks[1],) + blocks[2:]
    if i == n - 1:
        return blocks[: n - 2] + (blocks[n - 2] + block[:p] + block[p + 1:],)
    return (
        blocks[: i - 1]
        + (blocks[i - 1] + block[:p], block[p + 1:] + blocks[i + 1])
        + blocks[i + 2:]
    )


def admissible_elements(d: Division, kind: str = "A") -> frozenset[int]:
    return frozenset(d.blocks[i][p] for i, p in admissible_positions(d.blocks, kind))


def admissible_elements_A(d: Division) -> frozenset[int]:
    return admissible_elements(d, "A")


def admissible_elements_B(d: Division) -> frozenset[int]:
    return admissible_elements(d, "B")


def _locate(d: Division, s: int) -> tuple[int, int]:
    i = d.block_of(s)
    return i, d.blocks[i].index(s)


def delete(d: Division, s: int, kind: str = "A") -> Division:
    """Delete admissible ``s`` from ``d`` (type A or B rule)."""
    i, p = _locate(d, s)
    if (i, p) not in admissible_positions(d.blocks, kind):
        raise NotAdmissible(f"{s} is not type {kind} admissible in {d}")
    return Division(delete_position(d.blocks, i, p))


def delete_A(d: Division, s: int) -> Division:
    return delete(d, s, "A")


def delete_B(d: Division, s: int) -> Division:
    return delete(d, s, "B")


def is_superdiagonal(c: Sequence[int]) -> bool:
    return all(total >= i for i, total in enumerate(accumulate(c), start=1))


def is_subdiagonal(c: Sequence[int]) -> bool:
    return is_superdiagonal(tuple(reversed(c)))
