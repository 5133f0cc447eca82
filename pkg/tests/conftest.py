"""Reference implementations used as independent oracles.

These follow the set-based definitions literally (blocks as Python sets,
min/max lookups, explicit three-case deletion) and share no code with the
package's tuple-based engine.
"""

from itertools import permutations

import pytest


def ref_admissible(blocks, kind="A"):
    n = len(blocks)
    out = set()
    for i, block in enumerate(blocks):
        if not block:
            continue
        if i == 0:
            out.add(min(block))
        if i == n - 1:
            out.update(block if kind == "B" and n > 1 else {max(block)})
        if 0 < i < n - 1:
            out.update(block)
    return out


def ref_delete(blocks, s, kind="A"):
    n = len(blocks)
    i = next(j for j, b in enumerate(blocks) if s in b)
    lower = {t for t in blocks[i] if t < s}
    upper = {t for t in blocks[i] if t > s}
    if n == 1:
        return []
    if i == 0:
        return [upper | blocks[1]] + blocks[2:]
    if i == n - 1:
        rest = lower | upper if kind == "B" else lower
        return blocks[: n - 2] + [blocks[n - 2] | rest]
    return blocks[: i - 1] + [blocks[i - 1] | lower, upper | blocks[i + 1]] + blocks[i + 2:]


def ref_is_c_permutation(blocks, w, kind="A"):
    blocks = [set(b) for b in blocks]
    for s in w:
        if s not in ref_admissible(blocks, kind):
            return False
        blocks = ref_delete(blocks, s, kind)
    return True


def ref_c_permutations(blocks, kind="A"):
    ground = sorted(set().union(*map(set, blocks)))
    return [w for w in permutations(ground) if ref_is_c_permutation(blocks, w, kind)]


def brute_descent_count(n, k):
    """#{w in S_n with exactly k-1 descents}."""
    return sum(
        1 for w in permutations(range(n)) if sum(a > b for a, b in zip(w, w[1:])) == k - 1
    )


@pytest.fixture
def example_blocks():
    return [(1,), (), (2, 3), (4,), (5,)]
