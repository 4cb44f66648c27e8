"""Pure-Python assembly search kernel.

Same contract as the compiled kernel in ``_speedups``: iterative deepening
over canonically ordered product sets with branch-and-bound pruning. Kept
dependency-free so the package works without a compiler.

Candidates are the distinct substrings of the target with length >= 2,
shortlex sorted. In a minimal pathway every product is such a substring
and any buildable product set can be built in shortlex order (operands are
strictly shorter than their product), so enumerating strictly increasing
id sequences visits every feasible set exactly once per deepening pass.
The first solution found at the optimal depth is therefore the canonical
(lexicographically smallest) witness.
"""

from __future__ import annotations

BACKEND = "pure"


def solve_sequence(
    lengths: list[int],
    splits: list[list[tuple[int, int]]],
    target: int,
    tlen: int,
    lower: int,
    upper: int,
) -> list[int]:
    """Return the canonical optimal build sequence of candidate ids.

    ``splits[i]`` holds the (left, right) id pairs whose concatenation is
    candidate ``i``; id -1 stands for a basis symbol, always available.
    ``lower``/``upper`` bracket the optimum (doubling bound / greedy bound).
    """
    built = bytearray(len(lengths))
    seq: list[int] = []

    def constructible(i: int) -> bool:
        for a, b in splits[i]:
            if (a < 0 or built[a]) and (b < 0 or built[b]):
                return True
        return False

    def dfs(start: int, maxlen: int, remaining: int) -> bool:
        # each join at most doubles the longest available piece
        m, need = maxlen, 0
        while m < tlen:
            m += m
            need += 1
        if need > remaining:
            return False
        if remaining == 1:
            if constructible(target):
                seq.append(target)
                return True
            return False
        for i in range(start, target):
            if constructible(i):
                built[i] = 1
                seq.append(i)
                bigger = lengths[i] if lengths[i] > maxlen else maxlen
                if dfs(i + 1, bigger, remaining - 1):
                    return True
                built[i] = 0
                seq.pop()
        return False

    for budget in range(max(lower, 1), upper + 1):
        if dfs(0, 1, budget):
            return seq
    raise AssertionError("greedy upper bound should always be attainable")
