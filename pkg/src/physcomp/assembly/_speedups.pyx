# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled assembly search kernel; contract mirrors ``_purekernel``."""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


cdef struct Ctx:
    int n
    int target
    int tlen
    int* lengths
    int* split_off
    int* split_cnt
    int* split_a
    int* split_b
    unsigned char* built
    int* seq


cdef inline bint _constructible(Ctx* ctx, int i) noexcept nogil:
    cdef int k, a, b
    cdef int end = ctx.split_off[i] + ctx.split_cnt[i]
    for k in range(ctx.split_off[i], end):
        a = ctx.split_a[k]
        b = ctx.split_b[k]
        if (a < 0 or ctx.built[a]) and (b < 0 or ctx.built[b]):
            return True
    return False


cdef bint _dfs(Ctx* ctx, int start, int maxlen, int remaining, int depth) noexcept nogil:
    cdef int m = maxlen
    cdef int need = 0
    cdef int i, bigger
    while m < ctx.tlen:
        m += m
        need += 1
    if need > remaining:
        return False
    if remaining == 1:
        if _constructible(ctx, ctx.target):
            ctx.seq[depth] = ctx.target
            return True
        return False
    for i in range(start, ctx.target):
        if _constructible(ctx, i):
            ctx.built[i] = 1
            ctx.seq[depth] = i
            bigger = ctx.lengths[i] if ctx.lengths[i] > maxlen else maxlen
            if _dfs(ctx, i + 1, bigger, remaining - 1, depth + 1):
                return True
            ctx.built[i] = 0
    return False


def solve_sequence(lengths, splits, int target, int tlen, int lower, int upper):
    """Canonical optimal build sequence of candidate ids; see _purekernel."""
    cdef int n = len(lengths)
    cdef int total_splits = 0
    for sp in splits:
        total_splits += len(sp)

    cdef Ctx ctx
    ctx.n = n
    ctx.target = target
    ctx.tlen = tlen
    ctx.lengths = <int*> malloc(n * sizeof(int))
    ctx.split_off = <int*> malloc(n * sizeof(int))
    ctx.split_cnt = <int*> malloc(n * sizeof(int))
    ctx.split_a = <int*> malloc(total_splits * sizeof(int))
    ctx.split_b = <int*> malloc(total_splits * sizeof(int))
    ctx.built = <unsigned char*> malloc(n * sizeof(unsigned char))
    ctx.seq = <int*> malloc((upper + 1) * sizeof(int))
    if (ctx.lengths == NULL or ctx.split_off == NULL or ctx.split_cnt == NULL
            or ctx.split_a == NULL or ctx.split_b == NULL or ctx.built == NULL
            or ctx.seq == NULL):
        _free_ctx(&ctx)
        raise MemoryError()

    cdef int i, k, budget
    cdef int off = 0
    cdef bint found = False
    try:
        for i in range(n):
            ctx.lengths[i] = lengths[i]
            ctx.built[i] = 0
            ctx.split_off[i] = off
            ctx.split_cnt[i] = len(splits[i])
            for a, b in splits[i]:
                ctx.split_a[off] = a
                ctx.split_b[off] = b
                off += 1

        budget = lower if lower > 1 else 1
        while budget <= upper:
            with nogil:
                found = _dfs(&ctx, 0, 1, budget, 0)
            if found:
                return [ctx.seq[k] for k in range(budget)]
            budget += 1
        raise AssertionError("greedy upper bound should always be attainable")
    finally:
        _free_ctx(&ctx)


cdef void _free_ctx(Ctx* ctx) noexcept:
    free(ctx.lengths)
    free(ctx.split_off)
    free(ctx.split_cnt)
    free(ctx.split_a)
    free(ctx.split_b)
    free(ctx.built)
    free(ctx.seq)
