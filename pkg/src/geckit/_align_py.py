"""Pure-Python alignment kernel.

Reference implementation of the cost-matrix fill and backtrace used by the
token aligner. A compiled twin (_align_c) implements the identical
algorithm; both must produce bit-identical results, so any change here has
to be mirrored there. Keep the floating-point evaluation order in sync.

Op codes in the returned tuples:
    0 MATCH  1 SUB  2 INS  3 DEL  4 TRANSPOSE
"""
from __future__ import annotations

INF = float("inf")

_CONTENT_TAGS = ("ADJ", "ADV", "NOUN", "VERB")


def _lcs_len(a: str, b: str) -> int:
    la = len(a)
    lb = len(b)
    if la == 0 or lb == 0:
        return 0
    prev = [0] * (lb + 1)
    cur = [0] * (lb + 1)
    for i in range(1, la + 1):
        ai = a[i - 1]
        cur[0] = 0
        for j in range(1, lb + 1):
            if ai == b[j - 1]:
                cur[j] = prev[j - 1] + 1
            elif cur[j - 1] >= prev[j]:
                cur[j] = cur[j - 1]
            else:
                cur[j] = prev[j]
        prev, cur = cur, prev
    return prev[lb]


def align_kernel(
    src_forms,
    src_lemmas,
    src_upos,
    tgt_forms,
    tgt_lemmas,
    tgt_upos,
    del_cost,
    ins_cost,
    lemma_mismatch_cost,
    pos_same_cost,
    pos_both_content_cost,
    pos_other_cost,
    transpose_base,
    window,
):
    """Minimum-cost alignment between two annotated token sequences.

    Returns (ops, total_cost) where each op is
    (code, src_start, src_end, tgt_start, tgt_end, cost).

    Tie-break: at equal cost a cell prefers MATCH/SUB, then TRANSPOSE
    (longer spans first), then DEL, then INS.
    """
    n = len(src_forms)
    m = len(tgt_forms)
    width = m + 1
    src_lower = [f.lower() for f in src_forms]
    tgt_lower = [f.lower() for f in tgt_forms]

    char_sim_cache: dict[tuple[str, str], float] = {}

    def sub_cost(si: int, tj: int) -> float:
        fa = src_forms[si]
        fb = tgt_forms[tj]
        if fa == fb:
            return 0.0
        cost = 0.0
        if src_lemmas[si] != tgt_lemmas[tj]:
            cost += lemma_mismatch_cost
        pa = src_upos[si]
        pb = tgt_upos[tj]
        if pa == pb:
            cost += pos_same_cost
        elif pa in _CONTENT_TAGS and pb in _CONTENT_TAGS:
            cost += pos_both_content_cost
        else:
            cost += pos_other_cost
        key = (fa, fb)
        sim = char_sim_cache.get(key)
        if sim is None:
            denom = len(fa) + len(fb)
            sim = 2.0 * _lcs_len(fa, fb) / denom if denom else 1.0
            char_sim_cache[key] = sim
        return cost + (1.0 - sim)

    dist = [INF] * ((n + 1) * width)
    back_kind = [-1] * ((n + 1) * width)
    back_k = [0] * ((n + 1) * width)
    dist[0] = 0.0

    for i in range(n + 1):
        row = i * width
        for j in range(m + 1):
            if i == 0 and j == 0:
                continue
            best = INF
            kind = -1
            span = 0
            if i > 0 and j > 0:
                c = sub_cost(i - 1, j - 1)
                v = dist[row - width + j - 1] + c
                if v < best:
                    best = v
                    kind = 0 if src_forms[i - 1] == tgt_forms[j - 1] else 1
            if i >= 2 and j >= 2:
                kmax = min(window, i, j)
                for k in range(kmax, 1, -1):
                    ss = src_lower[i - k:i]
                    tt = tgt_lower[j - k:j]
                    if ss != tt and sorted(ss) == sorted(tt):
                        v = dist[(i - k) * width + j - k] + transpose_base * (k - 1)
                        if v < best:
                            best = v
                            kind = 4
                            span = k
            if i > 0:
                v = dist[row - width + j] + del_cost
                if v < best:
                    best = v
                    kind = 3
                    span = 0
            if j > 0:
                v = dist[row + j - 1] + ins_cost
                if v < best:
                    best = v
                    kind = 2
                    span = 0
            dist[row + j] = best
            back_kind[row + j] = kind
            back_k[row + j] = span

    ops = []
    i, j = n, m
    while i > 0 or j > 0:
        idx = i * width + j
        kind = back_kind[idx]
        if kind in (0, 1):
            ops.append((kind, i - 1, i, j - 1, j, sub_cost(i - 1, j - 1)))
            i -= 1
            j -= 1
        elif kind == 4:
            k = back_k[idx]
            ops.append((4, i - k, i, j - k, j, transpose_base * (k - 1)))
            i -= k
            j -= k
        elif kind == 3:
            ops.append((3, i - 1, i, j, j, del_cost))
            i -= 1
        elif kind == 2:
            ops.append((2, i, i, j - 1, j, ins_cost))
            j -= 1
        else:  # unreachable unless the table fill is broken
            raise RuntimeError("alignment backtrace hit an unfilled cell")
    ops.reverse()
    return ops, dist[n * width + m]
