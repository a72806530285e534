"""Independent reference implementations used as test oracles."""

from __future__ import annotations

import itertools

import numba
import numpy as np

from lineocr.evaluate import levenshtein


def naive_edit_distance(a, b) -> int:
    """The textbook recursion, no memoization. Exponential; keep inputs short."""
    if not a:
        return len(b)
    if not b:
        return len(a)
    return min(
        naive_edit_distance(a[1:], b) + 1,
        naive_edit_distance(a, b[1:]) + 1,
        naive_edit_distance(a[1:], b[1:]) + (a[0] != b[0]),
    )


def all_strings(k: int, max_len: int) -> list[np.ndarray]:
    """Per length m, every string over range(k) as rows of an (k**m, m) array.

    Row i spells i in base k, most significant symbol first, so dropping the
    first symbol of row i gives row ``i % k**(m-1)`` of the next shorter block.
    """
    return [np.array(list(itertools.product(range(k), repeat=m)), dtype=np.int64).reshape(k**m, m) for m in range(max_len + 1)]


def recursion_tables(k: int, max_len: int) -> list[list[np.ndarray]]:
    """``T[m][n][i, j]`` = edit distance of string i (length m) and j (length n).

    Same recursion as :func:`naive_edit_distance`, evaluated for all pairs at
    once: each block is built from the blocks of its first-symbol suffixes.
    """
    T = [[None] * (max_len + 1) for _ in range(max_len + 1)]
    for m in range(max_len + 1):
        for n in range(max_len + 1):
            if m == 0 or n == 0:
                T[m][n] = np.full((k**m, k**n), max(m, n), dtype=np.int8)
                continue
            a, b = k ** (m - 1), k ** (n - 1)
            dele = T[m - 1][n].reshape(1, a, k, b) + np.int8(1)
            ins = T[m][n - 1].reshape(k, a, 1, b) + np.int8(1)
            first_differs = (np.arange(k)[:, None] != np.arange(k)[None, :]).astype(np.int8)
            sub = T[m - 1][n - 1].reshape(1, a, 1, b) + first_differs[:, None, :, None]
            T[m][n] = np.minimum(np.minimum(dele, ins), sub).reshape(k**m, k**n)
    return T


@numba.njit(cache=True)
def count_mismatches(rows_a, rows_b, table):
    bad = 0
    for i in range(rows_a.shape[0]):
        for j in range(rows_b.shape[0]):
            if levenshtein(rows_a[i], rows_b[j]) != table[i, j]:
                bad += 1
    return bad
