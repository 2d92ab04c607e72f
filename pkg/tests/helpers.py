"""Builders for boards in the intermediate states of the pipeline."""
import numpy as np


def near_full(m, n, rng):
    """Each body cell holds some element targeting its own column."""
    pool = {j: list(rng.permutation(m) * n + j) for j in range(1, n + 1)}
    a = np.zeros((m, n), dtype=np.int64)
    rest = []
    for j in range(1, n + 1):
        a[1:, j - 1] = pool[j][:m - 1]
        rest.append(pool[j][m - 1])
    a[0] = rng.permutation(rest)
    return a


def body_full(m, n, rng):
    a = np.arange(1, m * n + 1).reshape(m, n)
    for j in range(n):
        a[1:, j] = rng.permutation(a[1:, j])
    a[0] = rng.permutation(a[0])
    return a


def body_sorted(m, n, rng):
    a = np.arange(1, m * n + 1).reshape(m, n)
    a[0] = rng.permutation(a[0])
    return a


def random_board(m, n, rng):
    return (rng.permutation(m * n) + 1).reshape(m, n)
