"""Optimal one-to-one assignment with a deterministic tie-break.

scipy's Hungarian solver returns an arbitrary optimum when several
assignments tie. Downstream consumers (regression tests, visualization
diffs) need reproducible output, so ties are refined to the
lexicographically smallest pairing: rows in order, each taking the
first column that still allows an optimal completion.
"""

from __future__ import annotations

import numpy as np
from scipy.optimize import linear_sum_assignment


def solve_assignment(cost: np.ndarray, atol: float = 1e-9) -> list[tuple[int, int]]:
    """Minimum-cost perfect matching on a square cost matrix.

    Returns (row, column) pairs sorted by row. Among equal-cost
    matchings, returns the one whose column sequence (read row by row)
    is lexicographically smallest. Row/column order therefore defines
    the preference; callers pass labels pre-sorted.
    """
    cost = np.asarray(cost, dtype=np.float64)
    k = cost.shape[0]
    if cost.shape != (k, k):
        raise ValueError(f"expected a square matrix, got {cost.shape}")
    if k == 0:
        return []

    def optimum(matrix: np.ndarray) -> float:
        rows, cols = linear_sum_assignment(matrix)
        return float(matrix[rows, cols].sum())

    total = optimum(cost)
    pairs: list[tuple[int, int]] = []
    remaining_cols = list(range(k))
    sub = cost
    fixed_cost = 0.0
    for row in range(k):
        for ci, col in enumerate(remaining_cols):
            candidate = fixed_cost + float(sub[0, ci])
            rest = np.delete(sub[1:], ci, axis=1)
            rest_cost = optimum(rest) if rest.size else 0.0
            if abs(candidate + rest_cost - total) <= atol:
                pairs.append((row, col))
                fixed_cost = candidate
                remaining_cols.pop(ci)
                sub = np.delete(sub[1:], ci, axis=1)
                break
        else:  # pragma: no cover - the optimum always admits a completion
            raise AssertionError("no column completes the optimal assignment")
    return pairs
