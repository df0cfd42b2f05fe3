"""Dense linear algebra over the two-element field.

Matrices are numpy uint8 arrays holding 0/1 entries.  Dimensions here are
tiny (tens at most), so clarity beats asymptotics; elimination is vectorised
row-wise but otherwise plain Gauss-Jordan.
"""

from __future__ import annotations

import numpy as np


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.uint8)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # inner dimensions stay well below 2**8, so uint8 accumulation is exact
    return (a.astype(np.uint32) @ b.astype(np.uint32) & 1).astype(np.uint8)


def rref(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the list of pivot columns (copy, mod 2)."""
    m = a.copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(m[r:, c])[0]
        if hits.size == 0:
            continue
        pivot = r + int(hits[0])
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        mask = m[:, c] == 1
        mask[r] = False
        m[mask] ^= m[r]
        pivots.append(c)
        r += 1
    return m, pivots


def reduce_vector(reduced: np.ndarray, pivots: list[int], vec: np.ndarray) -> np.ndarray:
    """Residue of *vec* after elimination against an rref basis."""
    out = vec.copy()
    for row, col in enumerate(pivots):
        if out[col]:
            out ^= reduced[row]
    return out


def nullspace(a: np.ndarray) -> np.ndarray:
    """Rows of the result form a basis of the kernel of *a*."""
    m, pivots = rref(a)
    cols = a.shape[1]
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = zeros(len(free), cols)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            if m[r, fc]:
                basis[i, pc] = 1
    return basis


def solve(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """One solution of ``a @ x = b`` or None if the system is inconsistent."""
    aug = np.concatenate([a, b.reshape(-1, 1).astype(np.uint8)], axis=1)
    m, pivots = rref(aug)
    if a.shape[1] in pivots:
        return None
    x = np.zeros(a.shape[1], dtype=np.uint8)
    for r, pc in enumerate(pivots):
        x[pc] = m[r, -1]
    return x


def lex_min_solution(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """Solution of ``a @ x = b`` minimising ``sum(x[k] * 2**k)``.

    This is the first solution an ascending-bitmask enumeration of candidate
    vectors would reach, which is the tie-break order used by the
    interleaving search.  Returns None when the system is inconsistent.
    """
    n = a.shape[1]
    rows = [a]
    rhs = [b.astype(np.uint8)]

    def consistent() -> bool:
        stacked = np.concatenate(rows, axis=0)
        stacked_rhs = np.concatenate(rhs)
        return solve(stacked, stacked_rhs) is not None

    if not consistent():
        return None
    for k in range(n - 1, -1, -1):
        unit = zeros(1, n)
        unit[0, k] = 1
        rows.append(unit)
        rhs.append(np.zeros(1, dtype=np.uint8))
        if not consistent():
            rhs[-1] = np.ones(1, dtype=np.uint8)
    return solve(np.concatenate(rows, axis=0), np.concatenate(rhs))
