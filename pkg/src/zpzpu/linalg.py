"""Exact Gaussian elimination and nullspaces over Z_p."""

from __future__ import annotations


def rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form mod p; returns (nonzero rows, pivot columns)."""
    mat = [[v % p for v in row] for row in rows]
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = next(
            (i for i in range(rank, len(mat)) if mat[i][col] % p != 0), None
        )
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        mat[rank] = [(v * inv) % p for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [(v - f * w) % p for v, w in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
    return mat[:rank], pivots


def nullspace(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of {x : M x = 0 mod p} for the matrix with the given rows."""
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows, p)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [0] * ncols
        vec[fc] = 1
        for row, pc in zip(red, pivots):
            vec[pc] = -row[fc] % p
        basis.append(vec)
    return basis
