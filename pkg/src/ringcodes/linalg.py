"""Gaussian elimination over F_q on numpy arrays of encoded field elements."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .fields import FieldCtx


@dataclass(frozen=True, eq=False)
class FqMatrix:
    field: FieldCtx
    entries: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=np.int64)
        if e.ndim == 1:
            e = e.reshape(1, -1) if e.size else e.reshape(0, 0)
        object.__setattr__(self, "entries", e)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FqMatrix)
            and self.field == other.field
            and self.entries.shape == other.entries.shape
            and bool(np.array_equal(self.entries, other.entries))
        )


def rref(field: FieldCtx, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form of ``a``; returns ``(reduced, pivot_columns)``.

    Zero rows end up at the bottom; ``len(pivot_columns)`` is the rank.
    """
    a = np.array(a, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        if a[r, c] != 1:
            a[r] = field.vmul(field.inv(int(a[r, c])), a[r])
        factors = a[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            a[hit] = field.vsub(a[hit], field.vmul(factors[hit, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def fq_row_reduce(m: FqMatrix) -> tuple[FqMatrix, int]:
    reduced, pivots = rref(m.field, m.entries)
    return FqMatrix(m.field, reduced), len(pivots)


def rank(field: FieldCtx, a: np.ndarray) -> int:
    return len(rref(field, a)[1])


def row_basis(field: FieldCtx, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Nonzero rows of the reduced form together with their pivot columns."""
    a = np.asarray(a, dtype=np.int64)
    if a.shape[0] == 0:
        return a.reshape(0, a.shape[1]), []
    reduced, pivots = rref(field, a)
    return reduced[: len(pivots)], pivots


def reduce_against(field: FieldCtx, basis: np.ndarray, pivots: list[int], v) -> np.ndarray:
    """Residue of ``v`` after clearing every pivot column of an rref ``basis``.

    ``v`` may be a single vector or a stack of vectors (last axis = columns).
    The residue is zero exactly when ``v`` lies in the row space.
    """
    v = np.array(v, dtype=np.int64, copy=True)
    single = v.ndim == 1
    if single:
        v = v[None, :]
    for row, c in zip(basis, pivots):
        f = v[:, c].copy()
        hit = np.flatnonzero(f)
        if hit.size:
            v[hit] = field.vsub(v[hit], field.vmul(f[hit, None], row[None, :]))
    return v[0] if single else v


def in_row_space(field: FieldCtx, basis: np.ndarray, pivots: list[int], v) -> np.ndarray | bool:
    res = reduce_against(field, basis, pivots, v)
    if res.ndim == 1:
        return not res.any()
    return ~res.any(axis=1)


def solve_left(field: FieldCtx, m: np.ndarray, target: np.ndarray) -> np.ndarray | None:
    """Some ``x`` with ``x @ m == target`` over F_q, or ``None``."""
    m = np.asarray(m, dtype=np.int64)
    aug = np.concatenate([m.T, np.asarray(target, dtype=np.int64)[:, None]], axis=1)
    reduced, pivots = rref(field, aug)
    nvars = m.shape[0]
    if nvars in pivots:
        return None
    x = np.zeros(nvars, dtype=np.int64)
    for row, c in enumerate(pivots):
        x[c] = reduced[row, nvars]
    return x


def left_kernel_vector(field: FieldCtx, m: np.ndarray) -> np.ndarray | None:
    """A nonzero ``x`` with ``x @ m == 0``, or ``None`` if rows are independent."""
    m = np.asarray(m, dtype=np.int64)
    reduced, pivots = rref(field, m.T)
    nvars = m.shape[0]
    free = [c for c in range(nvars) if c not in pivots]
    if not free:
        return None
    f = free[0]
    x = np.zeros(nvars, dtype=np.int64)
    x[f] = 1
    for row, c in enumerate(pivots):
        x[c] = field.neg(int(reduced[row, f]))
    return x


def batch_rank(field: FieldCtx, mats: np.ndarray, chunk: int = 4096) -> np.ndarray:
    """Rank of every matrix in a ``(B, m, k)`` stack, computed in chunks."""
    mats = np.asarray(mats, dtype=np.int64)
    out = np.empty(mats.shape[0], dtype=np.int64)
    for start in range(0, mats.shape[0], chunk):
        out[start : start + chunk] = _batch_rank(field, mats[start : start + chunk])
    return out


def _batch_rank(field: FieldCtx, mats: np.ndarray) -> np.ndarray:
    # A small dtype keeps the working set in cache; products of two
    # residues below 1024 still fit in int32.
    a = mats.astype(np.uint8 if field.q == 2 else np.int32)
    nb, m, k = a.shape
    rk = np.zeros(nb, dtype=np.int64)
    row_ids = np.arange(m)
    batch = np.arange(nb)
    for c in range(k):
        cand = (a[:, :, c] != 0) & (row_ids[None, :] >= rk[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = np.argmax(cand, axis=1)
        dst = np.minimum(rk, m - 1)
        prow = a[batch, piv].copy()
        a[batch[has], piv[has]] = a[batch[has], dst[has]]
        lead = prow[:, c]
        lead[~has] = 1  # matrices without a pivot here get a zero pivot row
        prow = field.vmul(field.vinv(lead)[:, None], prow).astype(a.dtype)
        prow[~has] = 0
        a[batch[has], dst[has]] = prow[has]
        fac = a[:, :, c].copy()
        fac[row_ids[None, :] <= dst[:, None]] = 0
        fac[~has] = 0
        a = field.vsub(a, field.vmul(fac[:, :, None], prow[:, None, :])).astype(a.dtype, copy=False)
        rk += has
    return rk


def span_chunks(field: FieldCtx, rows: np.ndarray, block: int = 2**16):
    """Yield every F_q-combination of ``rows`` exactly once, in blocks.

    The first rows are expanded into an in-memory table of at most ``block``
    vectors; the remaining rows are iterated as offsets onto that table.
    """
    rows = np.asarray(rows, dtype=np.int64)
    q = field.q
    k, width = rows.shape
    low = 0
    while low < k and q ** (low + 1) <= block:
        low += 1
    table = np.zeros((1, width), dtype=np.int64)
    for row in rows[:low]:
        table = np.concatenate([field.vadd(table, field.vmul(c, row)[None, :]) for c in range(q)])
    for combo in itertools.product(range(q), repeat=k - low):
        if not any(combo):
            yield table
            continue
        offset = np.zeros(width, dtype=np.int64)
        for c, row in zip(combo, rows[low:]):
            if c:
                offset = field.vadd(offset, field.vmul(c, row))
        yield field.vadd(table, offset[None, :])
