"""Exact rational arrays and tensor-leg bookkeeping.

Every tensor in the package is a numpy ``object`` array of
:class:`fractions.Fraction`.  Conventions used throughout:

* a bilinear operation is ``c[i, j, k]`` with ``e_i * e_j = sum_k c[i, j, k] e_k``;
* a linear map is a matrix acting on coordinate columns, ``T(e_j) = sum_i T[i, j] e_i``;
* an action ``s[x, u, v]`` means ``S(e_x) f_u = sum_v s[x, u, v] f_v``;
* an element of ``P (x) P`` is ``r[i, j]``, ``r = sum r[i, j] e_i (x) e_j``;
* a cooperation is ``d[k, i, j]`` with ``delta(e_k) = sum d[k, i, j] e_i (x) e_j``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import ShapeError

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def qarray(data, shape: tuple[int, ...] | None = None) -> np.ndarray:
    """Convert nested data to an object array of Fractions."""
    if isinstance(data, np.ndarray) and data.dtype == object:
        arr = data.copy()
    else:
        arr = np.array(data, dtype=object)
    flat = arr.reshape(-1)
    for idx, v in enumerate(flat):
        flat[idx] = to_fraction(v)
    arr = flat.reshape(arr.shape)
    if shape is not None and arr.shape != tuple(shape):
        raise ShapeError(f"expected shape {tuple(shape)}, got {arr.shape}")
    return arr


def qzeros(shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(ZERO)
    return arr


def qeye(n: int) -> np.ndarray:
    arr = qzeros((n, n))
    for i in range(n):
        arr[i, i] = ONE
    return arr


def frozen(arr: np.ndarray) -> np.ndarray:
    arr = qarray(arr)
    arr.flags.writeable = False
    return arr


def is_zero(arr: np.ndarray) -> bool:
    return not any(v != 0 for v in np.asarray(arr).reshape(-1))


def first_nonzero(arr: np.ndarray) -> tuple[int, ...] | None:
    arr = np.asarray(arr)
    for idx in np.ndindex(arr.shape):
        if arr[idx] != 0:
            return tuple(int(i) for i in idx)
    return None


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    a = np.asarray(a)
    b = np.asarray(b)
    return a.shape == b.shape and is_zero(a - b)


def normalize(arr: np.ndarray) -> np.ndarray:
    """Coerce einsum output (which may hold bare ints) back to Fractions."""
    out = np.asarray(arr, dtype=object)
    if out.shape == ():
        return qarray([out.item()]).reshape(())
    return qarray(out)


def _scaled(arr: np.ndarray) -> tuple[list[int], int, int]:
    """Integer entries, common denominator and max absolute entry of ``arr``."""
    vals = [v if type(v) is Fraction else to_fraction(v) for v in arr.reshape(-1)]
    den = math.lcm(*(v.denominator for v in vals)) if vals else 1
    ints = [v.numerator * (den // v.denominator) for v in vals]
    return ints, den, max((abs(i) for i in ints), default=0)


def qeinsum(spec: str, *operands) -> np.ndarray:
    """Exact einsum over Fraction arrays.

    Each operand is scaled to integers by its common denominator.  When a
    worst-case bound on every partial sum fits in 62 bits the contraction runs
    natively in int64; otherwise it runs on Python integers.
    """
    arrays = [np.asarray(op) for op in operands]
    inputs, _, output = spec.replace(" ", "").partition("->")
    labels = inputs.split(",")
    if "." in spec or len(labels) != len(arrays):
        return normalize(np.einsum(spec, *arrays, optimize=len(arrays) > 2))
    sizes: dict[str, int] = {}
    for lab, arr in zip(labels, arrays):
        sizes.update(zip(lab, arr.shape))
    terms = math.prod(sizes[c] for c in sizes if c not in output)
    den, bound, scaled = 1, terms, []
    for arr in arrays:
        ints, d, m = _scaled(arr)
        den *= d
        bound *= m
        scaled.append(ints)
    native = bound < 2**62
    ints = [
        np.array(v, dtype=np.int64 if native else object).reshape(a.shape) for v, a in zip(scaled, arrays)
    ]
    # path search costs more than it saves on small native contractions
    res = np.asarray(np.einsum(spec, *ints, optimize=not native and len(ints) > 2))
    out = np.empty(res.shape, dtype=object)
    flat = out.reshape(-1)
    for i, v in enumerate(res.reshape(-1)):
        flat[i] = Fraction(int(v), den)
    return out


def det(m: np.ndarray) -> Fraction:
    """Exact determinant by fraction-preserving Gaussian elimination."""
    a = [list(row) for row in qarray(m)]
    n = len(a)
    if n == 0:
        return ONE
    if any(len(row) != n for row in a):
        raise ShapeError("determinant of a non-square matrix")
    sign = ONE
    result = ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return sign * result


def rank(m: np.ndarray) -> int:
    a = [list(row) for row in qarray(m)]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rk = 0
    for col in range(cols):
        pivot = next((r for r in range(rk, rows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rk], a[pivot] = a[pivot], a[rk]
        for r in range(rows):
            if r != rk and a[r][col] != 0:
                f = a[r][col] / a[rk][col]
                for c in range(col, cols):
                    a[r][c] -= f * a[rk][c]
        rk += 1
    return rk


def inverse(m: np.ndarray) -> np.ndarray:
    a = qarray(m)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ShapeError("inverse of a non-square matrix")
    aug = [list(a[i]) + [ONE if j == i else ZERO for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return qarray([row[n:] for row in aug])


# -- tensor legs --------------------------------------------------------------


def flip_tau(r: np.ndarray) -> np.ndarray:
    """Exchange the two tensor legs: ``x (x) y -> y (x) x``."""
    r = np.asarray(r)
    if r.ndim != 2 or r.shape[0] != r.shape[1]:
        raise ShapeError(f"r must be a square matrix, got {r.shape}")
    return qarray(r.T)


def _parse_legs(legs) -> tuple[int, int]:
    s = str(legs)
    if s not in ("12", "13", "23"):
        raise ValueError(f"legs must be one of 12, 13, 23, got {legs!r}")
    return int(s[0]) - 1, int(s[1]) - 1


def embed_leg(r: np.ndarray, legs) -> np.ndarray:
    """Place ``r`` in two of three tensor slots.

    The free slot holds the formal unit, stored as the extra basis index
    ``dim``; the result therefore has shape ``(dim + 1,) * 3``.
    """
    r = np.asarray(r)
    n = r.shape[0]
    p, q = _parse_legs(legs)
    unit_pos = 3 - p - q
    out = qzeros((n + 1,) * 3)
    for i in range(n):
        for j in range(n):
            if r[i, j] != 0:
                idx = [0, 0, 0]
                idx[p], idx[q], idx[unit_pos] = i, j, n
                out[tuple(idx)] = to_fraction(r[i, j])
    return out


def unitize(op: np.ndarray) -> np.ndarray:
    """Extend a bilinear operation by a formal two-sided unit at index ``dim``."""
    n = op.shape[0]
    ext = qzeros((n + 1,) * 3)
    ext[:n, :n, :n] = op
    for i in range(n + 1):
        ext[n, i, i] = ONE
        ext[i, n, i] = ONE
    return ext


def parse_pattern(pattern) -> tuple[str, str]:
    if isinstance(pattern, tuple):
        left, right = pattern
    else:
        s = str(pattern).replace(" ", "").replace("[", "").replace("]", "")
        for sep in ("*", "o", ",", "."):
            if sep in s:
                left, right = s.split(sep)
                break
        else:
            raise ValueError(f"cannot parse leg pattern {pattern!r}")
    _parse_legs(left)
    _parse_legs(right)
    return str(left), str(right)


def leg_product(r: np.ndarray, s: np.ndarray, pattern, op: np.ndarray, keep_unit: bool = False) -> np.ndarray:
    """Product ``r_{pq} * s_{uv}`` of two embedded tensors.

    In every slot the factor from ``r`` is multiplied on the left of the
    factor from ``s`` with ``op``; a slot where one side is the formal unit
    passes the other factor through.  For a Lie bracket ``op`` this is the
    bracket ``[r_{pq}, s_{uv}]``.

    With ``keep_unit`` the result is returned in the unitized cube of shape
    ``(dim + 1,) * 3``.  Otherwise any weight left on the unit slot (as in
    ``r_{23} * r_{23}``) is an error.
    """
    r = np.asarray(r)
    s = np.asarray(s)
    op = np.asarray(op)
    n = op.shape[0]
    if r.shape != (n, n) or s.shape != (n, n) or op.shape != (n, n, n):
        raise ShapeError("leg_product: r, s and op must share one dimension")
    left, right = parse_pattern(pattern)
    lp, rp = _parse_legs(left), _parse_legs(right)
    # letters for the legs of r (a, b) and s (c, d); each slot holds a leg or the unit
    slot_r = [None] * 3
    slot_s = [None] * 3
    slot_r[lp[0]], slot_r[lp[1]] = "a", "b"
    slot_s[rp[0]], slot_s[rp[1]] = "c", "d"
    terms, ops, out, unit_slots = ["ab", "cd"], [r, s], "", []
    for k, (u, v) in enumerate(zip(slot_r, slot_s)):
        if u and v:
            o = "xyz"[k]
            terms.append(u + v + o)
            ops.append(op)
            out += o
        elif u or v:
            out += u or v
        else:
            unit_slots.append(k)
    core = qeinsum(",".join(terms) + "->" + out, *ops)
    if not unit_slots:
        return qarray(np.pad(core, [(0, 1)] * 3, constant_values=ZERO)) if keep_unit else core
    if not keep_unit:
        if is_zero(core):
            return qzeros((n,) * 3)
        raise ValueError(f"pattern {left}*{right} leaves weight on the formal unit")
    full = qzeros((n + 1,) * 3)
    k = unit_slots[0]
    index = [slice(0, n)] * 3
    index[k] = n
    full[tuple(index)] = core
    return full


# -- duals --------------------------------------------------------------------


def dual_map(t: np.ndarray) -> np.ndarray:
    """Matrix of ``T*`` in dual bases: the transpose."""
    return qarray(np.asarray(t).T)


def dual_action(rho: np.ndarray) -> np.ndarray:
    """``rho*(x) = -rho(x)^T`` for every algebra basis index ``x``."""
    rho = np.asarray(rho)
    if rho.ndim != 3 or rho.shape[1] != rho.shape[2]:
        raise ShapeError(f"action tensor must have shape (n, m, m), got {rho.shape}")
    return qarray(-np.transpose(rho, (0, 2, 1)))


def block_diag(*blocks: np.ndarray) -> np.ndarray:
    sizes = [np.asarray(b).shape[0] for b in blocks]
    out = qzeros((sum(sizes), sum(sizes)))
    off = 0
    for b, n in zip(blocks, sizes):
        out[off:off + n, off:off + n] = b
        off += n
    return out


def random_rational(rng, shape, values: Iterable = (-2, -1, 0, 1, 2), denominators=(1,)) -> np.ndarray:
    vals = list(values)
    dens = list(denominators)
    out = qzeros(shape)
    for idx in np.ndindex(*shape):
        out[idx] = Fraction(vals[rng.integers(len(vals))], dens[rng.integers(len(dens))])
    return out
