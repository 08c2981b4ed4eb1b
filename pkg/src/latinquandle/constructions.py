"""Seed groups and the involutory latin quandles built from them."""
from __future__ import annotations

import numpy as np

from .core import CayleyTable
from .errors import NotAGroupError, PreconditionError, TooLargeError
from .groups import group_check
from .translations import (left_middle, left_translation, right_middle,
                           right_translation)

MAX_ELEMENTARY_RANK = 6  # 3**6 = 729 elements


def cyclic_group(n: int) -> CayleyTable:
    """(Z_n, +); the identity is 0."""
    if n < 1:
        raise ValueError(f"invalid order {n}")
    idx = np.arange(n)
    return CayleyTable((idx[:, None] + idx[None, :]) % n)


def elementary_abelian_3(k: int) -> CayleyTable:
    """(Z_3)^k under componentwise addition.

    Element v encodes the digit vector of v in base 3, so 1 = (0,1) and
    3 = (1,0) when k = 2 (most significant digit first).
    """
    if k < 1:
        raise ValueError(f"invalid rank {k}")
    if k > MAX_ELEMENTARY_RANK:
        raise TooLargeError(f"3^{k} exceeds the cap of 3^{MAX_ELEMENTARY_RANK}")
    size = 3**k
    idx = np.arange(size)
    out = np.zeros((size, size), dtype=np.int64)
    for d in range(k):
        w = 3**d
        out += ((idx[:, None] // w + idx[None, :] // w) % 3) * w
    return CayleyTable(out)


def _inverses(g: CayleyTable, e: int) -> np.ndarray:
    ok, identity = group_check(g)
    if not ok:
        raise NotAGroupError("seed table is not a group")
    if identity != e:
        raise NotAGroupError(f"{e} is not the identity element (identity is {identity})")
    return np.argmax(g.cells == e, axis=1)


def core(g: CayleyTable, e: int = 0, side: str = "left") -> CayleyTable:
    """Core quandle of a group: x*y = x y^-1 x (left) or y x^-1 y (right)."""
    inv = _inverses(g, e)
    G = g.cells
    x, y = np.indices(G.shape)
    if side == "left":
        return CayleyTable(G[G[x, inv[y]], x])
    if side == "right":
        return CayleyTable(G[G[y, inv[x]], y])
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def build_from_left_translations(g: CayleyTable, e: int = 0) -> CayleyTable:
    """x + y = L_e(x) * lambda_e(y) * x, using the group's own translations."""
    _inverses(g, e)
    L = left_translation(g, e)
    lam = left_middle(g, e)
    G = g.cells
    n = g.n
    return CayleyTable.from_function(n, lambda x, y: int(G[G[L(x), lam(y)], x]))


def build_from_right_translations(g: CayleyTable, e: int = 0) -> CayleyTable:
    """x + y = R_e(y) * phi_e(x) * y."""
    _inverses(g, e)
    R = right_translation(g, e)
    phi = right_middle(g, e)
    G = g.cells
    n = g.n
    return CayleyTable.from_function(n, lambda x, y: int(G[G[R(y), phi(x)], y]))


def build_ipq(g: CayleyTable, e: int = 0) -> CayleyTable:
    """x + y = x * lambda_e(y) * L_e(x) over a commutative group of exponent 3."""
    _inverses(g, e)
    G = g.cells
    n = g.n
    if not np.array_equal(G, G.T):
        x, y = np.argwhere(G != G.T)[0]
        raise PreconditionError(f"group is not commutative: {x}*{y} != {y}*{x}")
    k, m = 0, n
    while m % 3 == 0:
        m //= 3
        k += 1
    if m != 1:
        raise PreconditionError(f"order {n} is not a power of 3")
    cubes = G[G[np.arange(n), np.arange(n)], np.arange(n)]
    if not (cubes == e).all():
        x = int(np.argmax(cubes != e))
        raise PreconditionError(f"exponent is not 3: element {x} has x^3 != identity")
    L = left_translation(g, e)
    lam = left_middle(g, e)
    return CayleyTable.from_function(n, lambda x, y: int(G[G[x, lam(y)], L(x)]))
