"""Left, right and middle translations of a table, and the identities tying them together."""
from __future__ import annotations

import numpy as np

from .core import CayleyTable, Permutation, TranslationFamily, _bijective_rows, is_latin
from .errors import NotAGroupError, NotLatinError
from .properties import PASS, PropertyReport, Verdict

KINDS = ("left", "right", "left-middle", "right-middle")


def _require_latin(t: CayleyTable) -> None:
    if not is_latin(t):
        raise NotLatinError("table is not a latin square")


def left_translation(t: CayleyTable, a: int) -> Permutation:
    """L_a: x -> a*x."""
    row = t.cells[a]
    if not _bijective_rows(row):
        raise NotLatinError(f"row {a} is not a bijection")
    return Permutation._trusted(tuple(row.tolist()))


def right_translation(t: CayleyTable, a: int) -> Permutation:
    """R_a: x -> x*a."""
    col = t.cells[:, a]
    if not _bijective_rows(col):
        raise NotLatinError(f"column {a} is not a bijection")
    return Permutation._trusted(tuple(col.tolist()))


def middle_arrays(t: CayleyTable) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(lam, phi)`` with ``lam[i, x] * x == i`` and ``x * phi[i, x] == i``.

    One pass over the table: cell (r, c) holding i records r as the row
    selected in column c, and c as the column selected in row r.
    """
    _require_latin(t)
    n = t.n
    idx = np.arange(n)
    lam = np.empty((n, n), dtype=np.int64)
    phi = np.empty((n, n), dtype=np.int64)
    lam[t.cells, idx[None, :]] = idx[:, None]
    phi[t.cells, idx[:, None]] = idx[None, :]
    return lam, phi


def left_middle(t: CayleyTable, i: int) -> Permutation:
    """lambda_i: x -> the unique a with a*x = i."""
    lam, _ = middle_arrays(t)
    return Permutation._trusted(tuple(lam[i].tolist()))


def right_middle(t: CayleyTable, i: int) -> Permutation:
    """phi_i: x -> the unique y with x*y = i."""
    _, phi = middle_arrays(t)
    return Permutation._trusted(tuple(phi[i].tolist()))


def family(t: CayleyTable, kind: str) -> TranslationFamily:
    _require_latin(t)
    if kind == "left":
        arr = t.cells
    elif kind == "right":
        arr = t.cells.T
    elif kind == "left-middle":
        arr = middle_arrays(t)[0]
    elif kind == "right-middle":
        arr = middle_arrays(t)[1]
    else:
        raise ValueError(f"unknown translation kind {kind!r}; expected one of {KINDS}")
    return TranslationFamily(kind, tuple(Permutation._trusted(tuple(r)) for r in arr.tolist()))


def _pointwise(ok: np.ndarray, variables=("i", "x")) -> Verdict:
    if ok.all():
        return PASS
    return Verdict(False, tuple(int(v) for v in np.argwhere(~ok)[0]), None, variables)


def check_translation_identities(t: CayleyTable) -> PropertyReport:
    """The six identities linking L_i, R_i, lambda_i and phi_i, over all (i, x)."""
    lam, phi = middle_arrays(t)
    T = t.cells
    n = t.n
    i, x = np.indices((n, n))
    report = PropertyReport()
    # lambda_i o phi_i = id  <=>  lambda_i = phi_i^{-1}
    report.add("lambda=phi^-1", _pointwise(lam[i, phi[i, x]] == x))
    phi_inv = np.empty_like(phi)
    phi_inv[i, phi] = x
    report.add("phi^-1(x)*x=i", _pointwise(T[phi_inv, x] == i))
    report.add("L=(lambda(x)*x)*x", _pointwise(T[i, x] == T[T[lam, x], x]))
    report.add("L=(x*phi(x))*x", _pointwise(T[i, x] == T[T[x, phi], x]))
    report.add("R=x*(lambda(x)*x)", _pointwise(T[x, i] == T[x, T[lam, x]]))
    report.add("R=x*(x*phi(x))", _pointwise(T[x, i] == T[x, T[x, phi]]))
    return report


def _group_inverses(t: CayleyTable, e: int) -> np.ndarray:
    # local import: groups depends on this module
    from .groups import group_check

    ok, identity = group_check(t)
    if not ok:
        raise NotAGroupError("table is not a group")
    if identity != e:
        raise NotAGroupError(f"{e} is not the identity element (identity is {identity})")
    return np.argmax(t.cells == e, axis=1)


def check_group_identities(t: CayleyTable, e: int) -> PropertyReport:
    """Middle translations of a group with identity e expressed through inverses."""
    inv = _group_inverses(t, e)
    lam, phi = middle_arrays(t)
    T = t.cells
    n = t.n
    i, x = np.indices((n, n))
    sq = T[x, x]
    report = PropertyReport()
    report.add("phi_i(x)=x^-1*i,lambda_i(x)=i*x^-1",
               _pointwise((phi == T[inv[x], i]) & (lam == T[i, inv[x]])))
    report.add("phi_e=lambda_e=inverse",
               _pointwise(np.broadcast_to((phi[e] == inv) & (lam[e] == inv), (n,)), ("x",)))
    report.add("L_i(x)=lambda_i(x)*x^2", _pointwise(T[i, x] == T[lam, sq]))
    report.add("R_i(x)=x^2*phi_i(x)", _pointwise(T[x, i] == T[sq, phi]))
    return report


def coincidence(t: CayleyTable) -> tuple[bool, bool]:
    """Whether L_i = lambda_i for every i, and whether R_i = phi_i for every i."""
    lam, phi = middle_arrays(t)
    return bool(np.array_equal(t.cells, lam)), bool(np.array_equal(t.cells.T, phi))
