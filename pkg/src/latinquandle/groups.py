"""Finite group utilities: detection, closures of permutation sets, cyclicity
and small-order isomorphism search."""
from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np

from .core import CayleyTable, Permutation, compose, invert, is_latin
from .errors import NotAGroupError, NotLatinError, SizeMismatchError, TooLargeError
from .properties import LAWS

CLOSURE_CAP = 10**6
ISOMORPHISM_CAP = 12


def group_check(t: CayleyTable) -> tuple[bool, int | None]:
    """Return ``(True, e)`` when t is a group with identity e, else ``(False, None)``."""
    if not is_latin(t):
        return False, None
    idx = np.arange(t.n)
    ids = [e for e in range(t.n) if np.array_equal(t.cells[e], idx) and np.array_equal(t.cells[:, e], idx)]
    if not ids or not LAWS["associative"].check(t):
        return False, None
    return True, ids[0]


def generate_closure(gens: Iterable[Permutation], n: int | None = None,
                     cap: int = CLOSURE_CAP) -> list[Permutation]:
    """Breadth-first closure of ``gens`` under composition, identity first.

    The result is a group: in a finite setting closure under composition
    already brings in every inverse. ``n`` is only needed when ``gens`` is empty.
    """
    gens = list(dict.fromkeys(gens))
    if gens:
        n = gens[0].n
        if any(g.n != n for g in gens):
            raise SizeMismatchError("generators act on different orders")
    elif n is None:
        raise ValueError("order n is required when there are no generators")
    identity = Permutation.identity(n)
    seen = {identity: None}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(s, g)
            if h not in seen:
                if len(seen) >= cap:
                    raise TooLargeError(f"closure exceeds {cap} elements")
                seen[h] = None
                queue.append(h)
    return list(seen)


def multiplication_group(t: CayleyTable, cap: int = CLOSURE_CAP) -> list[Permutation]:
    """Closure of all L_i, R_i, lambda_i and phi_i."""
    from .translations import KINDS, family

    gens = [p for kind in KINDS for p in family(t, kind).members]
    return generate_closure(gens, t.n, cap)


def inner_group(t: CayleyTable, cap: int = CLOSURE_CAP) -> list[Permutation]:
    """Closure of the maps S_x(y) = y*x."""
    if not is_latin(t):
        raise NotLatinError("inner group needs a latin table")
    gens = [Permutation._trusted(tuple(col)) for col in t.cells.T.tolist()]
    return generate_closure(gens, t.n, cap)


def check_permutation_group(elems: Sequence[Permutation]) -> dict[str, bool]:
    members = set(elems)
    if not members:
        return {"closure": False, "identity": False, "inverses": False}
    n = next(iter(members)).n
    return {
        "closure": all(compose(a, b) in members for a in members for b in members),
        "identity": Permutation.identity(n) in members,
        "inverses": all(invert(a) in members for a in members),
    }


def is_cyclic_group(elems: Sequence[Permutation]) -> bool:
    """True iff some member's powers exhaust the group."""
    axioms = check_permutation_group(elems)
    if not all(axioms.values()):
        bad = [k for k, v in axioms.items() if not v]
        raise NotAGroupError(f"not a group under composition: {', '.join(bad)} fails")
    size = len(set(elems))
    return any(g.order() == size for g in elems)


def _fingerprint(t: CayleyTable, a: int) -> tuple:
    T = t.cells
    powers = [a]
    while len(powers) <= t.n:
        nxt = int(T[powers[-1], a])
        if nxt in powers:
            break
        powers.append(nxt)
    return (
        int(T[a, a] == a),
        int((T[a] == np.arange(t.n)).sum()),
        int((T[:, a] == np.arange(t.n)).sum()),
        int((T[a] == a).sum()),
        int((T[:, a] == a).sum()),
        len(powers),
    )


def quandle_isomorphic(s: CayleyTable, t: CayleyTable,
                       cap: int = ISOMORPHISM_CAP) -> tuple[bool, list[int] | None]:
    """Search for a bijection f with f(a*b) = f(a)*f(b).

    Backtracking over images, each choice propagated through products of
    already-mapped elements; candidates must share the element fingerprint.
    """
    if s.n != t.n:
        return False, None
    n = s.n
    if n > cap:
        raise TooLargeError(f"isomorphism search is capped at order {cap}, got {n}")
    fs = [_fingerprint(s, a) for a in range(n)]
    ft = [_fingerprint(t, a) for a in range(n)]
    if sorted(fs) != sorted(ft):
        return False, None
    S, T = s.cells.tolist(), t.cells.tolist()
    f = [-1] * n
    used = [False] * n

    def propagate(trail: list[int]) -> bool:
        changed = True
        while changed:
            changed = False
            mapped = [a for a in range(n) if f[a] >= 0]
            for a in mapped:
                for b in mapped:
                    c, fc = S[a][b], T[f[a]][f[b]]
                    if f[c] < 0:
                        if used[fc] or fs[c] != ft[fc]:
                            return False
                        f[c] = fc
                        used[fc] = True
                        trail.append(c)
                        changed = True
                    elif f[c] != fc:
                        return False
        return True

    def undo(trail: list[int]) -> None:
        for c in trail:
            used[f[c]] = False
            f[c] = -1

    def search() -> bool:
        try:
            a = f.index(-1)
        except ValueError:
            return True
        for b in range(n):
            if used[b] or fs[a] != ft[b]:
                continue
            trail = [a]
            f[a] = b
            used[b] = True
            if propagate(trail) and search():
                return True
            undo(trail)
        return False

    if search():
        return True, list(f)
    return False, None
