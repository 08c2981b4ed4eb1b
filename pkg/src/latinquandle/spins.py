"""l-spins and r-spins, the spin groups they form, and recovery of the seed group.

r_spin(i, j) = phi_i o lambda_j and l_spin(i, j) = lambda_i o phi_j, right
factor applied first.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import CayleyTable, Permutation, compose, invert
from .errors import PreconditionError, RecoveryError
from .groups import check_permutation_group
from .properties import PASS, PropertyReport, Verdict, involutory_profile
from .translations import middle_arrays

SIDES = ("left", "right")


def _spin_array(t: CayleyTable, side: str) -> np.ndarray:
    """spins[i, j, x] for every pair, computed in one gather."""
    lam, phi = middle_arrays(t)
    if side == "right":
        outer, inner = phi, lam
    elif side == "left":
        outer, inner = lam, phi
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return outer[np.arange(t.n)[:, None, None], inner[None, :, :]]


def r_spin(t: CayleyTable, i: int, j: int) -> Permutation:
    lam, phi = middle_arrays(t)
    return compose(Permutation._trusted(tuple(phi[i].tolist())), Permutation._trusted(tuple(lam[j].tolist())))


def l_spin(t: CayleyTable, i: int, j: int) -> Permutation:
    lam, phi = middle_arrays(t)
    return compose(Permutation._trusted(tuple(lam[i].tolist())), Permutation._trusted(tuple(phi[j].tolist())))


@dataclass(frozen=True)
class SpinSet:
    side: str
    members: tuple[Permutation, ...]  # sorted lexicographically
    index: dict  # (i, j) -> position in members

    def __len__(self) -> int:
        return len(self.members)

    def spin(self, i: int, j: int) -> Permutation:
        return self.members[self.index[i, j]]


def spin_set(t: CayleyTable, side: str) -> SpinSet:
    arr = _spin_array(t, side)
    n = t.n
    unique = sorted({tuple(arr[i, j].tolist()) for i in range(n) for j in range(n)})
    pos = {m: k for k, m in enumerate(unique)}
    index = {(i, j): pos[tuple(arr[i, j].tolist())] for i in range(n) for j in range(n)}
    return SpinSet(side, tuple(Permutation._trusted(m) for m in unique), index)


@dataclass(frozen=True)
class GroupReport:
    closure: bool
    identity: bool
    inverses: bool
    commutative: bool
    cyclic: bool
    order: int

    @property
    def is_group(self) -> bool:
        return self.closure and self.identity and self.inverses


def check_spin_group(s) -> GroupReport:
    """Group axioms under composition, commutativity and cyclicity of a spin set.

    Accepts a :class:`SpinSet` or any collection of permutations.
    """
    members = list(dict.fromkeys(s.members if isinstance(s, SpinSet) else s))
    if not members:
        raise ValueError("empty spin set")
    axioms = check_permutation_group(members)
    commutative = all(compose(a, b) == compose(b, a) for a in members for b in members)
    is_group = all(axioms.values())
    cyclic = is_group and any(g.order() == len(members) for g in members)
    return GroupReport(axioms["closure"], axioms["identity"], axioms["inverses"],
                       commutative, cyclic, len(members))


def _pairs_verdict(bad, variables: str) -> Verdict:
    if bad is None:
        return PASS
    return Verdict(False, tuple(int(v) for v in bad), None, tuple(variables.split()))


LEMMA_CLAUSES = (
    "fixed-point-free",
    "row-separated",
    "inverse-pairs",
    "r-shift",
    "l-shift",
    "r-wrap",
    "l-wrap",
)


def check_lemma_3_3(t: CayleyTable, side: str = "right") -> PropertyReport:
    """Seven spin properties of an involutory latin quandle.

    The first three clauses concern the spins of ``side``. Shift and wrap
    clauses are read with 0-based labels mod n under the table's own
    labelling: pi_ij = pi_(i+1)(j+1) with pi_ii trivial, and
    pi_(n-1)0 = pi_(n-2)(n-1); r- and l- variants use r- and l-spins.
    """
    profile = involutory_profile(t)
    if not (profile["LIP"] or profile["RIP"]):
        raise PreconditionError("not involutory: neither LIP nor RIP holds")
    n = t.n
    spins = _spin_array(t, side)
    i, j, x = np.indices((n, n, n))
    report = PropertyReport()

    off = (i != j)
    bad = np.argwhere(off & (spins == x))
    report.add("fixed-point-free", _pairs_verdict(bad[0] if len(bad) else None, "i j x"))

    # spins[p, i, x] != spins[p, j, x] for i != j
    a, b, y = np.indices((n, n, n))
    first = None
    for p in range(n):
        bad = np.argwhere((a != b) & (spins[p, a, y] == spins[p, b, y]))
        if len(bad):
            first = (p, *bad[0])
            break
    report.add("row-separated", _pairs_verdict(first, "p i j x"))

    # spins[i, j] o spins[j, i] = id
    prod = spins[i, j, spins[j, i, x]]
    bad = np.argwhere(off & (prod != x))
    report.add("inverse-pairs", _pairs_verdict(bad[0][:2] if len(bad) else None, "i j"))

    for prefix, arr in (("r", _spin_array(t, "right")), ("l", _spin_array(t, "left"))):
        shifted = arr[(i + 1) % n, (j + 1) % n, x]
        trivial = (i != j) | (arr == x)
        bad = np.argwhere(~((shifted == arr) & trivial))
        report.add(f"{prefix}-shift", _pairs_verdict(bad[0][:2] if len(bad) else None, "i j"))
    for prefix, arr in (("r", _spin_array(t, "right")), ("l", _spin_array(t, "left"))):
        lhs, rhs = arr[(n - 1) % n, 0], arr[(n - 2) % n, (n - 1) % n]
        bad = np.argwhere(lhs != rhs)
        report.add(f"{prefix}-wrap", _pairs_verdict(bad[0] if len(bad) else None, "x"))
    return report


def recover_group(t: CayleyTable, side: str = "right", base: int = 0) -> CayleyTable:
    """Transport composition of spins back to 0..n-1 through j -> pi_(base, j).

    The result is a group table with identity ``base``.
    """
    n = t.n
    if not 0 <= base < n:
        raise ValueError(f"base {base} outside 0..{n - 1}")
    s = spin_set(t, side)
    report = check_spin_group(s)
    if not report.is_group:
        raise RecoveryError(f"{side} spins do not form a group under composition")
    row = [s.spin(base, j) for j in range(n)]
    label = {p: j for j, p in enumerate(row)}
    if len(label) != n or len(s) != n:
        raise RecoveryError(f"j -> pi_(base,j) is not a bijection onto the {len(s)} spins")
    cells = [[label[compose(row[a], row[b])] for b in range(n)] for a in range(n)]
    return CayleyTable(cells)


def spins_coincide(t: CayleyTable) -> Verdict:
    """l_spin(i, j) = r_spin(i, j) for all pairs; witness is the first differing (i, j)."""
    diff = (_spin_array(t, "left") != _spin_array(t, "right")).any(axis=2)
    bad = np.argwhere(diff)
    return _pairs_verdict(bad[0] if len(bad) else None, "i j")
