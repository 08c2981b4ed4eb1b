"""Middle-translation representations and their characterizations."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import CayleyTable, Permutation, _bijective_rows, compose
from .errors import PreconditionError
from .properties import PASS, PropertyReport, Verdict, involutory_profile, is_latin_quandle
from .translations import middle_arrays

MIDDLE_KINDS = ("left-middle", "right-middle")


@dataclass(frozen=True)
class Representation:
    kind: str
    members: tuple[Permutation, ...]

    def __getitem__(self, i: int) -> Permutation:
        return self.members[i]

    def __len__(self) -> int:
        return len(self.members)

    def as_array(self) -> np.ndarray:
        return np.array([p.map for p in self.members], dtype=np.int64).reshape(len(self.members), -1)


def extract(t: CayleyTable, kind: str = "left-middle") -> Representation:
    lam, phi = middle_arrays(t)
    if kind == "left-middle":
        arr = lam
    elif kind == "right-middle":
        arr = phi
    else:
        raise ValueError(f"kind must be one of {MIDDLE_KINDS}, got {kind!r}")
    return Representation(kind, tuple(Permutation._trusted(tuple(r)) for r in arr.tolist()))


def _family_array(fam, n: int) -> np.ndarray:
    if isinstance(fam, Representation):
        fam = fam.members
    arr = np.array([list(p) for p in fam], dtype=np.int64)
    if arr.shape != (n, n) or arr.min() < 0 or arr.max() >= n:
        raise ValueError(f"family must be {n} maps on 0..{n - 1}")
    return arr


def _first(ok: np.ndarray, variables: str) -> Verdict:
    if ok.all():
        return PASS
    return Verdict(False, tuple(int(v) for v in np.argwhere(~ok)[0]), None, tuple(variables.split()))


def _axioms(F: np.ndarray, t: CayleyTable, tracks: np.ndarray) -> PropertyReport:
    T = t.cells
    n = t.n
    idx = np.arange(n)
    report = PropertyReport()
    report.add("fixes-index", _first(F[idx, idx] == idx, "x"))
    report.add("bijective", _first(_bijective_rows(F), "i"))
    i, x, y = np.indices((n, n, n))
    report.add("compatible", _first(F[T[i, x], y] == T[F[i, y], F[x, y]], "i x y"))
    report.add("tracks-table", _first(tracks, "i x"))
    return report


def check_lambda_axioms(fam, t: CayleyTable) -> PropertyReport:
    """Clauses for a family lambda_i read against t: lambda_x(x) = x, each
    lambda_i bijective, lambda_{i*x}(y) = lambda_i(y) * lambda_x(y).

    ``tracks-table`` additionally records whether lambda_i(x) * x = i, i.e.
    whether the family really is the left-middle representation of t.
    """
    F = _family_array(fam, t.n)
    i, x = np.indices((t.n, t.n))
    return _axioms(F, t, t.cells[F, x] == i)


def check_phi_axioms(fam, t: CayleyTable) -> PropertyReport:
    """Mirror of :func:`check_lambda_axioms`; ``tracks-table`` is x * phi_i(x) = i."""
    F = _family_array(fam, t.n)
    i, x = np.indices((t.n, t.n))
    return _axioms(F, t, t.cells[x, F] == i)


def _automorphism_verdict(F: np.ndarray, T: np.ndarray) -> Verdict:
    n = T.shape[0]
    i, x, y = np.indices((n, n, n))
    return _first(F[i, T[x, y]] == T[F[i, x], F[i, y]], "i x y")


def lambda_is_automorphism(t: CayleyTable) -> Verdict:
    """Every lambda_i of a RIPQ preserves the operation."""
    if not involutory_profile(t)["RIP"]:
        raise PreconditionError("not a RIPQ")
    return _automorphism_verdict(middle_arrays(t)[0], t.cells)


def phi_is_automorphism(t: CayleyTable) -> Verdict:
    """Every phi_i of a LIPQ preserves the operation."""
    if not involutory_profile(t)["LIP"]:
        raise PreconditionError("not a LIPQ")
    return _automorphism_verdict(middle_arrays(t)[1], t.cells)


def check_pi_characterization(pi: Iterable[Permutation], t: CayleyTable,
                              kind: str = "left-middle") -> PropertyReport:
    """Decide whether a set of permutations looks like a middle representation of t.

    fixed-points: every member fixes some element and every element is fixed
        by some member.
    unique-track: for all x, y exactly one member p has p(x)*x = y
        (x*p(x) = y for the right-middle kind).
    fixed-point-determines: two members that fix a common element z, with
        their composite also fixing z, are equal. Witness is (a, b, z) with
        a, b positions in the de-duplicated member list.
    """
    if kind not in MIDDLE_KINDS:
        raise ValueError(f"kind must be one of {MIDDLE_KINDS}, got {kind!r}")
    members = list(dict.fromkeys(pi))
    n = t.n
    T = t.cells
    if any(p.n != n for p in members):
        raise ValueError(f"all members must act on 0..{n - 1}")
    report = PropertyReport()

    bare = next((k for k, p in enumerate(members) if not p.fixed_points()), None)
    uncovered = next((z for z in range(n) if not any(p(z) == z for p in members)), None)
    if bare is not None:
        report.add("fixed-points", Verdict(False, (bare,), None, ("member",)))
    elif uncovered is not None:
        report.add("fixed-points", Verdict(False, (uncovered,), None, ("x",)))
    else:
        report.add("fixed-points", PASS)

    counts = np.zeros((n, n), dtype=np.int64)  # counts[x, y]
    idx = np.arange(n)
    for p in members:
        arr = np.asarray(p.map)
        hit = T[arr, idx] if kind == "left-middle" else T[idx, arr]
        counts[idx, hit] += 1
    report.add("unique-track", _first(counts == 1, "x y"))

    verdict = PASS
    for a, alpha in enumerate(members):
        for b, beta in enumerate(members):
            if a == b:
                continue
            ab = compose(alpha, beta)
            common = [z for z in alpha.fixed_points() if beta(z) == z and ab(z) == z]
            if common:
                verdict = Verdict(False, (a, b, common[0]), None, ("a", "b", "z"))
                break
        if not verdict:
            break
    report.add("fixed-point-determines", verdict)
    return report


def induced_groupoid(t: CayleyTable) -> CayleyTable:
    """The groupoid u with u(x, i) = lambda_i(x): its right translations are the lambdas."""
    lam, _ = middle_arrays(t)
    return CayleyTable(lam.T)


def rep_is_commutative(t: CayleyTable) -> Verdict:
    """x * lambda_i(x) = i for all i, x; equivalently lambda_i = phi_i."""
    lam, _ = middle_arrays(t)
    i, x = np.indices((t.n, t.n))
    return _first(t.cells[x, lam] == i, "i x")


def is_lipq(t: CayleyTable) -> bool:
    return bool(is_latin_quandle(t)) and involutory_profile(t)["LIP"]
