"""Exhaustive axiom checking with lexicographically-first counterexamples.

Each law is a single predicate ``holds(cells, *vars)`` written with numpy
indexing, so the same expression evaluates a whole grid of assignments at
once and replays a single witness.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .core import CayleyTable, _bijective_rows
from .errors import PreconditionError


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: tuple[int, ...] | None = None
    law: str | None = None
    variables: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.holds

    def describe(self) -> str:
        if self.witness is None:
            return ""
        names = self.variables or tuple(f"v{k}" for k in range(len(self.witness)))
        return " ".join(f"{a}={b}" for a, b in zip(names, self.witness))


PASS = Verdict(True)


@dataclass
class PropertyReport:
    """Named verdicts in insertion order; failed ones carry a witness."""

    results: dict[str, Verdict] = field(default_factory=dict)

    def add(self, name: str, verdict: Verdict) -> None:
        self.results[name] = verdict

    @property
    def verdicts(self) -> dict[str, bool]:
        return {k: v.holds for k, v in self.results.items()}

    @property
    def witnesses(self) -> dict[str, tuple[int, ...]]:
        return {k: v.witness for k, v in self.results.items() if not v.holds}

    @property
    def passed(self) -> bool:
        return all(v.holds for v in self.results.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.results.items() if not v.holds]

    def __getitem__(self, name: str) -> bool:
        return self.results[name].holds

    def __contains__(self, name: str) -> bool:
        return name in self.results

    def __iter__(self):
        return iter(self.results)


@dataclass(frozen=True)
class Law:
    name: str
    variables: tuple[str, ...]
    holds: Callable[..., np.ndarray | bool]

    def check(self, t: CayleyTable) -> Verdict:
        cells, n = t.cells, t.n
        k = len(self.variables)
        if k <= 2:
            firsts = [()]
            rest = k
        else:
            # chunk on the first variable to bound memory; order stays lexicographic
            firsts = [(a,) for a in range(n)]
            rest = k - 1
        grid = np.indices((n,) * rest) if rest else ()
        for head in firsts:
            ok = np.asarray(self.holds(cells, *head, *grid))
            if not ok.all():
                tail = np.argwhere(~ok)[0] if ok.ndim else ()
                witness = tuple(int(v) for v in (*head, *tail))
                return Verdict(False, witness, self.name, self.variables)
        return PASS

    def replay(self, t: CayleyTable, witness: Sequence[int]) -> bool:
        return bool(self.holds(t.cells, *witness))


def _law(name, variables, fn):
    return Law(name, tuple(variables.split()), fn)


LAWS: dict[str, Law] = {
    law.name: law
    for law in [
        _law("idempotent", "x", lambda T, x: T[x, x] == x),
        _law("left-division", "a", lambda T, a: _bijective_rows(T[a])),
        _law("right-division", "b", lambda T, b: _bijective_rows(T[:, b].T)),
        _law("left-distributive", "a x y", lambda T, a, x, y: T[a, T[x, y]] == T[T[a, x], T[a, y]]),
        _law("right-distributive", "x y a", lambda T, x, y, a: T[T[x, y], a] == T[T[x, a], T[y, a]]),
        _law("associative", "x y z", lambda T, x, y, z: T[T[x, y], z] == T[x, T[y, z]]),
        _law("commutative", "x y", lambda T, x, y: T[x, y] == T[y, x]),
        _law("medial", "w x y z", lambda T, w, x, y, z: T[T[w, x], T[y, z]] == T[T[w, y], T[x, z]]),
        _law("LIP", "x y", lambda T, x, y: T[x, T[x, y]] == y),
        _law("RIP", "x y", lambda T, x, y: T[T[y, x], x] == y),
        _law("CIP", "x y", lambda T, x, y: T[x, T[y, x]] == y),
    ]
}


def check_law(t: CayleyTable, name: str) -> Verdict:
    return LAWS[name].check(t)


def replay(t: CayleyTable, verdict: Verdict) -> bool:
    """Re-evaluate the law a failed verdict names at its witness."""
    return LAWS[verdict.law].replay(t, verdict.witness)


def _first_failure(t: CayleyTable, names: Sequence[str]) -> Verdict:
    for name in names:
        v = LAWS[name].check(t)
        if not v:
            return v
    return PASS


def is_quandle(t: CayleyTable) -> Verdict:
    """Idempotent, unique left divisors (columns bijective), right self-distributive."""
    return _first_failure(t, ["idempotent", "right-division", "right-distributive"])


def is_latin_quandle(t: CayleyTable) -> Verdict:
    return _first_failure(
        t, ["idempotent", "left-division", "right-division", "left-distributive", "right-distributive"]
    )


def is_commutative(t: CayleyTable) -> Verdict:
    return LAWS["commutative"].check(t)


def is_abelian_quandle(t: CayleyTable) -> Verdict:
    """The medial law (wx)(yz) = (wy)(xz), checked over all n^4 quadruples."""
    return LAWS["medial"].check(t)


def involutory_profile(t: CayleyTable) -> PropertyReport:
    """LIP, RIP, IP and CIP verdicts of a latin quandle."""
    lq = is_latin_quandle(t)
    if not lq:
        raise PreconditionError(f"not a latin quandle: {lq.law} fails at {lq.describe()}")
    report = PropertyReport()
    lip = LAWS["LIP"].check(t)
    rip = LAWS["RIP"].check(t)
    report.add("LIP", lip)
    report.add("RIP", rip)
    report.add("IP", lip if not lip else rip)
    report.add("CIP", LAWS["CIP"].check(t))
    return report


@dataclass(frozen=True)
class MorphismVerdict:
    holds: bool
    witness: tuple[int, int] | None = None
    bijective: bool = False

    def __bool__(self) -> bool:
        return self.holds

    @property
    def isomorphism(self) -> bool:
        return self.holds and self.bijective


def is_homomorphism(f: Sequence[int], s: CayleyTable, t: CayleyTable) -> MorphismVerdict:
    """Check f(a*b) = f(a).f(b) for all a, b; witness is the first bad (a, b)."""
    fa = np.asarray(list(f), dtype=np.int64)
    if fa.shape != (s.n,) or (fa.size and (fa.min() < 0 or fa.max() >= t.n)):
        raise ValueError(f"map must send 0..{s.n - 1} into 0..{t.n - 1}")
    ok = fa[s.cells] == t.cells[np.ix_(fa, fa)]
    bijective = s.n == t.n and len(set(fa.tolist())) == s.n
    if ok.all():
        return MorphismVerdict(True, None, bijective)
    a, b = np.argwhere(~ok)[0]
    return MorphismVerdict(False, (int(a), int(b)), bijective)
