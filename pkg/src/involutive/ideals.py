"""Monomial ideals: star set, stability hierarchy, Pommaret basis, Hilbert
function via multiplicative-variable counting, sigma invariants and the
involutive degree test.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional

from .division import (
    DivisionAssignment,
    is_complete,
    is_stably_complete,
)
from .errors import MismatchedVariableCount, NotComplete, NotQuasiStable
from .terms import Term, TermSet, terms_of_degree

ESCALIER = "escalier"
IDEAL_SLICE = "ideal-slice"
_MODES = (ESCALIER, IDEAL_SLICE)


class MonomialIdeal:
    """A monomial ideal held by its minimal generating set."""

    __slots__ = ("generators", "n")

    def __init__(self, generators: Iterable[Term] | TermSet, n: Optional[int] = None):
        if isinstance(generators, TermSet):
            terms = list(generators)
            n = generators.n
        else:
            terms = [t if isinstance(t, Term) else Term(t) for t in generators]
            if n is None and terms:
                n = terms[0].nvars
        if n is None:
            raise ValueError("variable count required for the zero ideal")
        minimal = []
        for t in sorted(set(terms), key=lambda t: t.sort_key):
            if not any(g.divides(t) for g in minimal):
                minimal.append(t)
        self.generators = TermSet(minimal, n)
        self.n = n

    def contains(self, t: Term) -> bool:
        if t.nvars != self.n:
            raise MismatchedVariableCount(f"{t} has {t.nvars} variables, expected {self.n}")
        return any(g.divides(t) for g in self.generators)

    @property
    def is_zero(self) -> bool:
        return len(self.generators) == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.generators!r})"


def membership(J: MonomialIdeal, t: Term) -> bool:
    return J.contains(t)


def ideal_slice(J: MonomialIdeal, d: int) -> list[Term]:
    """All degree-d terms inside J, in lex order."""
    return [t for t in terms_of_degree(J.n, d) if J.contains(t)]


def escalier_slice(J: MonomialIdeal, d: int) -> list[Term]:
    """All degree-d terms outside J, in lex order."""
    return [t for t in terms_of_degree(J.n, d) if not J.contains(t)]


def _in_star_set(J: MonomialIdeal, t: Term) -> bool:
    return J.contains(t) and not J.contains(t.predecessor(t.min_index))


def _star_scan(J: MonomialIdeal, lo: int, hi: int) -> list[Term]:
    found = []
    for d in range(max(lo, 1), hi + 1):
        for t in terms_of_degree(J.n, d):
            if _in_star_set(J, t):
                found.append(t)
    return found


@dataclass(frozen=True)
class StabilityWitness:
    generator: Term
    variable: int
    divisor_variable: Optional[int] = None


@dataclass(frozen=True)
class StabilityReport:
    strongly_stable: bool
    stable: bool
    quasi_stable: bool
    strongly_stable_witness: Optional[StabilityWitness] = None
    stable_witness: Optional[StabilityWitness] = None
    quasi_stable_witness: Optional[StabilityWitness] = None


def classify(J: MonomialIdeal) -> StabilityReport:
    """Stability hierarchy of J, decided on the minimal generators alone.

    Quasi-stability avoids the unbounded exponent search: x_j^t * g/min(g)
    lands in J for some t iff some generator fits under g/min(g) in every
    exponent except the j-th.
    """
    strongly, stable, quasi = True, True, True
    sw = stw = qw = None
    n = J.n
    gens = list(J.generators)
    for g in gens:
        k = g.min_index
        if k is None:
            continue
        base = g.predecessor(k)
        for j in range(k + 1, n + 1):
            if stable and not J.contains(base * _var_cache(n, j)):
                stable = False
                stw = StabilityWitness(g, j, k)
            if quasi and not any(
                all(
                    gamma.exponents[i] <= base.exponents[i]
                    for i in range(n)
                    if i != j - 1
                )
                for gamma in gens
            ):
                quasi = False
                qw = StabilityWitness(g, j, k)
        if strongly:
            for i in range(1, n + 1):
                if g.exponents[i - 1] == 0:
                    continue
                swap_base = g.predecessor(i)
                for j in range(i + 1, n + 1):
                    if not J.contains(swap_base * _var_cache(n, j)):
                        strongly = False
                        sw = StabilityWitness(g, j, i)
                        break
                if not strongly:
                    break
    assert not strongly or stable
    assert not stable or quasi
    return StabilityReport(strongly, stable, quasi, sw, stw, qw)


_VAR_CACHE: dict[tuple[int, int], Term] = {}


def _var_cache(n: int, j: int) -> Term:
    key = (n, j)
    if key not in _VAR_CACHE:
        _VAR_CACHE[key] = Term(1 if i == j - 1 else 0 for i in range(n))
    return _VAR_CACHE[key]


def _uniform_quasi_stable_exponent(J: MonomialIdeal) -> int:
    """Smallest t >= 1 with x_j^t * g/min(g) in J for every generator g, x_j > min(g)."""
    t = 1
    gens = list(J.generators)
    for g in gens:
        k = g.min_index
        if k is None:
            continue
        base = g.predecessor(k)
        for j in range(k + 1, J.n + 1):
            needed = [
                max(0, gamma.exponents[j - 1] - base.exponents[j - 1])
                for gamma in gens
                if all(
                    gamma.exponents[i] <= base.exponents[i]
                    for i in range(J.n)
                    if i != j - 1
                )
            ]
            if not needed:
                raise NotQuasiStable(
                    f"no power of x_{j} pushes {g}/min back into the ideal",
                    witness=(g, j),
                )
            t = max(t, min(needed))
    return t


def pommaret_termination_degree(J: MonomialIdeal) -> int:
    """Degree d with the star set contained in degrees < d (quasi-stable J only)."""
    a = J.generators.max_degree()
    t = _uniform_quasi_stable_exponent(J)
    return a + t * J.n


def star_set(J: MonomialIdeal, degree_bound: int) -> tuple[TermSet, bool]:
    """Terms of J whose min-variable predecessor escapes J, up to degree_bound.

    The returned flag reports whether the truncation is exhaustive: it is
    computed, never assumed, and requires J quasi-stable, degree_bound at or
    past the termination bound, and an explicitly verified empty window of n
    further degrees.
    """
    if J.is_zero:
        raise ValueError("the zero ideal has no star set")
    found = _star_scan(J, 1, degree_bound)
    exhaustive = False
    if classify(J).quasi_stable:
        d = pommaret_termination_degree(J)
        if degree_bound >= d - 1:
            window = _star_scan(J, degree_bound + 1, degree_bound + J.n)
            exhaustive = not window
    return TermSet(found, J.n), exhaustive


def pommaret_basis(J: MonomialIdeal) -> TermSet:
    """The finite star set of a quasi-stable ideal (its Pommaret basis)."""
    report = classify(J)
    if not report.quasi_stable:
        w = report.quasi_stable_witness
        raise NotQuasiStable(
            "the ideal is not quasi-stable, its star set is infinite",
            witness=(w.generator, w.variable) if w else None,
        )
    d = pommaret_termination_degree(J)
    basis, exhaustive = star_set(J, d - 1)
    if not exhaustive:
        raise AssertionError("star set failed to stabilize below the proven bound")
    ok, witness = is_stably_complete(basis)
    if not ok:
        raise AssertionError(f"star set is not stably complete, witness {witness}")
    return basis


def regularity(J: MonomialIdeal) -> int:
    """Maximal degree in the Pommaret basis (quasi-stable J only)."""
    return pommaret_basis(J).max_degree()


def hilbert_function(
    M: TermSet, k: int, assignment: Optional[DivisionAssignment] = None
) -> int:
    """dim of the degree-k slice of P/(M) counted through offspring sizes.

    Requires M complete.  The ambient count is C(k+n-1, n-1) = dim P_k;
    binomials with a negative numerator or denominator contribute 0.
    """
    if assignment is None:
        assignment = DivisionAssignment.janet(M)
    ok, witness = is_complete(M)
    if not ok:
        raise NotComplete("Hilbert formula needs a complete set", witness=witness)
    if k < 0:
        raise ValueError("degree must be non-negative")
    n = M.n
    total = comb(k + n - 1, n - 1)
    for tau in M:
        if tau.degree > k:
            continue
        s = len(assignment.mult[tau])
        if s == 0:
            # An offspring with no multiplicative variables is the singleton
            # {tau}: it contributes exactly at its own degree (C(-1,-1) = 1
            # in the extended convention), which the plain negative-entry
            # rule would drop.
            total -= 1 if k == tau.degree else 0
            continue
        if k - tau.degree + s - 1 < 0:
            continue
        total -= comb(k - tau.degree + s - 1, s - 1)
    return total


@dataclass(frozen=True)
class SigmaProfile:
    degree: int
    mode: str
    counts: tuple[int, ...]


def sigma_profile(J: MonomialIdeal, p: int, mode: str = IDEAL_SLICE) -> SigmaProfile:
    """Counts of degree-p terms by minimal variable, over N(J) or over J."""
    if p < 1:
        raise ValueError("sigma invariants are defined for degree >= 1")
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}")
    slice_ = escalier_slice(J, p) if mode == ESCALIER else ideal_slice(J, p)
    counts = [0] * J.n
    for t in slice_:
        counts[t.min_index - 1] += 1
    return SigmaProfile(p, mode, tuple(counts))


def involutive_test(J: MonomialIdeal, p: int, mode: str = IDEAL_SLICE) -> bool:
    """Whether sum(sigma^(p+1)) equals sum(i * sigma^(p)_i) in the chosen mode."""
    sp = sigma_profile(J, p, mode)
    sp1 = sigma_profile(J, p + 1, mode)
    return sum(sp1.counts) == sum(i * c for i, c in enumerate(sp.counts, start=1))
