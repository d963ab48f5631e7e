"""Janet and Pommaret multiplicative variables, completeness, star decomposition.

All functions are pure; witnesses are returned on negative verdicts so callers
can surface actionable diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import DegreeCapExceeded, NotComplete, NotInIdeal, NotInSet
from .terms import Term, TermSet, variable

JANET = "janet"
POMMARET = "pommaret"


def janet_multiplicative_vars(M: TermSet, tau: Term) -> frozenset[int]:
    """Janet-multiplicative variables of ``tau`` relative to the set ``M``.

    x_j is multiplicative for tau = x^a unless M contains a term that agrees
    with tau in every exponent above position j and has a strictly larger
    exponent at j (exponents below j are unconstrained).
    """
    if tau not in M:
        raise NotInSet(f"{tau} is not in the set")
    exps = tau.exponents
    mult = set()
    for j in range(1, M.n + 1):
        blocked = False
        for other in M:
            oe = other.exponents
            if oe[j:] == exps[j:] and oe[j - 1] > exps[j - 1]:
                blocked = True
                break
        if not blocked:
            mult.add(j)
    return frozenset(mult)


def pommaret_multiplicative_vars(tau: Term, n: Optional[int] = None) -> frozenset[int]:
    """Variables x_j with x_j <= min(tau); all of them for the constant term."""
    if n is None:
        n = tau.nvars
    m = tau.min_index
    if m is None:
        return frozenset(range(1, n + 1))
    return frozenset(range(1, m + 1))


@dataclass(frozen=True, eq=False)
class DivisionAssignment:
    """One multiplicative-variable set per term of a fixed TermSet."""

    flavor: str
    basis: TermSet
    mult: Mapping[Term, frozenset[int]]

    @classmethod
    def janet(cls, M: TermSet) -> "DivisionAssignment":
        return cls(JANET, M, {t: janet_multiplicative_vars(M, t) for t in M})

    @classmethod
    def pommaret(cls, M: TermSet) -> "DivisionAssignment":
        return cls(POMMARET, M, {t: pommaret_multiplicative_vars(t, M.n) for t in M})


@dataclass(frozen=True)
class StarFactorization:
    """gamma = head * cofactor with the cofactor made of multiplicative variables."""

    head: Term
    cofactor: Term


def _covers(tau: Term, mult: frozenset[int], gamma: Term) -> bool:
    if not tau.divides(gamma):
        return False
    quot = gamma / tau
    return all(e == 0 or (i + 1) in mult for i, e in enumerate(quot.exponents))


def offspring_contains(
    M: TermSet, tau: Term, gamma: Term, assignment: Optional[DivisionAssignment] = None
) -> bool:
    """True iff gamma is tau times a product of multiplicative variables of tau."""
    if tau not in M:
        raise NotInSet(f"{tau} is not in the set")
    mult = assignment.mult[tau] if assignment else janet_multiplicative_vars(M, tau)
    return _covers(tau, mult, gamma)


def star_decompose(
    M: TermSet,
    gamma: Term,
    assignment: Optional[DivisionAssignment] = None,
    *,
    check_complete: bool = False,
) -> StarFactorization:
    """Unique factorization gamma = tau * eta with gamma in the offspring of tau.

    Divisors of gamma inside M are scanned in decreasing lex order; since
    distinct offsprings are disjoint, the first (and only) hit is returned.
    Pass ``check_complete=False`` (the default) to trust the caller that M is
    complete and skip an O(|M|^2) verification on every call.
    """
    if assignment is None:
        assignment = DivisionAssignment.janet(M)
    if check_complete:
        ok, witness = is_complete(M, assignment)
        if not ok:
            raise NotComplete("the set is not complete", witness=witness)
    divisors = [t for t in M if t.divides(gamma)]
    if not divisors:
        raise NotInIdeal(f"{gamma} is not in the generated ideal")
    for tau in sorted(divisors, key=lambda t: t.lex_key, reverse=True):
        if _covers(tau, assignment.mult[tau], gamma):
            return StarFactorization(tau, gamma / tau)
    raise NotComplete(
        f"{gamma} has no star factorization; the set is not complete",
        witness=None,
    )


def is_complete(
    M: TermSet, assignment: Optional[DivisionAssignment] = None
) -> tuple[bool, Optional[tuple[Term, int]]]:
    """Completeness test; on failure returns a witness (term, variable index).

    Only the products x_j * tau for non-multiplicative x_j need checking:
    coverage of the whole semigroup ideal follows from the offspring
    partition property.
    """
    if assignment is None:
        assignment = DivisionAssignment.janet(M)
    for tau in M:
        mult = assignment.mult[tau]
        for j in range(1, M.n + 1):
            if j in mult:
                continue
            prod = tau * variable(M.n, j)
            if not any(
                _covers(other, assignment.mult[other], prod) for other in M
            ):
                return False, (tau, j)
    return True, None


def is_stably_complete(
    M: TermSet, assignment: Optional[DivisionAssignment] = None
) -> tuple[bool, Optional[tuple[Term, int]]]:
    """Complete, and Janet multiplicative variables agree with the Pommaret ones."""
    if assignment is None:
        assignment = DivisionAssignment.janet(M)
    ok, witness = is_complete(M, assignment)
    if not ok:
        return False, witness
    for tau in M:
        pommaret = pommaret_multiplicative_vars(tau, M.n)
        mismatch = assignment.mult[tau] ^ pommaret
        if mismatch:
            return False, (tau, min(mismatch))
    return True, None


def janet_complete(M: TermSet, degree_cap: int) -> TermSet:
    """Enlarge M until it is complete, adding non-multiplicative products.

    Terms are processed in canonical (degree, lex) order and the first
    uncovered product x_j * tau is adjoined, then the scan restarts with the
    recomputed multiplicative structure.  Completion of a finite set always
    terminates; ``degree_cap`` is a safety valve and exceeding it raises
    DegreeCapExceeded carrying the partial set.
    """
    if len(M) == 0:
        raise ValueError("cannot complete an empty set")
    current = set(M)
    while True:
        ts = TermSet(current, M.n)
        assignment = DivisionAssignment.janet(ts)
        addition = None
        for tau in ts:
            for j in range(1, ts.n + 1):
                if j in assignment.mult[tau]:
                    continue
                prod = tau * variable(ts.n, j)
                if not any(
                    _covers(other, assignment.mult[other], prod) for other in ts
                ):
                    addition = prod
                    break
            if addition is not None:
                break
        if addition is None:
            return ts
        if addition.degree > degree_cap:
            raise DegreeCapExceeded(
                f"completion needs degree {addition.degree} > cap {degree_cap}",
                partial=ts,
            )
        current.add(addition)
