"""Marked polynomials and sets, the star-constrained reduction, the marked
basis criterion and an independent linear-algebra oracle.

Coefficients are exact rationals (``fractions.Fraction``) in the concrete
case; every operation only needs ``+``, ``-``, ``*`` and truth testing, so the
same machinery runs unchanged over the integer parameter ring used for scheme
equations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from . import _linalg
from .division import DivisionAssignment, StarFactorization, is_complete, is_stably_complete, star_decompose
from .errors import (
    DegreeMismatch,
    HeadNotInM,
    MismatchedVariableCount,
    NonHomogeneousInput,
    NotComplete,
    NotStablyComplete,
    TailInIdeal,
)
from .terms import Term, TermSet, terms_of_degree, variable

REDUCED = "reduced"
STEP_LIMIT = "step-limit"
CYCLE_DETECTED = "cycle-detected"

DEFAULT_STEP_CAP = 100_000


class MarkedPolynomial:
    """A monic homogeneous polynomial with a designated head term.

    The stored tail carries explicit signs: the polynomial is
    head + sum(coeff * term) over the tail.
    """

    __slots__ = ("head", "tail")

    def __init__(self, head: Term, tail: Mapping[Term, object]):
        self.head = head
        self.tail = {
            t: tail[t] for t in sorted(tail, key=lambda t: t.sort_key) if tail[t]
        }

    def polynomial(self) -> dict[Term, object]:
        """Full support mapping, head included with coefficient 1."""
        poly = {self.head: 1}
        poly.update(self.tail)
        return poly

    def times(self, eta: Term) -> dict[Term, object]:
        """The product of this polynomial by the term eta, as a mapping."""
        poly = {self.head * eta: 1}
        for t, c in self.tail.items():
            poly[t * eta] = c
        return poly

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MarkedPolynomial)
            and self.head == other.head
            and self.tail == other.tail
        )

    def __repr__(self) -> str:
        return f"MarkedPolynomial(head={self.head}, tail={self.tail})"


class MarkedSet:
    """Marked polynomials indexed by a complete division basis M.

    Construct through :func:`make_marked_set`, which validates the tails.
    Completeness and stable completeness of M are computed lazily and cached;
    star decompositions are memoized since reduction revisits the same terms.
    """

    def __init__(self, basis: TermSet, polys: dict[Term, MarkedPolynomial]):
        self.basis = basis
        self.n = basis.n
        self.polys = polys
        self.assignment = DivisionAssignment.janet(basis)
        self._complete: Optional[tuple[bool, Optional[tuple[Term, int]]]] = None
        self._stably: Optional[tuple[bool, Optional[tuple[Term, int]]]] = None
        self._decompositions: dict[Term, StarFactorization] = {}

    @property
    def completeness(self) -> tuple[bool, Optional[tuple[Term, int]]]:
        if self._complete is None:
            self._complete = is_complete(self.basis, self.assignment)
        return self._complete

    @property
    def stable_completeness(self) -> tuple[bool, Optional[tuple[Term, int]]]:
        if self._stably is None:
            self._stably = is_stably_complete(self.basis, self.assignment)
        return self._stably

    def contains(self, t: Term) -> bool:
        """Membership in the ideal generated by the heads."""
        return any(g.divides(t) for g in self.basis)

    def decompose(self, t: Term) -> StarFactorization:
        fact = self._decompositions.get(t)
        if fact is None:
            fact = star_decompose(self.basis, t, self.assignment)
            self._decompositions[t] = fact
        return fact

    def __iter__(self):
        return iter(self.polys.values())

    def __len__(self) -> int:
        return len(self.polys)


def make_marked_set(
    M: TermSet | Iterable[Term],
    tails: Optional[Mapping[Term, Mapping[Term, object]]] = None,
) -> MarkedSet:
    """Build and validate a marked set: one polynomial per element of M.

    Heads missing from ``tails`` get empty tails.  Tail terms must avoid the
    ideal generated by M and match their head's degree.
    """
    if not isinstance(M, TermSet):
        M = TermSet(M)
    tails = tails or {}
    for head in tails:
        if head not in M:
            raise HeadNotInM(f"{head} is not in the division basis")
    members = list(M)
    polys: dict[Term, MarkedPolynomial] = {}
    for head in members:
        tail = tails.get(head, {})
        clean: dict[Term, object] = {}
        for t, c in tail.items():
            if not c:
                continue
            if t.nvars != M.n:
                raise MismatchedVariableCount(f"tail term {t} has wrong variable count")
            if t.degree != head.degree:
                raise DegreeMismatch(
                    f"tail term {t} has degree {t.degree}, head {head} has {head.degree}"
                )
            if any(g.divides(t) for g in members):
                raise TailInIdeal(f"tail term {t} lies in the ideal")
            clean[t] = c
        polys[head] = MarkedPolynomial(head, clean)
    return MarkedSet(M, polys)


@dataclass(frozen=True)
class ReductionStep:
    term: Term
    head: Term
    cofactor: Term
    coefficient: object


@dataclass
class ReductionTrace:
    steps: list[ReductionStep]
    result: dict[Term, object]
    status: str

    @property
    def is_zero(self) -> bool:
        return self.status == REDUCED and not self.result


def _subtract_scaled(work: dict, f: MarkedPolynomial, eta: Term, c) -> None:
    # work -= c * f * eta, dropping cancelled terms
    for t, a in f.times(eta).items():
        cur = work.get(t)
        val = c * a
        new = -val if cur is None else cur - val
        if new:
            work[t] = new
        else:
            work.pop(t, None)


def _state_key(work: dict) -> tuple:
    return tuple(
        (t.exponents, work[t]) for t in sorted(work, key=lambda t: t.sort_key)
    )


def reduce(
    G: MarkedSet, h: Mapping[Term, object], *, step_cap: int = DEFAULT_STEP_CAP
) -> ReductionTrace:
    """Star-constrained reduction of a homogeneous polynomial against G.

    Each step picks a term gamma of the current support lying in the ideal,
    takes its star factorization gamma = head * cofactor and subtracts the
    matching multiple of the marked polynomial.  Among reducible terms the one
    with the lex-greatest cofactor is rewritten first (ties broken by the
    lex-greater term): every new reducible term then has a strictly smaller
    cofactor, which makes the process terminate whenever the basis is stably
    complete.  Over a merely complete basis the relation can loop, so repeated
    polynomial states are detected and reported as CYCLE_DETECTED, with
    ``step_cap`` as a final backstop.
    """
    if step_cap < 1:
        raise ValueError("step cap must be at least 1")
    work: dict[Term, object] = {}
    degrees = set()
    for t, c in h.items():
        if not c:
            continue
        if t.nvars != G.n:
            raise MismatchedVariableCount(f"{t} has {t.nvars} variables, expected {G.n}")
        degrees.add(t.degree)
        work[t] = c
    if len(degrees) > 1:
        raise NonHomogeneousInput(f"mixed degrees {sorted(degrees)}")
    ok, witness = G.completeness
    if not ok:
        raise NotComplete("reduction needs a complete basis", witness=witness)
    track_states = not G.stable_completeness[0]
    seen = {_state_key(work)} if track_states else None
    steps: list[ReductionStep] = []
    status = REDUCED
    while True:
        best = None
        for t in work:
            if not G.contains(t):
                continue
            fact = G.decompose(t)
            key = (fact.cofactor.lex_key, t.lex_key)
            if best is None or key > best[0]:
                best = (key, t, fact)
        if best is None:
            break
        if len(steps) >= step_cap:
            status = STEP_LIMIT
            break
        _, t, fact = best
        c = work[t]
        _subtract_scaled(work, G.polys[fact.head], fact.cofactor, c)
        steps.append(ReductionStep(t, fact.head, fact.cofactor, c))
        if track_states:
            key = _state_key(work)
            if key in seen:
                status = CYCLE_DETECTED
                break
            seen.add(key)
    result = {t: work[t] for t in sorted(work, key=lambda t: t.sort_key)}
    return ReductionTrace(steps, result, status)


def build_Gs(G: MarkedSet, s: int) -> list[tuple[Term, dict[Term, object]]]:
    """Degree-s span generators: one multiple f_head * cofactor per term of J_s.

    Entries come out ordered by their marked head term (the degree-s term of
    the ideal being covered).
    """
    ok, witness = G.stable_completeness
    if not ok:
        raise NotStablyComplete("G^(s) needs a stably complete basis", witness=witness)
    out = []
    for gamma in terms_of_degree(G.n, s):
        if not G.contains(gamma):
            continue
        fact = G.decompose(gamma)
        out.append((gamma, G.polys[fact.head].times(fact.cofactor)))
    return out


@dataclass(frozen=True)
class CriterionCheck:
    head: Term
    variable: int
    trace: ReductionTrace

    @property
    def ok(self) -> bool:
        return self.trace.is_zero


@dataclass
class MarkedBasisResult:
    is_basis: bool
    checks: list[CriterionCheck] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.is_basis


def is_marked_basis(G: MarkedSet, *, step_cap: int = DEFAULT_STEP_CAP) -> MarkedBasisResult:
    """Criterion: every product f_head * x_j with x_j above min(head) reduces to 0.

    Requires the division basis to be stably complete (the star set of its
    ideal).  The returned certificate records one reduction trace per
    (head, variable) pair, in canonical order.
    """
    ok, witness = G.stable_completeness
    if not ok:
        raise NotStablyComplete(
            "the criterion needs a stably complete basis", witness=witness
        )
    checks: list[CriterionCheck] = []
    all_zero = True
    for head in G.basis:
        k = head.min_index
        if k is None:
            continue
        for j in range(k + 1, G.n + 1):
            h = G.polys[head].times(variable(G.n, j))
            trace = reduce(G, h, step_cap=step_cap)
            check = CriterionCheck(head, j, trace)
            checks.append(check)
            all_zero = all_zero and check.ok
    return MarkedBasisResult(all_zero, checks)


def s_polynomial(f: MarkedPolynomial, g: MarkedPolynomial) -> dict[Term, object]:
    """lcm(heads)/head_f * f - lcm(heads)/head_g * g as a term-to-coefficient map."""
    lcm = Term(max(a, b) for a, b in zip(f.head.exponents, g.head.exponents))
    result: dict[Term, object] = {}
    for poly, sign in ((f.times(lcm / f.head), 1), (g.times(lcm / g.head), -1)):
        for t, c in poly.items():
            cur = result.get(t)
            val = sign * c
            new = val if cur is None else cur + val
            if new:
                result[t] = new
            else:
                result.pop(t, None)
    return result


def _vector(poly: Mapping[Term, object], index: dict[Term, int]) -> list[Fraction]:
    vec = [Fraction(0)] * len(index)
    for t, c in poly.items():
        vec[index[t]] = Fraction(c)
    return vec


def oracle_check(G: MarkedSet, max_degree: int) -> bool:
    """Degree-by-degree linear-algebra verification of the basis property.

    For each degree s up to ``max_degree`` this checks, by exact row
    reduction, that the span of all monomial multiples of the marked
    polynomials equals the span of the star-compatible multiples G^(s), and
    that the latter together with the escalier monomials fills the degree-s
    slice with trivial intersection.  Independent of the reduction relation.
    """
    ok, witness = G.stable_completeness
    if not ok:
        raise NotStablyComplete("oracle needs a stably complete basis", witness=witness)
    n = G.n
    for s in range(1, max_degree + 1):
        cols = list(terms_of_degree(n, s))
        index = {t: i for i, t in enumerate(cols)}
        outside = [t for t in cols if not G.contains(t)]
        star_rows = [_vector(poly, index) for _, poly in build_Gs(G, s)]
        basis, pivots = _linalg.rref(star_rows)
        # Every plain multiple must already lie in the span of the star multiples.
        for f in G.polys.values():
            if f.head.degree > s:
                continue
            for eta in terms_of_degree(n, s - f.head.degree):
                vec = _vector(f.times(eta), index)
                if not _linalg.in_rowspace(vec, basis, pivots):
                    return False
        # Star multiples plus escalier monomials must give a direct sum filling P_s.
        unit_rows = []
        for t in outside:
            vec = [Fraction(0)] * len(cols)
            vec[index[t]] = Fraction(1)
            unit_rows.append(vec)
        combined = _linalg.rank(star_rows + unit_rows)
        if combined != len(basis) + len(outside) or combined != len(cols):
            return False
    return True
