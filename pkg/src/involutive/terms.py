"""Terms (monomials) over a fixed ordered variable set x_1 < x_2 < ... < x_n.

A term is stored as its exponent vector; slot k (0-based) holds the exponent
of x_{k+1}.  Variable indices in the public API are 1-based.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .errors import MismatchedVariableCount, NotDivisible


class Term:
    """Immutable monomial with exact divisibility and lex comparison support."""

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if not exps:
            raise ValueError("a term needs at least one variable")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps!r}")
        self.exponents = exps
        self.degree = sum(exps)

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def is_constant(self) -> bool:
        return self.degree == 0

    @property
    def min_index(self) -> Optional[int]:
        """1-based index of the smallest variable dividing the term, None for 1."""
        for i, e in enumerate(self.exponents):
            if e:
                return i + 1
        return None

    @property
    def max_index(self) -> Optional[int]:
        for i in range(len(self.exponents) - 1, -1, -1):
            if self.exponents[i]:
                return i + 1
        return None

    @property
    def lex_key(self) -> tuple:
        # Lex scans from x_n down to x_1, so the reversed vector compares directly.
        return self.exponents[::-1]

    @property
    def sort_key(self) -> tuple:
        """Canonical (degree, lex) ordering key."""
        return (self.degree, self.exponents[::-1])

    def _check(self, other: "Term") -> None:
        if len(self.exponents) != len(other.exponents):
            raise MismatchedVariableCount(
                f"{len(self.exponents)} variables vs {len(other.exponents)}"
            )

    def __mul__(self, other: "Term") -> "Term":
        self._check(other)
        return Term(a + b for a, b in zip(self.exponents, other.exponents))

    def divides(self, other: "Term") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other: "Term") -> "Term":
        self._check(other)
        if not other.divides(self):
            raise NotDivisible(f"{other} does not divide {self}")
        return Term(a - b for a, b in zip(self.exponents, other.exponents))

    def predecessor(self, j: int) -> "Term":
        """Divide out one power of x_j (j is 1-based)."""
        if not 1 <= j <= len(self.exponents):
            raise ValueError(f"variable index {j} out of range")
        if self.exponents[j - 1] == 0:
            raise NotDivisible(f"x_{j} does not divide {self}")
        exps = list(self.exponents)
        exps[j - 1] -= 1
        return Term(exps)

    def __eq__(self, other) -> bool:
        return isinstance(other, Term) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __repr__(self) -> str:
        return f"Term({list(self.exponents)!r})"

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts) if parts else "1"


def variable(n: int, j: int) -> Term:
    """The term x_j in n variables (j is 1-based)."""
    if not 1 <= j <= n:
        raise ValueError(f"variable index {j} out of range for n={n}")
    return Term(1 if i == j - 1 else 0 for i in range(n))


def one(n: int) -> Term:
    return Term([0] * n)


def lex_compare(s: Term, t: Term) -> int:
    """Pure lex comparison scanning from x_n down to x_1: -1, 0 or 1."""
    s._check(t)
    a, b = s.lex_key, t.lex_key
    return (a > b) - (a < b)


def extremal_vars(t: Term) -> tuple[Optional[int], Optional[int]]:
    """(min, max) 1-based indices of variables appearing in t; (None, None) for 1."""
    return (t.min_index, t.max_index)


def terms_of_degree(n: int, d: int) -> Iterator[Term]:
    """All degree-d terms in n variables, in increasing lex order."""

    def rec(k: int, rest: int):
        if k == 1:
            yield (rest,)
            return
        for e in range(rest + 1):  # exponent of x_k, smallest first
            for head in rec(k - 1, rest - e):
                yield head + (e,)

    for exps in rec(n, d):
        yield Term(exps)


class TermSet:
    """A finite set of distinct terms in canonical (degree, then lex) order."""

    __slots__ = ("terms", "n", "_members")

    def __init__(self, terms: Iterable[Term], n: Optional[int] = None):
        seen = {}
        for t in terms:
            if not isinstance(t, Term):
                t = Term(t)
            if n is None:
                n = t.nvars
            elif t.nvars != n:
                raise MismatchedVariableCount(
                    f"term {t} has {t.nvars} variables, expected {n}"
                )
            seen[t] = None
        if n is None:
            raise ValueError("cannot infer variable count from an empty set")
        self.n = n
        self.terms = tuple(sorted(seen, key=lambda t: t.sort_key))
        self._members = frozenset(self.terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, t) -> bool:
        return t in self._members

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TermSet)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, self.terms))

    def __repr__(self) -> str:
        return f"TermSet([{', '.join(str(t) for t in self.terms)}], n={self.n})"

    def max_degree(self) -> int:
        return max((t.degree for t in self.terms), default=0)
