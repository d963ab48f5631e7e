import random

import pytest

from involutive import (
    ESCALIER,
    IDEAL_SLICE,
    DivisionAssignment,
    MonomialIdeal,
    NotComplete,
    NotQuasiStable,
    Term,
    TermSet,
    classify,
    escalier_slice,
    hilbert_function,
    ideal_slice,
    involutive_test,
    janet_complete,
    membership,
    pommaret_basis,
    pommaret_termination_degree,
    regularity,
    sigma_profile,
    star_set,
)
from helpers import escalier_count, random_ideal, random_term_of_degree


def t(*exps):
    return Term(exps)


def ideal(*gens):
    return MonomialIdeal([Term(g) for g in gens])


STABLE = ideal((0, 0, 1), (0, 2, 0))          # (z, y^2)
QUASI = ideal((0, 0, 2), (0, 1, 0))           # (z^2, y)
NOT_QUASI = MonomialIdeal([t(0, 1, 0)], 3)    # (y) in three variables
MARKED_EXAMPLE = ideal((3, 0), (1, 1), (0, 3))
TWO_PARAMS = ideal((2, 0), (1, 1), (0, 3))


def test_membership():
    J = MonomialIdeal([t(1, 0)])
    assert membership(J, t(1, 5))
    assert not membership(J, t(0, 5))
    J2 = ideal((0, 0, 1), (0, 2, 0))
    assert J2.contains(t(0, 1, 1))


def test_minimal_generators_computed_on_load():
    J = ideal((1, 0), (2, 3), (1, 1))
    assert [g.exponents for g in J.generators] == [(1, 0)]


def test_star_set_principal_ideal_truncation():
    J = MonomialIdeal([t(1, 0)])
    terms, exhaustive = star_set(J, 5)
    assert [x.exponents for x in terms] == [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4)]
    assert not exhaustive


def test_star_set_examples():
    terms, exhaustive = star_set(QUASI, 6)
    assert terms == TermSet([t(0, 0, 2), t(0, 1, 1), t(0, 1, 0)])
    assert not exhaustive  # bound below the certified termination degree
    terms, exhaustive = star_set(QUASI, pommaret_termination_degree(QUASI) - 1)
    assert terms == TermSet([t(0, 0, 2), t(0, 1, 1), t(0, 1, 0)])
    assert exhaustive
    terms, exhaustive = star_set(STABLE, 6)
    assert terms == STABLE.generators
    assert exhaustive


def test_star_set_flag_needs_the_termination_bound():
    # the star set of (y, x^5) has degrees {1, 5}: a short empty window alone
    # must not be taken as proof of exhaustion
    J = ideal((0, 1), (5, 0))
    d = pommaret_termination_degree(J)
    terms, exhaustive = star_set(J, 2)
    assert [x.exponents for x in terms] == [(0, 1)]
    assert not exhaustive
    terms, exhaustive = star_set(J, d - 1)
    assert exhaustive
    assert [x.exponents for x in terms] == [(0, 1), (5, 0)]


def test_classify_examples():
    assert classify(STABLE).stable
    rep = classify(QUASI)
    assert rep.quasi_stable and not rep.stable
    assert rep.stable_witness is not None
    rep = classify(NOT_QUASI)
    assert not rep.quasi_stable
    assert rep.quasi_stable_witness is not None


def test_classify_hierarchy_on_random_ideals():
    rng = random.Random(43)
    for _ in range(200):
        rep = classify(random_ideal(rng))
        if rep.strongly_stable:
            assert rep.stable
        if rep.stable:
            assert rep.quasi_stable


def test_strongly_stable_detection():
    # (x2^2, x1x2, x1^2) is strongly stable in two variables ... with x2 on top
    J = ideal((0, 2), (1, 1), (2, 0))
    rep = classify(J)
    assert rep.strongly_stable
    rep = classify(QUASI)
    assert not rep.strongly_stable


def test_pommaret_basis_examples():
    assert pommaret_basis(MARKED_EXAMPLE) == TermSet(
        [t(3, 0), t(1, 1), t(1, 2), t(0, 3)]
    )
    assert pommaret_basis(QUASI) == TermSet([t(0, 0, 2), t(0, 1, 1), t(0, 1, 0)])
    with pytest.raises(NotQuasiStable):
        pommaret_basis(NOT_QUASI)


def test_pommaret_basis_is_the_star_set_of_its_ideal():
    for J in (STABLE, QUASI, MARKED_EXAMPLE, TWO_PARAMS, ideal((0, 2), (2, 0))):
        basis = pommaret_basis(J)
        regenerated = MonomialIdeal(basis)
        assert regenerated == J
        assert star_set(regenerated, basis.max_degree())[0] == basis
        terms, exhaustive = star_set(
            regenerated, pommaret_termination_degree(regenerated) - 1
        )
        assert exhaustive and terms == basis


def test_stable_iff_star_set_equals_generators():
    fixed = [STABLE, QUASI, MARKED_EXAMPLE, TWO_PARAMS, ideal((0, 2), (2, 0))]
    rng = random.Random(47)
    samples = []
    while len(samples) < 25:
        J = random_ideal(rng, max_vars=3, max_gens=4, max_deg=4)
        if J.generators.max_degree() > 0 and classify(J).quasi_stable:
            samples.append(J)
    for J in fixed + samples:
        rep = classify(J)
        assert rep.stable == (pommaret_basis(J) == J.generators)


def test_quasi_stable_iff_star_set_stabilizes():
    fixed = [
        (STABLE, True),
        (QUASI, True),
        (MARKED_EXAMPLE, True),
        (NOT_QUASI, False),
        (MonomialIdeal([t(1, 0)]), False),
        (ideal((2, 0, 0), (1, 1, 0), (0, 0, 1)), False),
    ]
    for J, expected in fixed:
        assert classify(J).quasi_stable == expected
        a = J.generators.max_degree()
        probe = a + 2 * J.n
        window = [
            x
            for x in star_set(J, probe + J.n)[0]
            if x.degree > probe
        ]
        if expected:
            d = pommaret_termination_degree(J)
            inside = star_set(J, d - 1)[0]
            beyond = [x for x in star_set(J, d + J.n)[0] if x.degree >= d]
            assert not beyond
            assert pommaret_basis(J) == inside
        else:
            assert window


def test_truncated_star_set_looks_stably_complete_inside_the_bound():
    # away from the truncation edge the Janet and Pommaret assignments agree
    for J, bound in ((MonomialIdeal([t(1, 0)]), 6), (NOT_QUASI, 5)):
        terms, _ = star_set(J, bound)
        assignment = DivisionAssignment.janet(terms)
        for tau in terms:
            if tau.degree == bound:
                continue
            pommaret = frozenset(range(1, tau.min_index + 1))
            assert assignment.mult[tau] == pommaret


def test_hilbert_function_examples():
    M = TermSet([t(1, 0)])
    for k in range(0, 8):
        assert hilbert_function(M, k) == 1
    basis = pommaret_basis(TWO_PARAMS)
    pommaret = DivisionAssignment.pommaret(basis)
    assert hilbert_function(basis, 2, pommaret) == 1
    for k in (3, 4, 5, 6):
        assert hilbert_function(basis, k, pommaret) == 0


def test_hilbert_function_requires_complete_set():
    with pytest.raises(NotComplete):
        hilbert_function(TermSet([t(1, 0), t(0, 2)]), 3)


def test_hilbert_function_matches_enumeration():
    sets = [
        TermSet([t(1, 0)]),
        TermSet([t(2, 0), t(1, 1)]),
        TermSet([t(2, 0), t(1, 1), t(0, 2)]),
        TermSet([t(2, 0, 0), t(1, 1, 0), t(0, 0, 1)]),
        TermSet([t(1, 0, 1), t(0, 1, 1), t(0, 2, 0)]),
        janet_complete(TermSet([t(2, 0), t(1, 1), t(0, 3)]), 12),
        pommaret_basis(QUASI),
        pommaret_basis(MARKED_EXAMPLE),
    ]
    for M in sets:
        gens = [x.exponents for x in M]
        top = 2 * M.max_degree() + M.n
        for k in range(0, top + 1):
            assert hilbert_function(M, k) == escalier_count(gens, M.n, k)


def test_hilbert_function_on_random_completed_sets():
    rng = random.Random(53)
    for _ in range(15):
        n = rng.randint(2, 3)
        M = janet_complete(
            TermSet(
                [random_term_of_degree(rng, n, rng.randint(1, 3)) for _ in range(rng.randint(1, 4))]
            ),
            20,
        )
        gens = [x.exponents for x in M]
        for k in range(0, 2 * M.max_degree() + n + 1):
            assert hilbert_function(M, k) == escalier_count(gens, n, k)


def test_sigma_profile_examples():
    assert sigma_profile(STABLE, 2, ESCALIER).counts == (2, 0, 0)
    assert sigma_profile(STABLE, 2, IDEAL_SLICE).counts == (1, 2, 1)
    unit = MonomialIdeal([Term([0, 0, 0])])
    assert sigma_profile(unit, 1, ESCALIER).counts == (0, 0, 0)


def test_sigma_profile_validation():
    with pytest.raises(ValueError):
        sigma_profile(STABLE, 0, ESCALIER)
    with pytest.raises(ValueError):
        sigma_profile(STABLE, 2, "bogus")


def test_involutive_test_examples():
    assert involutive_test(STABLE, 2, IDEAL_SLICE)
    assert not involutive_test(STABLE, 1, IDEAL_SLICE)
    for J in (STABLE, QUASI, MARKED_EXAMPLE, TWO_PARAMS):
        top = pommaret_basis(J).max_degree()
        for p in range(top, top + 4):
            assert involutive_test(J, p, IDEAL_SLICE)
            assert involutive_test(J, p, ESCALIER)


def test_slice_counts_are_consistent():
    for J in (STABLE, QUASI, MARKED_EXAMPLE):
        for p in (1, 2, 3, 4):
            assert sum(sigma_profile(J, p, IDEAL_SLICE).counts) == len(ideal_slice(J, p))
            assert sum(sigma_profile(J, p, ESCALIER).counts) == len(escalier_slice(J, p))


def test_regularity_examples():
    assert regularity(MARKED_EXAMPLE) == 3
    assert regularity(QUASI) == 2
    assert regularity(MonomialIdeal([t(4, 0)], 2).__class__([t(0, 4)], 2)) == 4


def test_zero_ideal_is_rejected_by_star_set():
    J = MonomialIdeal([], 2)
    assert J.is_zero
    with pytest.raises(ValueError):
        star_set(J, 3)
