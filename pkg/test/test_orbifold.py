from fractions import Fraction

import pytest

from kummer import (
    BudgetExceeded,
    FracPoly,
    GroupElement,
    UsageError,
    age,
    act_on_labels,
    chen_ruan_poincare,
    closed_form_poincare,
    enumerate_group,
    fixed_locus,
    identity_sector,
    invariant_cohomology_dims,
    orbit_count_closed,
    orbits_and_stabilizers
)
from kummer.orbifold import check_budget, group_generators, sector_contribution



def test_group_size_and_sum_condition():
    for d in (2, 3, 4, 6):
        for n in (1, 2, 3):
            group = enumerate_group(d, n)
            assert len(group) == d ** (n - 1)
            assert len(set(group)) == len(group)
            assert all(sum(g.residues) % d == 0 for g in group)


def test_group_element_validation():
    with pytest.raises(ValueError):
        GroupElement(3, (1, 1))
    with pytest.raises(ValueError):
        GroupElement(3, (3, 0))


def test_generators_span_the_group():
    d, n = 4, 3
    identity = GroupElement(d, (0,) * n)
    seen, frontier = {identity}, [identity]
    while frontier:
        reached = []
        for g in frontier:
            for h in group_generators(d, n):
                if g + h not in seen:
                    seen.add(g + h)
                    reached.append(g + h)
        frontier = reached
    assert seen == set(enumerate_group(d, n))


def test_age():
    assert age(GroupElement(6, (2, 4))) == 1
    assert age(GroupElement(6, (5, 5, 2))) == 2
    assert age(GroupElement(3, (0, 0))) == 0
    assert isinstance(age(GroupElement(4, (1, 3))), Fraction)


def test_fixed_locus_of_twisted_element():
    locus = fixed_locus(GroupElement(6, (3, 0, 3)))
    assert locus.support == (0, 2)
    assert locus.free_count == 1
    assert len(locus.labels) == 16


def test_fixed_locus_of_identity():
    locus = fixed_locus(GroupElement(4, (0, 0)))
    assert locus.labels == ((),)
    assert locus.free_count == 2


def test_action_on_labels():
    g = GroupElement(6, (3, 3))
    h = GroupElement(6, (1, 5))
    assert act_on_labels(h, g, ('d', 'd')) == ('e', 'f')


@pytest.mark.parametrize('residues, expected', [
    ((3, 3), 6),
    ((2, 4), 5),
    ((4, 2), 5),
    ((1, 5), 1),
    ((0, 0), 1),
])
def test_sixfold_orbit_counts(residues, expected):
    g = GroupElement(6, residues)
    orbits = orbits_and_stabilizers(g)
    assert len(orbits) == expected
    assert orbit_count_closed(g) == expected


def test_orbits_of_two_four():
    orbits = orbits_and_stabilizers(GroupElement(6, (2, 4)))
    assert sorted(o.size for o in orbits) == [1, 2, 2, 2, 2]
    assert orbits[0].representative == ('a', 'a')


def test_orbit_stabilizer_sizes(curve_table):
    d = curve_table.d
    for g in enumerate_group(d, 3):
        orbits = orbits_and_stabilizers(g, curve_table)
        assert sum(o.size for o in orbits) == len(fixed_locus(g, curve_table).labels)
        for o in orbits:
            assert o.size * o.stabilizer_size == d ** 2


@pytest.mark.parametrize('d', [2, 3, 4])
def test_orbit_count_formula(d):
    for n in (2, 3):
        for g in enumerate_group(d, n):
            assert orbit_count_closed(g) == len(orbits_and_stabilizers(g))


def test_orbit_count_formula_sixfold_corner():
    g = GroupElement(6, (2, 2, 2))
    assert orbit_count_closed(g) == len(orbits_and_stabilizers(g)) == 9


def test_invariant_dims_trivial_group():
    # all of H(E^2): (1 + X)^2 (1 + Y)^2
    assert invariant_cohomology_dims(((0, 0),), 2, 3) == [[1, 2, 1], [2, 4, 2], [1, 2, 1]]


def test_invariant_dims_diagonal_involution():
    assert invariant_cohomology_dims(((0, 0), (1, 1)), 2, 2) == [[1, 0, 1], [0, 4, 0], [1, 0, 1]]


def test_invariant_dims_empty():
    assert invariant_cohomology_dims(((),), 0, 6) == [[1]]


def test_sector_ages_shift():
    contribution = sector_contribution(GroupElement(2, (1, 1)))
    assert contribution == FracPoly.monomial(16, 1, 1)


def test_identity_sector_is_invariant_cohomology():
    p = identity_sector(2, 2)
    assert p.coefficient(1, 1) == 4
    assert p.coefficient(2, 0) == 1
    assert p.coefficient(1, 0) == 0


def test_kummer_surface():
    expected = FracPoly({(0, 0): 1, (24, 0): 1, (0, 24): 1, (12, 12): 20, (24, 24): 1})
    assert chen_ruan_poincare(2, 2) == expected


@pytest.mark.parametrize('d', [2, 3, 4, 6])
@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_brute_force_matches_closed_form(d, n):
    brute = chen_ruan_poincare(d, n)
    assert brute.is_integral()
    assert brute == closed_form_poincare(d, n).integer_part()


@pytest.mark.slow
@pytest.mark.parametrize('d', [2, 3, 4, 6])
def test_brute_force_matches_closed_form_n5(d):
    assert chen_ruan_poincare(d, 5) == closed_form_poincare(d, 5).integer_part()


def test_chunked_sum_is_order_independent():
    reference = chen_ruan_poincare(4, 3)
    assert chen_ruan_poincare(4, 3, chunk_size=1) == reference
    assert chen_ruan_poincare(4, 3, chunk_size=5) == reference


def test_parallel_sum_matches_serial():
    assert chen_ruan_poincare(3, 3, workers=2, chunk_size=2) == chen_ruan_poincare(3, 3)


def test_budget():
    check_budget(6, 5)
    with pytest.raises(BudgetExceeded) as info:
        chen_ruan_poincare(6, 6)
    assert info.value.exit_code == 4
    with pytest.raises(BudgetExceeded):
        chen_ruan_poincare(2, 3, budget=2)


def test_unsupported_d():
    with pytest.raises(UsageError):
        enumerate_group(5, 2)
    with pytest.raises(UsageError):
        closed_form_poincare(7, 2)


def test_small_group():
    assert set(g.residues for g in enumerate_group(2, 2)) == {(0, 0), (1, 1)}
    residues = {g.residues for g in enumerate_group(3, 3)}
    assert len(residues) == 9
    assert {(1, 1, 1), (1, 2, 0)} <= residues


def test_age_of_sixfold_element():
    assert age(GroupElement(6, (1, 1, 4, 0))) == 1


def test_identity_locus_is_one_component():
    locus = fixed_locus(GroupElement(3, (0, 0, 0)))
    assert len(locus.labels) == 1
    assert locus.free_count == 3


def test_action_powers_compose():
    # phi^3 is the identity on the 3-cycle {d, e, f}
    assert act_on_labels(GroupElement(6, (3, 3)), GroupElement(6, (3, 3)), ('d', 'e')) == ('d', 'e')
    assert act_on_labels(GroupElement(6, (1, 5)), GroupElement(6, (2, 4)), ('b', 'c')) == ('c', 'b')
    assert act_on_labels(GroupElement(6, (0, 0)), GroupElement(6, (2, 4)), ('b', 'c')) == ('b', 'c')


def test_identity_stabilizer_is_whole_group():
    (orbit,) = orbits_and_stabilizers(GroupElement(4, (0, 0, 0)))
    assert orbit.stabilizer_size == 16
    assert set(orbit.projection) == {g.residues for g in enumerate_group(4, 3)}


def test_invariant_dims_examples():
    chars = [g.residues for g in enumerate_group(2, 3)]
    assert invariant_cohomology_dims(chars, 3, 2)[1][1] == 3
    chars = [g.residues for g in enumerate_group(2, 2)]
    assert invariant_cohomology_dims(chars, 2, 2)[1][1] == 4
    assert invariant_cohomology_dims([], 2, 5)[1][0] == 2


def test_elliptic_curve():
    assert chen_ruan_poincare(3, 1) == (1 + FracPoly.X()) * (1 + FracPoly.Y())


def test_sixfold_threefold_h11():
    assert chen_ruan_poincare(6, 3).coefficient(1, 1) == closed_form_poincare(6, 3).coefficient(1, 1) == 84
