import pytest

from orchard.bounds import (NotADoubleCover, certified_lower_bound, cycle_lower_term,
                            disjoint_cycles_bound, double_cover_bound, formula_value,
                            ladder_lower, ladder_upper, overcount_corrected_bound, prism_lower,
                            prism_upper)
from orchard.graphs import Family, FamilySpec, ParameterError, generate, ladder_cover, prism_cover


def test_cycle_lower_term():
    assert cycle_lower_term(10, 4) == 12
    assert cycle_lower_term(4, 4) == 0
    with pytest.raises(ValueError):
        cycle_lower_term(3, 4)


@pytest.mark.parametrize("n", range(5, 21))
def test_prism_engines(n):
    g = generate(FamilySpec(Family.PRISM, n))
    assert double_cover_bound(g, prism_cover(n)) == 3 * n * (n - 2)
    assert overcount_corrected_bound(g, g.tagged_cycles[:n], n) == 4 * n * (n - 3)
    # the product correction agrees with the square-only one for squares
    assert overcount_corrected_bound(g, g.tagged_cycles[:n]) == 4 * n * (n - 3)


@pytest.mark.parametrize("n", range(5, 21))
def test_ladder_engines(n):
    g = generate(FamilySpec(Family.LADDER, n))
    expected = 3 * n * n - 10 * n + (8 if n % 2 == 0 else 7)
    assert double_cover_bound(g, ladder_cover(n)) == expected
    # n - 1 squares with n - 2 shared rungs
    assert overcount_corrected_bound(g, g.tagged_cycles, n - 2) == 4 * (n - 2) ** 2


def test_double_cover_rejects_non_cover():
    g = generate(FamilySpec(Family.PRISM, 5))
    with pytest.raises(NotADoubleCover):
        double_cover_bound(g, prism_cover(5)[1:])


def test_overcount_square_only_correction():
    g = generate(FamilySpec(Family.PRISM, 5))
    with pytest.raises(ValueError):
        overcount_corrected_bound(g, prism_cover(5), 5)


def test_disjoint_cycles_bound():
    g = generate(FamilySpec(Family.DISJOINT_CYCLES, 4, 3))
    assert disjoint_cycles_bound(g, g.tagged_cycles) == 48
    chain = generate(FamilySpec(Family.LADDER, 4))
    with pytest.raises(ValueError):
        disjoint_cycles_bound(chain, chain.tagged_cycles)


def test_formula_values():
    assert formula_value(FamilySpec(Family.DISJOINT_CYCLES, 4, 3)).exact == 48
    assert formula_value(FamilySpec(Family.STAR_K_N1, 8)).exact == 36
    assert formula_value(FamilySpec(Family.LADDER, 4)).exact == 16
    report = formula_value(FamilySpec(Family.PRISM, 6))
    assert (report.lower, report.upper, report.exact) == (72, 96, None)
    assert formula_value(FamilySpec(Family.LADDER, 5)).upper == 40
    with pytest.raises(ParameterError):
        formula_value(FamilySpec(Family.STAR_K_N1, 5))


def test_bouquet_report_notes_conflict():
    report = formula_value(FamilySpec(Family.TRIANGLE_BOUQUET, x=2))
    assert report.exact == 2
    assert report.certified_lower == 4
    assert report.notes


def test_report_serialisation():
    report = formula_value(FamilySpec(Family.PRISM, 7))
    assert report.to_json()["upper"] == 142
    assert '"lower": 112' in report.dumps()
    assert "certified lower" in report.table()


@pytest.mark.parametrize("n", range(3, 30))
def test_lower_never_exceeds_upper(n):
    assert prism_lower(n) <= prism_upper(n)
    assert ladder_lower(n) <= ladder_upper(n) or n < 5
    assert certified_lower_bound(FamilySpec(Family.PRISM, n)) <= prism_upper(n)
