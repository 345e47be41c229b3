from fractions import Fraction

import pytest

import kntw


def test_binomial_is_exact():
    assert kntw.binomial(200, 100) == 90548514656103281165404177077484163874504589675413336841320
    assert kntw.binomial(5, 7) == 0


def test_colex():
    assert kntw.colex_rank([2, 3, 4], 5) == 4
    assert kntw.colex_unrank(4, 5, 3) == [2, 3, 4]
    assert kntw.min_shadow_size(2, 5, 3, 2) == 5
    assert kntw.shadow([[1, 2, 3]], 5, 2) == [[1, 2], [1, 3], [2, 3]]


def test_petersen():
    g = kntw.generalized_kneser(5, 2, 1)
    assert (g.num_vertices, g.num_edges) == (10, 15)
    assert g.family == "gkneser 5 2 1"
    assert g.labels[0] == [1, 2]
    assert len(kntw.maximum_independent_set(g)) == 4
    result = kntw.exact_tw(g)
    assert result["exact"] and result["upper"] == 4
    td = kntw.decomposition_from_elimination_order(g, result["certificate"])
    assert kntw.validate(td, g) == (True, "")
    assert td.width == 4


def test_johnson_complement_values():
    for (n, k), expected in {(4, 2): 1, (5, 3): 4, (6, 2): 9}.items():
        g = kntw.johnson_complement(n, k)
        assert kntw.exact_tw(g)["upper"] == expected
        assert kntw.tw_formula_johnson_complement(n, k)["predicted_tw"] == expected


def test_six_bag_decomposition():
    g, td = kntw.six_bag_decomposition("J63c")
    assert kntw.validate(td, g)[0]
    assert td.width == 14


def test_star_certificate():
    g = kntw.generalized_kneser(24, 3, 2)
    td = kntw.star_decomposition(g, kntw.ekr_star_family(g))
    assert kntw.validate(td, g)[0]
    assert td.width == 2001 == kntw.tw_formula_gkneser(24, 3, 2)["predicted_tw"]


def test_separators_take_exact_ratios():
    g = kntw.generalized_kneser(5, 2, 1)
    assert kntw.min_p_separator_order(g, "2/3") == 4
    assert kntw.min_p_separator_order(g, Fraction(3, 4)) <= 5
    r = kntw.check_p_separator(g, [0, 1], Fraction(2, 3))
    assert r["balanced"] is False and r["p"] == Fraction(2, 3)
    with pytest.raises(TypeError):
        kntw.min_p_separator_order(g, 0.75)
    with pytest.raises(ValueError):
        kntw.min_p_separator_order(g, "1/2")


def test_inequalities():
    assert kntw.kneser_threshold(3, 2) == 24
    assert kntw.star_concentration_inequality(24, 3, 2)
    assert kntw.separator_balance_inequality(30, 3, 2, "2/3")
    assert kntw.upper_bound_dominance(24, 3, 2)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        kntw.generalized_kneser(5, 2, 2)
    with pytest.raises(kntw.ResourceError):
        kntw.generalized_kneser(30, 4, 1)
    with pytest.raises(kntw.ParseError):
        kntw.read_gr("p tw 2 1\n1 3\n")


def test_file_round_trip():
    g = kntw.johnson_complement(5, 2)
    text = kntw.write_gr(g)
    back = kntw.read_gr(text)
    assert back == g and back.family == "johnson-complement 5 2"
    td = kntw.upper_bound_heuristic(g)
    dec = kntw.decomposition_from_elimination_order(g, td["certificate"])
    assert kntw.write_td(kntw.read_td(kntw.write_td(dec))) == kntw.write_td(dec)
