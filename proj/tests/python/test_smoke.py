import pytest

import avgamma


def test_gamma_simple_values():
    assert avgamma.gamma_simple("I", 1, 1) == "1/2"
    assert avgamma.gamma_simple("I", 1, 2) == "4/11"
    assert avgamma.gamma_simple("II", 1, 1) == "1/1"
    assert avgamma.gamma_simple("II", 2, 2) == "16/21"


def test_gamma_product_two_factors():
    report = avgamma.gamma_product([("I", 1, 1, 1), ("I", 1, 2, 1)])
    assert report["gamma"] == "1/2"
    assert report["achieving_subset"] == [1]
    assert report["mt_dimension"] == 4
    table = dict((tuple(subset), value) for subset, value in report["table"])
    assert table[(1,)] == "1/2"
    assert table[(2,)] == "4/11"
    assert table[(1, 2)] == "3/7"


def test_psi_bruteforce_matches_gamma():
    value, argmax = avgamma.psi_bruteforce([("I", 1, 2, 1)], [[(1, 1)]])
    assert value == "4/11"
    assert argmax == [[(2, 2)]]


def test_masser_and_dimension():
    factors = [("I", 1, 1, 1), ("I", 1, 2, 1)]
    assert avgamma.masser_bound(factors) == "3"
    assert avgamma.mt_dimension(factors, [1, 2]) == 14


def test_sigma_set():
    assert avgamma.sigma_members(130) == [4, 10, 16, 32, 64, 108, 126]
    assert avgamma.sigma_contains(512)
    assert not avgamma.sigma_contains(511)


def test_group_orders_and_codim():
    assert avgamma.sp_order(1, 3) == "24"
    assert avgamma.sp_order(2, 3) == "51840"
    assert avgamma.sl_order(2, 5) == "120"
    assert avgamma.prs_codim(2, 1, 3) == 15
    assert avgamma.prs_codim(2, 1, 2) == 9


def test_congruence_index_worked_example():
    index, exponent = avgamma.congruence_index(1, 3, [(1, 1, 1), (1, 0, 2)])
    assert index == "216"
    assert exponent == 5


def test_cn_span_dimension():
    assert avgamma.cn_span_dimension("sl", 2, 5) == 3
    assert avgamma.cn_span_dimension("so", 3, 5) == 0


def test_subgroup_invariants():
    m1, m = avgamma.subgroup_invariants(1, 3, 2, [[3, 0], [0, 3]])
    assert (m1, m) == (1, 1)
    m1, m = avgamma.subgroup_invariants(1, 3, 2, [[1, 0], [0, 1]])
    assert (m1, m) == (2, 2)


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        avgamma.gamma_simple("I", 0, 1)
    with pytest.raises(ValueError):
        avgamma.gamma_simple("III", 1, 1)
