import pytest
from hypothesis import given, strategies as st

from borelnet import Monomial, TermOrder, borel_leq, compare, move_down, move_up, parse_monomial, parse_order
from borelnet.errors import DegreeMismatchError, InadmissibleMoveError, ParseError
from borelnet.monomial import Cmp, down_moves, format_monomial, monomials, up_moves


def exps(n_max=3, e_max=4):
    return st.integers(1, n_max).flatmap(lambda n: st.lists(st.integers(0, e_max), min_size=n + 1, max_size=n + 1))


def test_moves_examples():
    m = Monomial((0, 2, 1))  # y^2 x in xyz
    assert move_up(m, 1) == Monomial((0, 1, 2))
    assert move_down(m, 2) == Monomial((0, 3, 0))
    with pytest.raises(InadmissibleMoveError):
        move_down(m, 0)
    with pytest.raises(InadmissibleMoveError):
        move_up(m, 0)
    with pytest.raises(InadmissibleMoveError):
        move_up(m, 2)


@given(exps())
def test_moves_are_inverse(e):
    m = Monomial(e)
    for j in range(len(m) - 1):
        if m[j]:
            assert move_down(move_up(m, j), j + 1) == m


@given(exps(), st.data())
def test_borel_leq_is_partial_order(e, data):
    a = Monomial(e)
    same = [m for m in monomials(a.n, a.degree)]
    b = data.draw(st.sampled_from(same))
    c = data.draw(st.sampled_from(same))
    assert borel_leq(a, a)
    if borel_leq(a, b) and borel_leq(b, a):
        assert a == b
    if borel_leq(a, b) and borel_leq(b, c):
        assert borel_leq(a, c)


def test_borel_leq_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        borel_leq(Monomial((1, 0)), Monomial((1, 1)))


@pytest.mark.parametrize("order", [TermOrder.deglex(), TermOrder.degrevlex(), TermOrder.weight_matrix([1, 2, 5, 25])])
def test_orders_refine_borel_order(order):
    ms = monomials(3, 4)
    for a in ms:
        for b in up_moves(a):
            assert compare(order, a, b) is Cmp.LESS


@pytest.mark.parametrize("order", [TermOrder.deglex(), TermOrder.degrevlex(), TermOrder.weight_matrix([1, 3, 4, 6])])
def test_orders_are_total(order):
    keys = [order.key(m) for m in monomials(3, 6)]
    assert len(set(keys)) == len(keys)


def test_weight_order_rejects_bad_weights():
    with pytest.raises(ValueError):
        TermOrder.weight_matrix([2, 2, 3])
    with pytest.raises(ValueError):
        TermOrder.weight_matrix([0, 1, 3])


def test_matrix_layout():
    assert TermOrder.weight_matrix([1, 2, 5, 25]).matrix(3) == [
        [1, 1, 1, 1],
        [25, 5, 2, 1],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
    ]


def test_parse_and_format():
    m = parse_monomial("x3^2*x0^6", 3)
    assert m == Monomial((6, 0, 0, 2))
    assert format_monomial(m) == "x3^2*x0^6"
    assert parse_monomial("xy^2z", 2, "xyz") == Monomial((1, 2, 1))
    assert parse_monomial("1", 2) == Monomial((0, 0, 0))
    with pytest.raises(ParseError):
        parse_monomial("x5", 3)
    with pytest.raises(ParseError):
        parse_monomial("q", 2, "xyz")


@given(exps())
def test_monomial_round_trip(e):
    m = Monomial(e)
    assert parse_monomial(format_monomial(m), m.n) == m


def test_parse_order():
    assert parse_order("deglex") == TermOrder.deglex()
    assert parse_order("weights=1,2,5,25").weights == (1, 2, 5, 25)
    with pytest.raises(ParseError):
        parse_order("weights=3,2,1")
    with pytest.raises(ParseError):
        parse_order("grevlex-ish")


def test_down_moves_above():
    m = Monomial((1, 1, 1, 1))
    assert list(down_moves(m, above=2)) == [move_down(m, 3)]
    assert len(list(down_moves(m))) == 3
