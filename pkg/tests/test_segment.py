from fractions import Fraction

import pytest

from borelnet import (
    BorelSet,
    TermOrder,
    complement,
    enumerate_ideals,
    find_segment_order,
    parse_ideal,
    parse_polynomial,
    verify_certificate,
)
from borelnet.segment import SegmentCertificate, format_matrix, solve_min, top_monomials

import golden


def test_published_certificates():
    I5 = parse_ideal(golden.HILB_6T_5[5])
    J7 = parse_ideal(golden.HILB_8[7])
    assert verify_certificate(I5, SegmentCertificate((1, 2, 5, 25)))
    assert verify_certificate(J7, (1, 2, 4, 5))
    for B in (I5, J7):
        cert = find_segment_order(B)
        assert cert is not None and cert.verified


def test_margin_form_holds_for_published_certificates():
    from borelnet.segment import segment_system

    for text, w in ((golden.HILB_6T_5[5], (1, 2, 5, 25)), (golden.HILB_8[7], (1, 2, 4, 5))):
        A, b = segment_system(parse_ideal(text))
        assert all(sum(a * x for a, x in zip(row, w)) >= rhs for row, rhs in zip(A, b))


def test_bad_weights_rejected():
    I5 = parse_ideal(golden.HILB_6T_5[5])
    assert not verify_certificate(I5, (1, 1, 5, 25))
    assert not verify_certificate(I5, (0, 2, 5, 25))
    assert not verify_certificate(I5, (1, 2, 5))


@pytest.mark.parametrize("n,hp", [(3, "6t-5"), (3, "8"), (4, "4t+1"), (3, "3t+5"), (2, "t+7")])
def test_reduction_soundness(n, hp):
    ideals = enumerate_ideals(n, parse_polynomial(hp))
    lex = ideals[0]
    assert find_segment_order(lex) is not None
    for B in ideals:
        cert = find_segment_order(B)
        if cert is not None:
            assert cert.verified
            assert all(isinstance(w, int) for w in cert.weights)
        else:
            # no weight certificate: check a few plausible weights really fail
            for w in ((1, 2, 3, 4, 5)[: n + 1], tuple((B.r + 1) ** i for i in range(n + 1))):
                assert not verify_certificate(B, w)


def test_revlex_has_no_segment():
    p = parse_polynomial("6t-5")
    top = top_monomials(3, 10, complement(p, 3, 10), TermOrder.degrevlex())
    B = BorelSet(3, 10, top)
    assert len(top) == 231
    assert B.hilbert_polynomial == parse_polynomial("55")
    assert B not in enumerate_ideals(3, p)


def test_simplex_small_cases():
    # min x + y  s.t.  x >= 1, y - x >= 1
    assert solve_min([[1, 0], [-1, 1]], [1, 1], [1, 1]) == [Fraction(1), Fraction(2)]
    # infeasible: x >= 1 and -x >= 1
    assert solve_min([[1], [-1]], [1, 1], [1]) is None


def test_matrix_format():
    text = format_matrix(SegmentCertificate((1, 2, 5, 25)).matrix())
    assert text.splitlines()[1] == "[25  5  2  1]"
