import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from negbundle.chern import euler_class_rho
from negbundle.cohomology_rings import (
    BOREL_COPRIME,
    BOREL_DIVIDES,
    FLAG,
    Q,
    RingCase,
    presentation_base,
    presentation_for,
    pullback_pr,
    ring_case,
)
from negbundle.errors import BranchMismatchError, PresentationMismatchError, UnsupportedParameterError
from negbundle.fields import GF, QQ


def test_case_selection():
    assert ring_case(2, 5, 3).tag == FLAG
    assert ring_case(2, 3, 3).tag == BOREL_DIVIDES
    assert ring_case(2, 2, 2).tag == BOREL_COPRIME
    assert ring_case(2, None, 4).tag == FLAG


def test_presentations():
    R = presentation_for(ring_case(2, 3, 3))
    assert R.generators == (("u", 2), ("x", 2), ("sigma", 3))
    assert R.gen("x") ** 3 == 0
    R = presentation_for(ring_case(2, 2, 2))
    assert R.generators == (("u", 2), ("x", 2), ("sigmabar", 5))
    assert R.gen("x") ** 2 == 0
    R = presentation_for(ring_case(2, 5, 3))
    assert R.names == ("x1", "x2") and R.field == GF(5)


@pytest.mark.parametrize("n, p", [(1, 3), (0, 3), (2, 4), (3, 1)])
def test_rejected_parameters(n, p):
    with pytest.raises(UnsupportedParameterError):
        ring_case(n, p, 1)


def test_base_ring_n1():
    R = presentation_base(1, QQ, 8)
    assert R.gen("x") ** 2 == 0
    assert R.gen("u") ** 2 != 0


def test_pullback_values_flag():
    case = ring_case(2, 5, 3)
    B = presentation_base(2, GF(5))
    R = presentation_for(case)
    d = R.gen("x1") - R.gen("x2")
    assert pullback_pr(1, case, B.gen("u")) == d * 2  # 3^{-1} = 2 mod 5
    assert pullback_pr(2, case, B.gen("x")) == R.gen("x2")
    assert pullback_pr(1, case, B.gen("u")) == pullback_pr(2, case, B.gen("u"))


def test_pullback_values_borel():
    case = ring_case(2, 3, 3)
    B = presentation_base(2, GF(3))
    R = presentation_for(case)
    assert pullback_pr(1, case, B.gen("x")) == R.gen("x")
    assert pullback_pr(2, case, B.gen("u")) == R.gen("u")


def test_pullback_mismatches():
    case = ring_case(2, 5, 3)
    with pytest.raises(BranchMismatchError):
        pullback_pr(1, case, presentation_base(3, GF(5)).gen("u"))
    with pytest.raises(BranchMismatchError):
        pullback_pr(1, case, presentation_base(2, GF(7)).gen("u"))
    with pytest.raises(PresentationMismatchError):
        pullback_pr(1, case, presentation_for(case).gen("x1"))
    with pytest.raises(BranchMismatchError):
        pullback_pr(1, RingCase(FLAG, 2, 3, 3), presentation_base(2, GF(3)).gen("u"))


def test_euler_class_matches_pullback():
    for p in (2, 3, 5, 7):
        for n in range(2, 6):
            for q in range(1, 7):
                case = ring_case(n, p, q)
                if case.tag != FLAG:
                    continue
                u = presentation_base(n, case.field).gen("u")
                for i in (1, 2):
                    assert pullback_pr(i, case, u * q) == euler_class_rho(case)


def test_q_relations_vanish():
    R = presentation_for(ring_case(2, 3, 1))
    assert Q(2, R) == 0 and Q(3, R) == 0
    assert (R.gen("x1") - R.gen("x2")) * Q(2, R) == 0
    assert euler_class_rho(ring_case(2, 3, 1)) == R.gen("x1") - R.gen("x2")


def test_euler_class_wrong_case():
    with pytest.raises(BranchMismatchError):
        euler_class_rho(ring_case(2, 3, 3))


def _random_base(draw, B, deg):
    terms = {}
    for a in range(deg // 2 + 1):
        b = deg // 2 - a
        if b <= B.rules[0][0][1] - 1:
            terms[(a, b)] = draw(st.integers(0, 10))
    return B.element(terms)


@settings(max_examples=150, deadline=None)
@given(
    st.sampled_from([(2, 5, 3), (3, 7, 2), (2, 3, 3), (3, 2, 4), (4, 3, 2)]),
    st.integers(0, 3),
    st.integers(0, 3),
    st.sampled_from([1, 2]),
    st.data(),
)
def test_pullback_is_ring_homomorphism(params, d1, d2, i, data):
    n, p, q = params
    case = ring_case(n, p, q)
    B = presentation_base(n, case.field)
    e = _random_base(data.draw, B, 2 * d1)
    f = _random_base(data.draw, B, 2 * d2)
    assert pullback_pr(i, case, e * f) == pullback_pr(i, case, e) * pullback_pr(i, case, f)
    assert pullback_pr(i, case, e + f) == pullback_pr(i, case, e) + pullback_pr(i, case, f)
    img = pullback_pr(i, case, e)
    assert img == 0 or img.degrees() == [2 * d1]
