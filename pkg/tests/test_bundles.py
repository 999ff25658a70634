import pytest

from negbundle.bundles import (
    EPS_C,
    EPS_R,
    ETA_H0,
    ETA_V0,
    NU,
    NU_BAR,
    SIGMA_H,
    SIGMA_V,
    Decomposition,
    SummandDescriptor,
    equivariant_decomposition,
    klingenberg_decomposition,
    rank_audit,
)
from negbundle.errors import InconsistencyError, UnsupportedParameterError


def test_klingenberg_odd():
    d = klingenberg_decomposition(2, 3, 3)
    assert [(s.kind, s.real_rank) for s in d.summands] == [
        (ETA_H0, 1),
        (SIGMA_H, 2),
        (SIGMA_H, 2),
        (SIGMA_V, 8),
    ]
    assert d.real_rank == 13


def test_klingenberg_small():
    assert klingenberg_decomposition(2, 4, 1).kinds() == [ETA_H0]
    d = klingenberg_decomposition(2, 2, 2)
    assert [(s.kind, s.real_rank) for s in d.summands] == [(ETA_H0, 1), (SIGMA_H, 2), (ETA_V0, 2)]


def test_equivariant_examples():
    assert equivariant_decomposition(2, 1).kinds() == [EPS_R]
    d = equivariant_decomposition(2, 2)
    assert [(s.kind, s.params) for s in d.summands] == [(EPS_R, ()), (EPS_C, (1,)), (NU, (0, 2))]
    d = equivariant_decomposition(2, 3)
    assert [(s.kind, s.params) for s in d.summands] == [
        (EPS_R, ()),
        (EPS_C, (1,)),
        (EPS_C, (2,)),
        (NU, (1, 3)),
        (NU_BAR, (1, 3)),
    ]
    assert rank_audit(d).total == 9
    assert rank_audit(equivariant_decomposition(2, 2)).total == 5


def test_equivariant_rejects_n1():
    with pytest.raises(UnsupportedParameterError):
        equivariant_decomposition(1, 2)


def test_audit_grid():
    for n in range(2, 7):
        for q in range(1, 11):
            e = equivariant_decomposition(n, q)
            k = klingenberg_decomposition(2, n, q)
            assert rank_audit(e).ok and rank_audit(k).ok
            assert e.real_rank == k.real_rank
            nus = [s for s in e.summands if s.kind in (NU, NU_BAR)]
            assert any(s.params == (0, q) for s in nus) == (q % 2 == 0)
            for s in nus:
                r = s.params[0]
                if r > 0:
                    partner = NU_BAR if s.kind == NU else NU
                    assert any(t.kind == partner and t.params == s.params for t in nus)


def test_weights():
    d = equivariant_decomposition(3, 5)
    for s in d.summands:
        if s.kind == NU:
            r, q = s.params
            assert s.weights == ((r + q) // 2, 1)
        if s.kind == NU_BAR:
            r, q = s.params
            assert s.weights == ((r - q) // 2, -1)


def test_audit_reports_mismatch():
    bad = Decomposition("B", 2, 2, 2, (SummandDescriptor(ETA_H0, (), 1),))
    with pytest.raises(InconsistencyError, match="eta_h0"):
        rank_audit(bad)


def test_quaternionic_and_octonionic():
    for alpha, n in [(4, 3), (8, 2), (4, 2)]:
        for q in range(1, 8):
            assert rank_audit(klingenberg_decomposition(alpha, n, q)).ok
