import pytest

from paulidecomp.groupcore import (ClosureCapError, FiniteGroup,
                                   SubgroupCapError, abelian_invariants,
                                   group_close, isomorphic)
from paulidecomp.heisenberg import dihedral8, quaternion8


def cyclic(n):
    return FiniteGroup(range(n), lambda a, b: (a + b) % n, name=f"Z{n}")


def test_cyclic_basics():
    z6 = cyclic(6)
    assert z6.order == 6
    assert z6.exponent == 6
    assert z6.center().order == 6
    assert z6.derived_subgroup().order == 1
    # primary decomposition form
    assert abelian_invariants(z6) == (2, 3)


def test_bad_table_rejected():
    # not a Latin square: constant row
    with pytest.raises(Exception):
        FiniteGroup([0, 1], lambda a, b: 0)


def test_d8_invariants():
    d8 = dihedral8()
    assert d8.order == 8
    assert d8.center().order == 2
    assert d8.derived_subgroup().order == 2
    assert d8.frattini().order == 2
    assert sorted(d8.element_orders) == [1, 2, 2, 2, 2, 2, 4, 4]
    assert abelian_invariants(d8.quotient(d8.center())) == (2, 2)


def test_subgroup_enumeration_d8():
    d8 = dihedral8()
    subs = d8.subgroups_all()
    assert len(subs) == 10
    assert sorted(h.order for h in subs) == [1, 2, 2, 2, 2, 2, 4, 4, 4, 8]
    assert sum(1 for h in subs if h.is_normal()) == 6


def test_subgroup_handle_operations():
    d8 = dihedral8()
    subs = d8.subgroups_all()
    maxes = [h for h in subs if h.order == 4]
    a, b = maxes[0], maxes[1]
    inter = a.intersect(b)
    assert inter.order == 2
    assert set(a.product_set(b)) == set(range(8))
    assert a.commutator_with(b).order <= 2


def test_isomorphism_oracle():
    d8, q8 = dihedral8(), quaternion8()
    ok, _ = isomorphic(d8, q8)
    assert not ok
    # relabeled copy of d8 must be detected as isomorphic
    perm = [3, 1, 4, 0, 6, 2, 7, 5]
    table = {(perm[i], perm[j]): perm[d8.mul(i, j)]
             for i in range(8) for j in range(8)}
    d8b = FiniteGroup(range(8), lambda a, b: table[(a, b)])
    ok, phi = isomorphic(d8, d8b)
    assert ok
    assert phi is not None


def test_quotient_and_normal_closure():
    q8 = quaternion8()
    q = q8.quotient(q8.center())
    assert abelian_invariants(q) == (2, 2)
    # the normal closure of any non-central element of q8 has order >= 4
    non_central = [i for i in range(8) if i not in q8.center().members][0]
    assert q8.normal_closure([non_central]).order >= 4


def test_group_close_and_caps():
    g = group_close([5], lambda a, b: (a + b) % 12)
    assert g.order == 12
    with pytest.raises(ClosureCapError):
        group_close([1], lambda a, b: (a + b) % 100, cap=10)
    with pytest.raises(SubgroupCapError):
        cyclic(20).subgroups_all(cap=10)


def test_report_shape():
    d8 = dihedral8()
    rep = d8.report()
    for key in ("order", "exponent", "center_order", "derived_order",
                "frattini_order", "fingerprint", "order_sequence"):
        assert key in rep


def test_semidirect_witness():
    d8 = dihedral8()
    normal4 = [h for h in d8.subgroups_all()
               if h.order == 4 and h.is_cyclic()][0]
    comp = d8.semidirect_witness(normal4)
    assert comp is not None
    assert comp.order == 2
