import pytest

from paulidecomp.heisenberg import (dihedral8, extraspecial_e1,
                                    extraspecial_e2, quaternion8)
from paulidecomp.pauli import PauliGroupSpec, pauli_group
from paulidecomp.products import (classify_special, corollary43_check,
                                  decompose_pauli_chain, extraspecial_decompose,
                                  identify_factor, just_nonabelian,
                                  minimal_nonabelian, pauli_chain_subgroups,
                                  verify_weak_central)


def test_identify_factor():
    assert identify_factor(dihedral8()) == "D8"
    assert identify_factor(quaternion8()) == "Q8"
    assert identify_factor(extraspecial_e1(3)) == "E1(3)"
    assert identify_factor(extraspecial_e2(3)) == "E2(3)"
    assert identify_factor(pauli_group(PauliGroupSpec(2, 1, 1))) == "P(1,2)"


def test_verify_weak_central_p22():
    spec = PauliGroupSpec(2, 1, 2)
    g = pauli_group(spec)
    h1, h2 = pauli_chain_subgroups(g, spec)
    rep = verify_weak_central(g, h1, h2)
    # [H1,H2] = 1 != Z(G), so only the weak condition holds
    assert rep.classification == "weak_central"
    assert rep.intersections == [4]
    assert rep.commutators == [1]


def test_weak_central_rejects_nongenerating_pair():
    g = pauli_group(PauliGroupSpec(2, 1, 2))
    z = g.center()
    rep = verify_weak_central(g, z, z)
    assert rep.classification == "none"


def test_decompose_pauli_chain_n2():
    rep = decompose_pauli_chain(2)
    assert rep.classification == "weak_central"
    assert len(rep.factors) == 2
    assert all(f["isomorphism_type"] == "P(1,2)" for f in rep.factors)
    assert len(rep.links) == 1
    assert rep.links[0]["order"] == 4
    assert rep.links[0]["central"]


def test_decompose_pauli_chain_n3():
    rep = decompose_pauli_chain(3)
    assert len(rep.factors) == 3
    assert all(f["isomorphism_type"] == "P(1,2)" for f in rep.factors)
    assert len(rep.links) == 2
    assert rep.links[1]["order"] == 4


def test_just_nonabelian():
    ok, _ = just_nonabelian(dihedral8())
    assert ok
    ok, _ = just_nonabelian(pauli_group(PauliGroupSpec(2, 1, 1)))
    assert ok
    # the two-qubit group is also just nonabelian: every nontrivial normal
    # subgroup meets the cyclic center, hence contains the derived subgroup
    ok, _ = just_nonabelian(pauli_group(PauliGroupSpec(2, 1, 2)))
    assert ok


def test_minimal_nonabelian():
    ok, _, mode = minimal_nonabelian(dihedral8())
    assert ok and mode == "exhaustive"
    # P(1,2) contains a nonabelian proper subgroup of order 8
    ok, facts, _ = minimal_nonabelian(pauli_group(PauliGroupSpec(2, 1, 1)))
    assert not ok
    assert facts["nonabelian_subgroup_order"] == 8
    ok, _, _ = minimal_nonabelian(pauli_group(PauliGroupSpec(3, 1, 1)))
    assert ok
    # order 243 goes through the noncommuting-pair search
    ok, facts, mode = minimal_nonabelian(pauli_group(PauliGroupSpec(3, 1, 2)))
    assert not ok
    assert mode == "pair_search"
    assert facts["nonabelian_subgroup_order"] == 27


def test_classify_special():
    flags = classify_special(dihedral8())
    assert flags.extraspecial
    assert flags.minimal_nonabelian
    flags = classify_special(pauli_group(PauliGroupSpec(2, 1, 1)))
    assert not flags.extraspecial
    assert flags.generalized_extraspecial
    assert flags.just_nonabelian
    flags = classify_special(extraspecial_e2(3))
    assert flags.extraspecial


def test_extraspecial_decompose_atoms():
    for g in (dihedral8(), quaternion8(), extraspecial_e1(3)):
        rep = extraspecial_decompose(g)
        assert rep.classification == "none"
        assert len(rep.factors) == 1


def test_extraspecial_decompose_rejects_nonextraspecial():
    # P(1,2) has center of order 4, so it is not extraspecial
    with pytest.raises(ValueError):
        extraspecial_decompose(pauli_group(PauliGroupSpec(2, 1, 1)))


def test_cor43_m1_confirmed():
    rep = corollary43_check(3, 1, 1)
    assert rep.status == "confirmed"
    assert rep.witness["reduced_variant_isomorphic"]
    rep = corollary43_check(3, 1, 2)
    assert rep.status == "confirmed"


def test_cor43_m2_reduced_reading():
    rep = corollary43_check(3, 2, 1)
    assert rep.status == "inconsistent_in_paper"
    assert rep.witness["reduced_variant_isomorphic"]
    assert not rep.witness["full_variant_isomorphic"]
    assert "supported_reading" in rep.witness
