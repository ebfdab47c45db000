"""Weak central products, the register chain decomposition of qubit Pauli
groups, structural classification flags, and the Heisenberg comparison.

Conventions.  For normal subgroups H, K of G, the pair presents G as a
weak central product when G = HK and [H, K] <= Z(G); the product is
central when additionally [H, K] = H cap K = Z(G).  Since H and K are
normal, [H, K] <= H cap K always holds.
"""

from __future__ import annotations

import time

from .groupcore import (DEFAULT_SUBGROUP_CAP, FiniteGroup, GroupStructureError,
                        SubgroupHandle, abelian_invariants, group_close,
                        isomorphic)
from .heisenberg import (HeisenbergSpec, dihedral8, extraspecial_e1,
                         extraspecial_e2, heis_group, quaternion8)
from .algebra import ZmodRing, field_make, is_prime
from .pauli import PauliGroupSpec, pauli_group
from .reports import (CLAIMS, ClassificationFlags, DecompositionReport,
                      VerdictReport)


def reference_group(name: str, p: int | None = None) -> FiniteGroup:
    """Concrete realizations of D8, Q8, E1(p), E2(p)."""
    key = name.lower()
    if key == "d8":
        return dihedral8()
    if key == "q8":
        return quaternion8()
    if key in ("e1", "e2"):
        if p is None or not is_prime(p) or p == 2:
            raise ValueError("E1/E2 require an odd prime p")
        return extraspecial_e1(p) if key == "e1" else extraspecial_e2(p)
    raise ValueError(f"unknown reference group {name!r}")


def identify_factor(g: FiniteGroup) -> str:
    """Isomorphism type of a factor against the reference families, by
    oracle, never by name.  Falls back to an invariant string."""
    n = g.order
    if n == 8:
        for ref_name in ("d8", "q8"):
            ok, _ = isomorphic(g, reference_group(ref_name))
            if ok:
                return ref_name.upper()
    p = _cube_root(n)
    if p is not None and is_prime(p) and p > 2:
        for ref_name in ("e1", "e2"):
            ok, _ = isomorphic(g, reference_group(ref_name, p))
            if ok:
                return f"{ref_name.upper()}({p})"
    if g.is_abelian:
        return "abelian" + str(list(abelian_invariants(g)))
    if n <= 1024:
        p12 = pauli_group(PauliGroupSpec(2, 1, 1))
        if n == p12.order:
            ok, _ = isomorphic(g, p12)
            if ok:
                return "P(1,2)"
    return f"order{n}-exp{g.exponent}"


def _cube_root(n: int) -> int | None:
    k = round(n ** (1 / 3))
    for c in (k - 1, k, k + 1):
        if c > 0 and c ** 3 == n:
            return c
    return None


def verify_weak_central(g: FiniteGroup, h: SubgroupHandle,
                        k: SubgroupHandle) -> DecompositionReport:
    """Check the weak central product conditions for normal H, K <= G."""
    if not h.is_normal() or not k.is_normal():
        raise ValueError("both factors must be normal in G")
    center = set(g.center().members)
    comm = h.commutator_with(k)
    inter = h.intersect(k)
    covers = len(h.product_set(k)) == g.order
    comm_central = set(comm.members) <= center
    if covers and comm_central:
        central = (set(comm.members) == center
                   and set(inter.members) == center)
        classification = "central" if central else "weak_central"
    else:
        classification = "none"
    notes = []
    if inter.order == 1 and comm.order == 1 and covers:
        notes.append("factors intersect trivially: the product is direct")
    return DecompositionReport(
        group=g.name or f"order{g.order}",
        factors=[{"order": h.order, "isomorphism_type": identify_factor(h.as_group())},
                 {"order": k.order, "isomorphism_type": identify_factor(k.as_group())}],
        links=[{"order": inter.order, "source": "intersection"}],
        commutators=[comm.order],
        intersections=[inter.order],
        classification=classification,
        notes=notes,
    )


def pauli_chain_subgroups(g: FiniteGroup, spec: PauliGroupSpec) -> list[SubgroupHandle]:
    """The register factors H_j = <U, X_j, Z_j> with U the order-4 phase."""
    subs = []
    for j in range(spec.n):
        gens = [spec.phase_gen(), spec.x_gen(j), spec.z_gen(j)]
        subs.append(g.generated_subgroup(gens))
    return subs


def decompose_pauli_chain(n: int) -> DecompositionReport:
    """Iterated weak central product P_{n,2} = H_1 * H_2 * ... * H_n with
    register factors H_j = <U, X_j, Z_j> and links L_j = (H_1...H_j) cap
    H_{j+1}.

    The commutator [H_1...H_j, H_{j+1}] is reported alongside each link:
    in the qubit phase-space model all commutators land in <-I>, so the
    commutator subgroup of two distinct register factors has order at
    most 2 and never equals the order-4 link."""
    if n < 1 or n > 3:
        raise ValueError("chain decomposition implemented for 1 <= n <= 3")
    spec = PauliGroupSpec(2, 1, n)
    g = pauli_group(spec)
    factors = pauli_chain_subgroups(g, spec)
    center = set(g.center().members)
    p12 = pauli_group(PauliGroupSpec(2, 1, 1))

    factor_info = []
    for j, h in enumerate(factors):
        hg = h.as_group(name=f"H{j + 1}")
        ok, _ = isomorphic(hg, p12)
        factor_info.append({
            "order": h.order,
            "isomorphism_type": "P(1,2)" if ok else identify_factor(hg),
            "normal": h.is_normal(),
        })

    links, commutators, intersections = [], [], []
    classification = "weak_central"
    notes = []
    acc = factors[0]
    for j in range(1, n):
        nxt = factors[j]
        comm = acc.commutator_with(nxt)
        inter = acc.intersect(nxt)
        prod = g.subgroup(acc.product_set(nxt))
        if not (set(comm.members) <= center):
            classification = "none"
        links.append({"order": inter.order, "source": "intersection",
                      "central": set(inter.members) <= center})
        commutators.append(comm.order)
        intersections.append(inter.order)
        acc = prod
    if acc.order != g.order:
        classification = "none"
    if n >= 2:
        notes.append("links are amalgamated intersections; the pairwise "
                     "commutator subgroups have order <= 2 and are listed "
                     "separately")
    return DecompositionReport(
        group=g.name,
        factors=factor_info,
        links=links,
        commutators=commutators,
        intersections=intersections,
        classification=classification,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# classification flags
# ---------------------------------------------------------------------------

def _p_of(g: FiniteGroup) -> int | None:
    n = g.order
    for p in range(2, n + 1):
        if n % p == 0:
            return p if _is_power(n, p) else None
    return None


def _is_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def just_nonabelian(g: FiniteGroup) -> tuple[bool, dict]:
    """Nonabelian with every proper quotient abelian.  Equivalent test:
    the derived subgroup is contained in the normal closure of every
    nontrivial element (any nontrivial normal subgroup is a union of
    such closures)."""
    if g.is_abelian:
        return False, {"reason": "abelian"}
    derived = set(g.derived_subgroup().members)
    for i in range(g.order):
        if i == g.identity:
            continue
        nc = set(g.normal_closure([i]).members)
        if not derived <= nc:
            witness = g.normal_closure([i])
            return False, {
                "normal_subgroup_order": witness.order,
                "witness_element": repr(g.elements[i]),
                "quotient_order": g.order // witness.order,
            }
    return True, {}


def minimal_nonabelian(g: FiniteGroup,
                       cap: int = DEFAULT_SUBGROUP_CAP) -> tuple[bool, dict, str]:
    """Nonabelian with every proper subgroup abelian.  Exhaustive subgroup
    enumeration under the cap; above it, a generating-pair search: the
    group is minimal nonabelian iff every noncommuting pair generates the
    whole group (a nonabelian proper subgroup always contains such a
    pair, and conversely)."""
    if g.is_abelian:
        return False, {"reason": "abelian"}, "exhaustive"
    if g.order < 243 and g.order <= cap:
        for h in g.subgroups_all(cap):
            if h.order < g.order and not h.is_abelian():
                return False, {"nonabelian_subgroup_order": h.order}, "exhaustive"
        return True, {}, "exhaustive"
    if g.order > 1024:
        raise GroupStructureError("minimal-nonabelian test capped at 1024")
    t = g.table
    for i in range(g.order):
        for j in range(i + 1, g.order):
            if t[i, j] == t[j, i]:
                continue
            sub = g.closure_indices([i, j])
            if len(sub) < g.order:
                return False, {
                    "nonabelian_subgroup_order": len(sub),
                    "generators": [repr(g.elements[i]), repr(g.elements[j])],
                }, "pair_search"
    return True, {}, "pair_search"


def classify_special(g: FiniteGroup,
                     cap: int = DEFAULT_SUBGROUP_CAP) -> ClassificationFlags:
    """Extraspecial / generalized extraspecial / just nonabelian / minimal
    nonabelian flags with evidence for the False cases."""
    p = _p_of(g)
    center = g.center()
    derived = g.derived_subgroup()
    evidence: dict = {}

    extraspecial = bool(p and center.order == p
                        and set(center.members) == set(derived.members))
    if not extraspecial:
        evidence["extraspecial"] = {
            "center_order": center.order, "derived_order": derived.order}

    generalized = bool(p and derived.order == p and center.is_cyclic())
    if generalized:
        # consistency facts: [G,G] <= Z(G), G/Z elementary abelian even rank
        quot = g.quotient(center)
        rank_ok = (quot.is_abelian and quot.exponent == p)
        log = 0
        q = quot.order
        while q > 1:
            q //= p
            log += 1
        evidence["generalized_extraspecial_facts"] = {
            "derived_in_center": set(derived.members) <= set(center.members),
            "central_quotient_elementary_abelian": rank_ok,
            "central_quotient_rank": log,
            "rank_even": log % 2 == 0,
        }
    else:
        evidence["generalized_extraspecial"] = {
            "derived_order": derived.order,
            "center_cyclic": center.is_cyclic(),
        }

    jna, jna_evidence = just_nonabelian(g)
    if jna_evidence:
        evidence["just_nonabelian"] = jna_evidence
    mna, mna_evidence, mode = minimal_nonabelian(g, cap)
    if mna_evidence:
        evidence["minimal_nonabelian"] = mna_evidence

    return ClassificationFlags(
        extraspecial=extraspecial,
        generalized_extraspecial=generalized,
        just_nonabelian=jna,
        minimal_nonabelian=mna,
        evidence=evidence,
        mode=mode,
    )


# ---------------------------------------------------------------------------
# extraspecial decomposition
# ---------------------------------------------------------------------------

def extraspecial_decompose(g: FiniteGroup) -> DecompositionReport:
    """Split an extraspecial group into a central product of order-p^3
    factors: take the subgroup generated by the first noncommuting pair
    (canonical order) and recurse on its centralizer.  Factors are
    identified against the reference families."""
    flags_p = _p_of(g)
    center = g.center()
    if flags_p is None or center.order != flags_p or \
            set(center.members) != set(g.derived_subgroup().members):
        raise ValueError("input is not extraspecial")
    if g.order > 256 and flags_p == 2:
        raise ValueError("extraspecial decomposition capped at order 256 "
                         "for p = 2")
    p = flags_p
    factor_groups = []
    current = g.whole_subgroup()
    while not current.is_abelian():
        cg = current.as_group()
        t = cg.table
        pair = None
        for i in range(cg.order):
            for j in range(i + 1, cg.order):
                if t[i, j] != t[j, i]:
                    pair = (i, j)
                    break
            if pair:
                break
        h_local = cg.subgroup(cg.closure_indices(pair))
        # map back to parent-group members
        h_members = [g.index[cg.elements[i]] for i in h_local.members]
        h = g.subgroup(g.closure_indices(h_members))
        k_members = [g.index[cg.elements[i]]
                     for i in cg.centralizer(h_local.members).members]
        factor_groups.append(h)
        current = g.subgroup(g.closure_indices(k_members))

    if len(factor_groups) == 0:
        raise ValueError("input is abelian")

    if len(factor_groups) == 1 and factor_groups[0].order == g.order:
        # order p^3: the atom, no proper splitting
        return DecompositionReport(
            group=g.name or f"order{g.order}",
            factors=[{"order": g.order,
                      "isomorphism_type": identify_factor(g)}],
            links=[], commutators=[], intersections=[],
            classification="none",
            notes=["order p^3 extraspecial group is irreducible"],
        )

    center_set = set(center.members)
    factor_info = []
    links, commutators, intersections = [], [], []
    classification = "central"
    acc = factor_groups[0]
    factor_info.append({"order": acc.order,
                        "isomorphism_type": identify_factor(acc.as_group())})
    for h in factor_groups[1:]:
        factor_info.append({"order": h.order,
                            "isomorphism_type": identify_factor(h.as_group())})
        comm = acc.commutator_with(h)
        inter = acc.intersect(h)
        prod = g.subgroup(acc.product_set(h))
        if not (set(comm.members) <= center_set):
            classification = "none"
        if not (set(comm.members) == center_set
                and set(inter.members) == center_set):
            if classification == "central":
                classification = "weak_central"
        links.append({"order": inter.order, "source": "intersection"})
        commutators.append(comm.order)
        intersections.append(inter.order)
        acc = prod
    if acc.order != g.order:
        raise GroupStructureError(
            "extraspecial splitting did not cover the group")
    return DecompositionReport(
        group=g.name or f"order{g.order}",
        factors=factor_info,
        links=links,
        commutators=commutators,
        intersections=intersections,
        classification=classification,
        notes=[],
    )


# ---------------------------------------------------------------------------
# Heisenberg comparison
# ---------------------------------------------------------------------------

def corollary43_check(p: int, m: int, n: int) -> VerdictReport:
    """Compare P_{n,p^m} against both Heisenberg variants: full center
    over Z/p^m and trace-reduced center over GF(p^m).  For m = 1 the two
    coincide and a match confirms the claim; for m > 1 the registered
    statement is order-inconsistent and the verdict records which variant
    the oracle supports."""
    t0 = time.perf_counter()
    if p == 2:
        raise ValueError("the comparison is stated for odd p")
    order = p ** (2 * n * m + 1)
    if order > 1024:
        return VerdictReport(
            claim="cor4.3", locator=CLAIMS["cor4.3"], status="out_of_cap",
            witness={"required_order": order},
            wall_time_s=time.perf_counter() - t0)
    pg = pauli_group(PauliGroupSpec(p, m, n))
    reduced_spec = HeisenbergSpec(field_make(p, m), n, reduced=True)
    full_spec = HeisenbergSpec(ZmodRing(p, m), n)
    witness: dict = {
        "pauli_order": pg.order,
        "reduced_variant_order": reduced_spec.order,
        "full_variant_order": full_spec.order,
    }
    reduced_ok = False
    if reduced_spec.order == pg.order:
        hg = heis_group(reduced_spec)
        reduced_ok, _ = isomorphic(pg, hg)
    witness["reduced_variant_isomorphic"] = reduced_ok
    full_ok = False
    if full_spec.order == pg.order and full_spec.order <= 1024:
        hg = heis_group(full_spec)
        full_ok, _ = isomorphic(pg, hg)
    witness["full_variant_isomorphic"] = full_ok
    if m == 1:
        status = "confirmed" if reduced_ok else "refuted_at_desk_scale"
    else:
        # stated order p^(2nm+1) contradicts the full variant's
        # p^(m(2n+1)); the oracle decides which reading holds
        status = "inconsistent_in_paper" if reduced_ok else "refuted_at_desk_scale"
        witness["supported_reading"] = "reduced" if reduced_ok else "none"
    return VerdictReport(claim="cor4.3", locator=CLAIMS["cor4.3"],
                         status=status, witness=witness,
                         wall_time_s=time.perf_counter() - t0)
