"""Generic finite-group engine.

A group is materialized from a canonical list of opaque hashable element
keys plus a multiplication oracle; everything downstream (centers, derived
and Frattini subgroups, subgroup lattices, quotients, isomorphism tests)
works on the index-based multiplication table.  This module is the
brute-force oracle: a structural claim about any group in the package is
checked here by exhaustive computation, never assumed.

Caps: closure from generators is bounded by ``DEFAULT_CLOSURE_CAP`` and
full subgroup enumeration by ``DEFAULT_SUBGROUP_CAP``; both can be
overridden per call.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import lcm

import numpy as np

DEFAULT_CLOSURE_CAP = 4096
DEFAULT_SUBGROUP_CAP = 256
_ASSOC_EXHAUSTIVE_LIMIT = 256
_ASSOC_SAMPLES = 100_000
_ASSOC_SEED = 0
_ISO_ORDER_CAP = 1024


class ClosureCapError(RuntimeError):
    """Generated set exceeded the configured closure cap."""

    def __init__(self, cap: int):
        super().__init__(f"closure exceeded the cap of {cap} elements")
        self.cap = cap


class SubgroupCapError(RuntimeError):
    """Group too large for full subgroup enumeration."""

    def __init__(self, order: int, cap: int):
        super().__init__(
            f"group of order {order} exceeds the subgroup-enumeration cap {cap}")
        self.order = order
        self.cap = cap


class GroupStructureError(RuntimeError):
    """The supplied elements/oracle do not form a group, or an internal
    cross-check failed (which would indicate a bug, not bad input)."""


class FiniteGroup:
    """Immutable materialized finite group.

    ``elements`` is the canonical indexed list of opaque keys and ``table``
    the index-based multiplication table.  The Latin-square property and
    associativity are verified at construction (exhaustively up to order
    256, by fixed-seed sampling of 1e5 triples above).
    """

    def __init__(self, elements, mul, name: str = ""):
        elements = list(elements)
        if len(set(elements)) != len(elements):
            raise GroupStructureError("duplicate element keys")
        self.elements = tuple(elements)
        self.name = name
        n = len(elements)
        index = {e: i for i, e in enumerate(elements)}
        table = np.empty((n, n), dtype=np.int32)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                c = mul(a, b)
                k = index.get(c)
                if k is None:
                    raise GroupStructureError(
                        "multiplication left the element set: not closed")
                table[i, j] = k
        self._finish_init(table, index)

    @classmethod
    def _from_table(cls, elements, table: np.ndarray, name: str = "") -> "FiniteGroup":
        self = cls.__new__(cls)
        self.elements = tuple(elements)
        self.name = name
        index = {e: i for i, e in enumerate(self.elements)}
        self._finish_init(np.asarray(table, dtype=np.int32), index)
        return self

    def _finish_init(self, table: np.ndarray, index: dict) -> None:
        n = len(self.elements)
        self.index = index
        self.table = table
        self.table.setflags(write=False)
        full = np.arange(n, dtype=np.int32)
        for i in range(n):
            if (np.sort(table[i]) != full).any() or (np.sort(table[:, i]) != full).any():
                raise GroupStructureError("multiplication table is not a Latin square")
        self._verify_associativity()
        ident = [i for i in range(n) if (table[i] == full).all()]
        if len(ident) != 1:
            raise GroupStructureError("no unique identity element")
        self.identity = ident[0]
        inv = np.empty(n, dtype=np.int32)
        for i in range(n):
            js = np.nonzero(table[i] == self.identity)[0]
            if len(js) != 1 or table[js[0], i] != self.identity:
                raise GroupStructureError(f"element {i} lacks a two-sided inverse")
            inv[i] = js[0]
        self.inverse = inv
        self.inverse.setflags(write=False)

    def _verify_associativity(self) -> None:
        t = self.table
        n = len(self.elements)
        if n <= _ASSOC_EXHAUSTIVE_LIMIT:
            lhs = t[t]            # lhs[a,b,c] = t[t[a,b], c]
            rhs = t[:, t]         # rhs[a,b,c] = t[a, t[b,c]]
            if (lhs != rhs).any():
                raise GroupStructureError("multiplication is not associative")
        else:
            rng = np.random.default_rng(_ASSOC_SEED)
            a, b, c = rng.integers(0, n, size=(3, _ASSOC_SAMPLES))
            if (t[t[a, b], c] != t[a, t[b, c]]).any():
                raise GroupStructureError("multiplication is not associative")

    # -- basic structure ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def conjugate(self, i: int, by: int) -> int:
        t = self.table
        return int(t[t[self.inverse[by], i], by])

    def commutator(self, i: int, j: int) -> int:
        t = self.table
        return int(t[t[t[self.inverse[i], self.inverse[j]], i], j])

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = []
        for i in range(self.order):
            k, x = 1, i
            while x != self.identity:
                x = self.mul(x, i)
                k += 1
            out.append(k)
        return tuple(out)

    def order_of(self, element) -> int:
        """Order of an element given by key or index."""
        i = element if isinstance(element, (int, np.integer)) else self.index[element]
        return self.element_orders[i]

    @cached_property
    def exponent(self) -> int:
        return lcm(*self.element_orders)

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def is_elementary_abelian(self) -> bool:
        if self.order == 1:
            return True
        p = min(o for o in self.element_orders if o > 1)
        return self.is_abelian and self.exponent == p and is_prime_int(p)

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.order
        classes = []
        for i in range(self.order):
            if seen[i]:
                continue
            cls = sorted({self.conjugate(i, g) for g in range(self.order)})
            for x in cls:
                seen[x] = True
            classes.append(tuple(cls))
        return tuple(classes)

    @cached_property
    def class_size_of(self) -> tuple[int, ...]:
        out = [0] * self.order
        for cls in self.conjugacy_classes:
            for x in cls:
                out[x] = len(cls)
        return tuple(out)

    # -- subgroup machinery ------------------------------------------------

    def closure_indices(self, seed) -> tuple[int, ...]:
        """Closure of a set of element indices under multiplication, as a
        sorted index tuple."""
        idx = np.unique(np.fromiter(seed, dtype=np.int32, count=-1)) \
            if not isinstance(seed, np.ndarray) else np.unique(seed)
        idx = np.union1d(idx, np.array([self.identity], dtype=np.int32))
        while True:
            prod = np.unique(self.table[np.ix_(idx, idx)])
            if len(prod) == len(idx):
                return tuple(int(x) for x in idx)
            idx = prod

    def subgroup(self, members) -> "SubgroupHandle":
        members = tuple(sorted(int(m) for m in members))
        closed = self.closure_indices(members)
        if closed != members:
            raise GroupStructureError("member set is not a subgroup")
        return SubgroupHandle(self, members)

    def generated_subgroup(self, generators) -> "SubgroupHandle":
        """Subgroup generated by element keys or indices."""
        idx = [g if isinstance(g, (int, np.integer)) else self.index[g]
               for g in generators]
        return SubgroupHandle(self, self.closure_indices(idx))

    def trivial_subgroup(self) -> "SubgroupHandle":
        return SubgroupHandle(self, (self.identity,))

    def whole_subgroup(self) -> "SubgroupHandle":
        return SubgroupHandle(self, tuple(range(self.order)))

    @cached_property
    def center_indices(self) -> tuple[int, ...]:
        t = self.table
        mask = (t == t.T).all(axis=1)
        return tuple(int(i) for i in np.nonzero(mask)[0])

    def center(self) -> "SubgroupHandle":
        return SubgroupHandle(self, self.center_indices)

    def centralizer(self, members) -> "SubgroupHandle":
        mem = np.fromiter(members, dtype=np.int32)
        t = self.table
        ok = (t[:, mem] == t[mem, :].T).all(axis=1)
        return SubgroupHandle(self, tuple(int(i) for i in np.nonzero(ok)[0]))

    @cached_property
    def derived_indices(self) -> tuple[int, ...]:
        comms = {self.commutator(i, j)
                 for i in range(self.order) for j in range(self.order)}
        return self.closure_indices(comms)

    def derived_subgroup(self) -> "SubgroupHandle":
        return SubgroupHandle(self, self.derived_indices)

    def normal_closure(self, generators) -> "SubgroupHandle":
        idx = {g if isinstance(g, (int, np.integer)) else self.index[g]
               for g in generators}
        gens = set(idx)
        for i in idx:
            for g in range(self.order):
                gens.add(self.conjugate(i, g))
        return SubgroupHandle(self, self.closure_indices(gens))

    def subgroups_all(self, cap: int = DEFAULT_SUBGROUP_CAP) -> list["SubgroupHandle"]:
        """Every subgroup exactly once, canonically sorted by
        (order, member tuple).  Breadth-first closure over single-element
        extensions with dedup by member set."""
        if self.order > cap:
            raise SubgroupCapError(self.order, cap)
        trivial = (self.identity,)
        found = {trivial}
        frontier = [trivial]
        all_idx = range(self.order)
        while frontier:
            new_frontier = []
            for members in frontier:
                mem_set = set(members)
                for g in all_idx:
                    if g in mem_set:
                        continue
                    ext = self.closure_indices(members + (g,))
                    if ext not in found:
                        found.add(ext)
                        new_frontier.append(ext)
            frontier = new_frontier
        handles = [SubgroupHandle(self, m) for m in sorted(found, key=lambda m: (len(m), m))]
        return handles

    def normal_subgroups(self, cap: int = DEFAULT_SUBGROUP_CAP) -> list["SubgroupHandle"]:
        return [h for h in self.subgroups_all(cap) if h.is_normal()]

    def maximal_subgroups(self, cap: int = DEFAULT_SUBGROUP_CAP) -> list["SubgroupHandle"]:
        subs = [h for h in self.subgroups_all(cap) if h.order < self.order]
        out = []
        for h in subs:
            hs = set(h.members)
            if not any(hs < set(k.members) for k in subs if k.order > h.order):
                out.append(h)
        return out

    def frattini(self, cap: int = DEFAULT_SUBGROUP_CAP) -> "SubgroupHandle":
        """Intersection of all maximal subgroups; for p-groups cross-checked
        against G^p [G,G] (a mismatch is a fatal internal error)."""
        maximal = self.maximal_subgroups(cap)
        if not maximal:
            return self.whole_subgroup()
        inter = set(maximal[0].members)
        for h in maximal[1:]:
            inter &= set(h.members)
        handle = SubgroupHandle(self, tuple(sorted(inter)))
        p = _p_group_prime(self.order)
        if p is not None:
            powers = {self._power(i, p) for i in range(self.order)}
            agemo = self.closure_indices(powers | set(self.derived_indices))
            if agemo != handle.members:
                raise GroupStructureError(
                    "Frattini cross-check failed: maximal-subgroup intersection "
                    "differs from G^p[G,G] on a p-group")
        return handle

    def _power(self, i: int, k: int) -> int:
        x = self.identity
        for _ in range(k):
            x = self.mul(x, i)
        return x

    def quotient(self, n_sub: "SubgroupHandle") -> "FiniteGroup":
        """Coset group G/N for a normal subgroup N.  Element keys of the
        quotient are sorted index tuples of the cosets in this group."""
        if n_sub.parent is not self:
            raise ValueError("subgroup belongs to a different group")
        if not n_sub.is_normal():
            raise ValueError("quotient requires a normal subgroup")
        mem = np.fromiter(n_sub.members, dtype=np.int32)
        coset_of = {}
        cosets = []
        for g in range(self.order):
            if g in coset_of:
                continue
            coset = tuple(int(x) for x in np.sort(self.table[g, mem]))
            for x in coset:
                coset_of[x] = len(cosets)
            cosets.append(coset)
        k = len(cosets)
        table = np.empty((k, k), dtype=np.int32)
        for a, ca in enumerate(cosets):
            for b, cb in enumerate(cosets):
                table[a, b] = coset_of[self.mul(ca[0], cb[0])]
        return FiniteGroup._from_table(cosets, table,
                                       name=f"{self.name}/N" if self.name else "")

    def semidirect_witness(self, a_sub: "SubgroupHandle",
                           cap: int = DEFAULT_SUBGROUP_CAP):
        """First subgroup H (canonical order) with A∩H = 1 and AH = G, or
        None if A has no complement."""
        if not a_sub.is_normal():
            raise ValueError("semidirect factor must be normal")
        target = self.order // a_sub.order
        a_set = set(a_sub.members)
        for h in self.subgroups_all(cap):
            if h.order != target:
                continue
            if len(a_set & set(h.members)) == 1:
                prod = {self.mul(x, y) for x in a_sub.members for y in h.members}
                if len(prod) == self.order:
                    return h
        return None

    # -- generating sets and fingerprints -----------------------------------

    def generating_set(self) -> tuple[int, ...]:
        """Small deterministic generating set.  Prefers elements outside the
        centralizer of the current generators so that noncommuting relations
        are pinned down early (this keeps isomorphism backtracking shallow)."""
        if self.order == 1:
            return ()
        gens: list[int] = []
        closure = {self.identity}
        orders = self.element_orders
        while len(closure) < self.order:
            best = None
            for i in range(self.order):
                if i in closure:
                    continue
                centralizes = all(self.mul(i, g) == self.mul(g, i) for g in gens)
                key = (centralizes, -orders[i], i)
                if best is None or key < best:
                    best = key
                    best_i = i
            gens.append(best_i)
            closure = set(self.closure_indices(gens))
        return tuple(gens)

    @cached_property
    def order_sequence(self) -> tuple[tuple[int, int], ...]:
        counts: dict[int, int] = {}
        for o in self.element_orders:
            counts[o] = counts.get(o, 0) + 1
        return tuple(sorted(counts.items()))

    @cached_property
    def nilpotency_class_bounded(self) -> int:
        """Nilpotency class if <= 2, else 3 meaning 'larger than 2'."""
        if self.is_abelian:
            return 0 if self.order == 1 else 1
        derived = self.derived_indices
        comms = {self.commutator(i, j) for i in derived for j in range(self.order)}
        if comms == {self.identity}:
            return 2
        return 3

    def fingerprint(self) -> "GroupFingerprint":
        derived = SubgroupHandle(self, self.derived_indices)
        ab_quotient = self.quotient(derived)
        return GroupFingerprint(
            order=self.order,
            exponent=self.exponent,
            order_sequence=self.order_sequence,
            center_order=len(self.center_indices),
            derived_order=len(self.derived_indices),
            abelianization=abelian_invariants(ab_quotient),
            nilpotency_class=self.nilpotency_class_bounded,
        )

    def report(self, with_frattini: bool = True) -> dict:
        fp = self.fingerprint()
        out = {
            "order": self.order,
            "exponent": self.exponent,
            "center_order": fp.center_order,
            "derived_order": fp.derived_order,
            "fingerprint": fp.to_json(),
            "order_sequence": [list(t) for t in self.order_sequence],
        }
        if with_frattini and self.order <= DEFAULT_SUBGROUP_CAP:
            out["frattini_order"] = self.frattini().order
        return out

    def __repr__(self) -> str:
        label = self.name or "FiniteGroup"
        return f"<{label} of order {self.order}>"


def is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _p_group_prime(order: int):
    """The prime p if order is a nontrivial power of p, else None."""
    if order < 2:
        return None
    p = 2
    n = order
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
        p += 1
    return order  # order itself prime


def group_close(generators, mul, cap: int = DEFAULT_CLOSURE_CAP,
                name: str = "") -> FiniteGroup:
    """Materialize the group generated by ``generators`` under the oracle
    ``mul``.  Raises ClosureCapError when the closure exceeds ``cap``."""
    generators = list(generators)
    elements = list(dict.fromkeys(generators))
    frontier = list(elements)
    elem_set = set(elements)
    while frontier:
        new = []
        for a in frontier:
            for g in generators:
                c = mul(a, g)
                if c not in elem_set:
                    elem_set.add(c)
                    new.append(c)
                    if len(elem_set) > cap:
                        raise ClosureCapError(cap)
        frontier = new
    # canonicalize: sort keys so identical generator sets give identical groups
    elements = sorted(elem_set)
    return FiniteGroup(elements, mul, name=name)


@dataclass(frozen=True)
class SubgroupHandle:
    """A subgroup of a parent FiniteGroup as a canonical sorted index set."""

    parent: FiniteGroup = field(compare=False)
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    def contains(self, other: "SubgroupHandle") -> bool:
        return set(other.members) <= set(self.members)

    def element_keys(self) -> tuple:
        return tuple(self.parent.elements[i] for i in self.members)

    def is_abelian(self) -> bool:
        sub = self.parent.table[np.ix_(self.members, self.members)]
        return bool((sub == sub.T).all())

    def is_cyclic(self) -> bool:
        return any(self.parent.element_orders[i] == self.order
                   for i in self.members)

    def is_elementary_abelian(self) -> bool:
        if self.order == 1:
            return True
        orders = {self.parent.element_orders[i] for i in self.members}
        nontriv = sorted(o for o in orders if o > 1)
        return (self.is_abelian() and len(nontriv) == 1
                and is_prime_int(nontriv[0]))

    def is_normal(self) -> bool:
        g = self.parent
        mem = set(self.members)
        return all(g.conjugate(i, x) in mem
                   for i in self.members for x in range(g.order))

    def as_group(self, name: str = "") -> FiniteGroup:
        """Materialize this subgroup as a standalone FiniteGroup sharing the
        parent's element keys."""
        remap = {m: i for i, m in enumerate(self.members)}
        sub = self.parent.table[np.ix_(self.members, self.members)]
        table = np.vectorize(remap.__getitem__, otypes=[np.int32])(sub)
        keys = [self.parent.elements[m] for m in self.members]
        return FiniteGroup._from_table(keys, table, name=name)

    def intersect(self, other: "SubgroupHandle") -> "SubgroupHandle":
        return SubgroupHandle(self.parent, tuple(sorted(
            set(self.members) & set(other.members))))

    def product_set(self, other: "SubgroupHandle") -> tuple[int, ...]:
        """The setwise product HK as a sorted index tuple (not necessarily
        a subgroup)."""
        t = self.parent.table
        prod = np.unique(t[np.ix_(self.members, other.members)])
        return tuple(int(x) for x in prod)

    def commutator_with(self, other: "SubgroupHandle") -> "SubgroupHandle":
        g = self.parent
        comms = {g.commutator(i, j) for i in self.members for j in other.members}
        return SubgroupHandle(g, g.closure_indices(comms))


@dataclass(frozen=True)
class GroupFingerprint:
    """Cheap isomorphism invariants: equal fingerprints are necessary (not
    sufficient) for isomorphism."""

    order: int
    exponent: int
    order_sequence: tuple[tuple[int, int], ...]
    center_order: int
    derived_order: int
    abelianization: tuple[int, ...]
    nilpotency_class: int

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "exponent": self.exponent,
            "order_sequence": [list(t) for t in self.order_sequence],
            "center_order": self.center_order,
            "derived_order": self.derived_order,
            "abelianization": list(self.abelianization),
            "nilpotency_class": self.nilpotency_class,
        }


def abelian_invariants(g: FiniteGroup) -> tuple[int, ...]:
    """Elementary divisors (prime-power cyclic factors, sorted) of a finite
    abelian group, recovered from its order statistics."""
    if not g.is_abelian:
        raise ValueError("abelian invariants require an abelian group")
    if g.order == 1:
        return ()
    out = []
    n = g.order
    p = 2
    while n > 1:
        if n % p == 0:
            k_max = 0
            while n % p == 0:
                n //= p
                k_max += 1
            # f[k] = #elements of order dividing p^k = p^(sum_i min(lambda_i, k)),
            # so log_p f[k] - log_p f[k-1] = #parts of the partition >= k
            logs = []
            for k in range(k_max + 1):
                pk = p ** k
                f_k = sum(1 for o in g.element_orders if pk % o == 0)
                s = 0
                while f_k > 1:
                    f_k //= p
                    s += 1
                logs.append(s)
            parts_ge = [logs[k] - logs[k - 1] for k in range(1, k_max + 1)]
            lam = [sum(1 for c in parts_ge if c > i) for i in range(parts_ge[0])]
            out.extend(p ** s for s in lam)
        p += 1
        if p * p > n and n > 1 and all(n % q for q in range(2, p)):
            p = n
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# isomorphism testing
# ---------------------------------------------------------------------------

def _bfs_words(g: FiniteGroup, gens: tuple[int, ...]):
    """BFS closure of <gens> recording, for each non-identity element, a
    derivation (element, parent, generator position) with element =
    parent * gens[pos].  Returns (sorted member tuple, derivation list)."""
    seen = {g.identity}
    order_list = [g.identity]
    deriv = []
    head = 0
    while head < len(order_list):
        x = order_list[head]
        head += 1
        for pos, gen in enumerate(gens):
            y = g.mul(x, gen)
            if y not in seen:
                seen.add(y)
                order_list.append(y)
                deriv.append((y, x, pos))
    return tuple(sorted(seen)), deriv


def isomorphic(g: FiniteGroup, h: FiniteGroup):
    """Decide G ≅ H; returns (True, witness) with witness mapping element
    keys of G to element keys of H, or (False, None).

    Strategy: fingerprint pre-filter, then backtracking over images of a
    small generating set of G, pruned by element order and conjugacy-class
    size; the first generator image only ranges over class representatives
    (composing with an inner automorphism of H loses no generality).
    Candidate tuples are validated by rebuilding the partial subgroup map
    and checking multiplication consistency.
    """
    if g.order > _ISO_ORDER_CAP or h.order > _ISO_ORDER_CAP:
        raise ValueError(f"isomorphism search capped at order {_ISO_ORDER_CAP}")
    if g.order != h.order:
        return False, None
    if g.fingerprint() != h.fingerprint():
        return False, None
    if g.order == 1:
        return True, {g.elements[0]: h.elements[0]}

    gens = g.generating_set()
    k = len(gens)
    # chain data for each prefix of the generating set
    chain = []
    for i in range(1, k + 1):
        members, deriv = _bfs_words(g, gens[:i])
        chain.append((members, deriv))

    g_orders = g.element_orders
    h_orders = h.element_orders
    g_class = g.class_size_of
    h_class = h.class_size_of

    def candidates(pos: int):
        o, c = g_orders[gens[pos]], g_class[gens[pos]]
        if pos == 0:
            reps = [cls[0] for cls in h.conjugacy_classes]
            pool = reps
        else:
            pool = range(h.order)
        return [x for x in pool if h_orders[x] == o and h_class[x] == c]

    def check_prefix(images: list[int]):
        """Rebuild the map on <gens[:len(images)]>; return the image map
        (index->index) if consistent and injective, else None."""
        i = len(images)
        members, deriv = chain[i - 1]
        phi = {g.identity: h.identity}
        for y, parent, pos in deriv:
            phi[y] = h.mul(phi[parent], images[pos])
        # full consistency: phi(x * gen) == phi(x) * image for every pair
        for x in members:
            px = phi[x]
            for pos in range(i):
                if phi[g.mul(x, gens[pos])] != h.mul(px, images[pos]):
                    return None
        if len(set(phi.values())) != len(members):
            return None
        return phi

    images: list[int] = []

    def backtrack():
        pos = len(images)
        for cand in candidates(pos):
            images.append(cand)
            phi = check_prefix(images)
            if phi is not None:
                if pos + 1 == k:
                    return phi
                result = backtrack()
                if result is not None:
                    return result
            images.pop()
        return None

    phi = backtrack()
    if phi is None:
        return False, None
    witness = {g.elements[a]: h.elements[b] for a, b in phi.items()}
    return True, witness
