"""Pauli groups on n qudits of prime-power dimension q = p^m, in
phase-space form.

An element is the tuple ``(phase, alpha, beta)`` encoding
w^c X^alpha Z^beta, with alpha, beta length-n vectors over GF(q) (each
coordinate an integer field code) and the phase an integer residue:
mod 4 for p = 2 (phase group generated by i), mod p for odd p.

Multiplication pulls X factors left past Z factors:

    (c1,a1,b1)(c2,a2,b2) = (c1 + c2 + x, a1+a2, b1+b2)

with cross term x = tr(b1 . a2) for odd p and x = 2 (b1 . a2) for p = 2,
the dot product taken in GF(q).  For m > 1 the phase convention is the
trace form: phases live in Z_p and the clock operator acts through the
additive character j -> w_p^tr(j), which is what makes the phase-space
product match the exact matrix product (see the matrix oracle below).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .algebra import FieldSpec, field_make
from .cyclotomic import CyclotomicMatrix
from .groupcore import FiniteGroup

PauliKey = tuple  # (phase, alpha tuple, beta tuple)


@dataclass(frozen=True)
class PauliGroupSpec:
    """Parameters of P_{n,q} with q = p^m."""

    p: int
    m: int
    n: int

    def __post_init__(self):
        if self.p == 2 and self.m != 1:
            raise ValueError("qubit Pauli groups are defined for q = 2 (m = 1)")
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be >= 1")

    @cached_property
    def field(self) -> FieldSpec:
        return field_make(self.p, self.m)

    @property
    def q(self) -> int:
        return self.p ** self.m

    @property
    def phase_modulus(self) -> int:
        return 4 if self.p == 2 else self.p

    @property
    def order(self) -> int:
        if self.p == 2:
            return 4 ** (self.n + 1)
        return self.p ** (2 * self.n * self.m + 1)

    def identity(self) -> PauliKey:
        zero = (0,) * self.n
        return (0, zero, zero)

    def element(self, phase: int, alpha, beta) -> PauliKey:
        alpha = tuple(int(a) % self.q for a in alpha)
        beta = tuple(int(b) % self.q for b in beta)
        if len(alpha) != self.n or len(beta) != self.n:
            raise ValueError(f"vectors must have length n = {self.n}")
        return (phase % self.phase_modulus, alpha, beta)

    def x_gen(self, register: int = 0, exponent: int = 1) -> PauliKey:
        alpha = [0] * self.n
        alpha[register] = exponent % self.q
        return (0, tuple(alpha), (0,) * self.n)

    def z_gen(self, register: int = 0, exponent: int = 1) -> PauliKey:
        beta = [0] * self.n
        beta[register] = exponent % self.q
        return (0, (0,) * self.n, tuple(beta))

    def phase_gen(self) -> PauliKey:
        """i*identity for p = 2, w*identity for odd p."""
        zero = (0,) * self.n
        return (1, zero, zero)

    def y_gen(self, register: int = 0) -> PauliKey:
        """Y = i X Z (p = 2 only)."""
        if self.p != 2:
            raise ValueError("Y is a qubit notion")
        v = [0] * self.n
        v[register] = 1
        return (1, tuple(v), tuple(v))

    def cross_term(self, g: PauliKey, h: PauliKey) -> int:
        """Phase 2-cocycle picked up when normal-ordering the product."""
        f = self.field
        if self.p == 2:
            dot = 0
            for b, a in zip(g[2], h[1]):
                dot ^= b & a
            return 2 * dot
        x = 0
        for b, a in zip(g[2], h[1]):
            x += f.trace(f.mul(b, a))
        return x % self.p

    def mul(self, g: PauliKey, h: PauliKey) -> PauliKey:
        f = self.field
        add = f.add
        c = (g[0] + h[0] + self.cross_term(g, h)) % self.phase_modulus
        alpha = tuple(add(a, b) for a, b in zip(g[1], h[1]))
        beta = tuple(add(a, b) for a, b in zip(g[2], h[2]))
        return (c, alpha, beta)

    def inverse(self, g: PauliKey) -> PauliKey:
        f = self.field
        alpha = tuple(f.neg(a) for a in g[1])
        beta = tuple(f.neg(b) for b in g[2])
        # g * g^-1 must cancel the cross term picked up in the product
        x = self.cross_term(g, (0, alpha, beta))
        c = (-g[0] - x) % self.phase_modulus
        return (c, alpha, beta)

    def order_of(self, g: PauliKey) -> int:
        e = self.identity()
        k, x = 1, g
        while x != e:
            x = self.mul(x, g)
            k += 1
        return k

    def elements(self):
        q, n = self.q, self.n
        vecs = list(itertools.product(range(q), repeat=n))
        for c in range(self.phase_modulus):
            for alpha in vecs:
                for beta in vecs:
                    yield (c, alpha, beta)

    def format_element(self, g: PauliKey) -> str:
        return f"w^{g[0]} X{list(g[1])} Z{list(g[2])}"


def pauli_mul(spec: PauliGroupSpec, g: PauliKey, h: PauliKey) -> PauliKey:
    return spec.mul(g, h)


def pauli_inverse(spec: PauliGroupSpec, g: PauliKey) -> PauliKey:
    return spec.inverse(g)


def pauli_order(spec: PauliGroupSpec, g: PauliKey) -> int:
    return spec.order_of(g)


def pauli_group(spec: PauliGroupSpec, closure_cap: int = 4096) -> FiniteGroup:
    """Materialize P_{n,q}.  Elements are enumerated directly (the set is
    known in closed form); the generation claim is covered separately by
    tests that close the generators and compare."""
    if spec.order > closure_cap:
        from .groupcore import ClosureCapError
        raise ClosureCapError(closure_cap)
    elems = sorted(spec.elements())
    name = f"P({spec.n},{spec.q})"
    return FiniteGroup(elems, spec.mul, name=name)


# ---------------------------------------------------------------------------
# exact matrix oracle
# ---------------------------------------------------------------------------

def _single_register_matrix(spec: PauliGroupSpec, a: int, b: int) -> CyclotomicMatrix:
    """X^a Z^b on one q-dimensional register, over Z[w_N] with N = 4 for
    p = 2 and N = p for odd p (trace character for m > 1)."""
    f = spec.field
    q = spec.q
    N = 4 if spec.p == 2 else spec.p
    scale = 2 if spec.p == 2 else 1  # embed Z_2-valued characters into w_4
    rows = []
    for i in range(q):       # row index: output basis vector
        row = []
        for j in range(q):   # column index: input basis vector
            # X^a Z^b |j> = chi(b*j) |j+a>
            if i == f.add(j, a):
                chi = f.trace(f.mul(b, j)) * scale
                row.append(tuple([0] * (chi % N)) + (1,))
            else:
                row.append(())
        rows.append(tuple(row))
    return CyclotomicMatrix.from_rows(N, rows)


def pauli_matrix_oracle(spec: PauliGroupSpec, g: PauliKey) -> CyclotomicMatrix:
    """Exact q^n x q^n matrix over Z[w] realizing g.  This is the
    independent oracle: tests check the map is a faithful homomorphism."""
    if spec.q ** spec.n > 9:
        raise ValueError("matrix oracle limited to q^n <= 9")
    mat = _single_register_matrix(spec, g[1][0], g[2][0])
    for k in range(1, spec.n):
        mat = mat.kron(_single_register_matrix(spec, g[1][k], g[2][k]))
    return mat.scale(g[0])


# ---------------------------------------------------------------------------
# presentation data (qubit case)
# ---------------------------------------------------------------------------

def p12_spec() -> PauliGroupSpec:
    return PauliGroupSpec(2, 1, 1)


def p12_named_elements() -> dict[str, PauliKey]:
    """The standard named elements of the one-qubit Pauli group:
    X, Y, Z, u = XY, a = Y, b = XYZ."""
    s = p12_spec()
    X, Z, Y = s.x_gen(), s.z_gen(), s.y_gen()
    u = s.mul(X, Y)
    b = s.mul(u, Z)
    return {"X": X, "Y": Y, "Z": Z, "u": u, "a": Y, "b": b}


def p22_named_generators() -> dict[str, PauliKey]:
    """The five order-64 generators X@I, Y@I, Z@I, I@Z, I@X."""
    s = PauliGroupSpec(2, 1, 2)
    return {
        "A": s.x_gen(0),
        "B": s.y_gen(0),
        "C": s.z_gen(0),
        "D": s.z_gen(1),
        "E": s.x_gen(1),
    }


def lemma31_presentation_check():
    """Evaluate both presentations of the one-qubit Pauli group and the
    derived structural facts (center, Frattini, abelianized quotient)."""
    import time
    from .reports import CLAIMS, VerdictReport

    t0 = time.perf_counter()
    s = p12_spec()
    G = pauli_group(s)
    e = s.identity()
    named = p12_named_elements()
    X, Y, Z = named["X"], named["Y"], named["Z"]
    u, a, b = named["u"], named["a"], named["b"]

    def pw(g, k):
        r = e
        for _ in range(k):
            r = s.mul(r, g)
        return r

    relations = {
        "X^2=1": pw(X, 2) == e,
        "Y^2=1": pw(Y, 2) == e,
        "Z^2=1": pw(Z, 2) == e,
        "(YZ)^4=1": pw(s.mul(Y, Z), 4) == e,
        "(ZX)^4=1": pw(s.mul(Z, X), 4) == e,
        "(XY)^4=1": pw(s.mul(X, Y), 4) == e,
        "u^4=1": pw(u, 4) == e,
        "a^2=1": pw(a, 2) == e,
        "u^2=b^2": pw(u, 2) == pw(b, 2),
        "a^-1ua=u^-1": s.mul(s.mul(s.inverse(a), u), a) == s.inverse(u),
        "ub=bu": s.mul(u, b) == s.mul(b, u),
        "ab=ba": s.mul(a, b) == s.mul(b, a),
    }
    center = G.center()
    derived = G.derived_subgroup()
    frattini = G.frattini()
    d8 = G.generated_subgroup([u, a])
    abelianization = G.quotient(derived)
    facts = {
        "order": G.order,
        "center_order": center.order,
        "center_cyclic": center.is_cyclic(),
        "derived_order": derived.order,
        "frattini_order": frattini.order,
        "<u,a>_order": d8.order,
        "<u,a>_abelian": d8.is_abelian(),
        "abelianization_order": abelianization.order,
        "abelianization_exponent": abelianization.exponent,
    }
    ok = all(relations.values()) and facts == {
        "order": 16, "center_order": 4, "center_cyclic": True,
        "derived_order": 2, "frattini_order": 2,
        "<u,a>_order": 8, "<u,a>_abelian": False,
        "abelianization_order": 8, "abelianization_exponent": 2,
    }
    return VerdictReport(
        claim="lemma3.1",
        locator=CLAIMS["lemma3.1"],
        status="confirmed" if ok else "refuted_at_desk_scale",
        witness={"relations": relations, "facts": facts},
        wall_time_s=time.perf_counter() - t0,
    )


def p22_relations_check():
    """Build P_{2,2} from the five named generators and verify the squared
    generators, the centrality of ABC, and the nine commutator values."""
    import time
    from .groupcore import group_close
    from .reports import CLAIMS, VerdictReport

    t0 = time.perf_counter()
    s = PauliGroupSpec(2, 1, 2)
    e = s.identity()
    minus_i = (2, (0, 0), (0, 0))
    g = p22_named_generators()
    G = group_close(list(g.values()), s.mul, name="P(2,2)")

    def comm(x, y):
        return s.mul(s.mul(s.inverse(x), s.inverse(y)), s.mul(x, y))

    abc = s.mul(s.mul(g["A"], g["B"]), g["C"])
    relations = {f"{k}^2=I": s.mul(v, v) == e for k, v in g.items()}
    relations.update(
        {f"[ABC,{k}]=I": comm(abc, v) == e for k, v in g.items()})
    commutators = {
        "[A,B]": comm(g["A"], g["B"]),
        "[D,E]": comm(g["D"], g["E"]),
        "[B,C]": comm(g["B"], g["C"]),
        "[C,A]": comm(g["C"], g["A"]),
        "[C,E]": comm(g["C"], g["E"]),
        "[B,E]": comm(g["B"], g["E"]),
        "[A,D]": comm(g["A"], g["D"]),
        "[A,E]": comm(g["A"], g["E"]),
        "[C,D]": comm(g["C"], g["D"]),
    }
    expected = dict.fromkeys(("[A,B]", "[D,E]", "[B,C]", "[C,A]"), minus_i)
    expected.update(dict.fromkeys(
        ("[C,E]", "[B,E]", "[A,D]", "[A,E]", "[C,D]"), e))
    commutator_table = {k: commutators[k] == v for k, v in expected.items()}
    center = G.center()
    facts = {
        "order": G.order,
        "center_order": center.order,
        "center_cyclic": center.is_cyclic(),
        "ABC_central": G.centralizer([G.index[abc]]).order == G.order,
    }
    ok = (all(relations.values()) and all(commutator_table.values())
          and facts == {"order": 64, "center_order": 4,
                        "center_cyclic": True, "ABC_central": True})
    return VerdictReport(
        claim="eq13-14",
        locator=CLAIMS["eq13-14"],
        status="confirmed" if ok else "refuted_at_desk_scale",
        witness={"relations": relations,
                 "commutator_table": commutator_table,
                 "facts": facts},
        wall_time_s=time.perf_counter() - t0,
    )
