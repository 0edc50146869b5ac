"""Exact linear algebra for bialgebras, comodules and module algebras.

Every vector space carries a chosen basis and every map is a matrix of shape
``(dim codomain, dim domain)``. Tensor products use one flat-index convention
everywhere: basis vector ``(i, j)`` of ``V⊗W`` sits at ``i*dim(W) + j``, which
is exactly what :func:`numpy.kron` produces. With this convention the
associativity and unit isomorphisms of vector spaces are identity matrices.

Sweedler notation used in docstrings: ``Δ(b) = Σ b1⊗b2`` and, for a right
comodule, ``ρ(q) = Σ q0⊗q1`` with ``q1`` in the bialgebra.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .report import Report


# -- scalars ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExactField:
    """``F_p`` when ``p`` is a prime, the rationals when ``p`` is None."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and (self.p < 2 or any(self.p % d == 0 for d in range(2, math.isqrt(self.p) + 1))):
            raise ValueError(f"{self.p} is not prime")

    @property
    def name(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"

    @classmethod
    def parse(cls, name: str) -> "ExactField":
        if name == "Q":
            return cls(None)
        if name.startswith("F") and name[1:].isdigit():
            return cls(int(name[1:]))
        raise ValueError(f"unknown field {name!r} (expected Q or F<prime>)")

    def scalar(self, x):
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return int(x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def array(self, rows) -> np.ndarray:
        a = np.array(rows, dtype=object)
        if a.ndim != 2:
            raise ValueError("matrix entries must form a 2-d table")
        if self.p is None:
            return np.vectorize(Fraction, otypes=[object])(a) if a.size else a
        return np.vectorize(self.scalar, otypes=[np.int64])(a).astype(np.int64) if a.size else a.astype(np.int64)

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        if self.p is None:
            a = np.empty((rows, cols), dtype=object)
            a.fill(Fraction(0))
            return a
        return np.zeros((rows, cols), dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        a = self.zeros(n, n)
        for i in range(n):
            a[i, i] = self.scalar(1)
        return a

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return a if self.p is None else a % self.p

    def elements(self) -> list:
        if self.p is None:
            raise ValueError("the rationals are not enumerable here")
        return list(range(self.p))

    def inverse(self, a: np.ndarray) -> np.ndarray:
        """Gauss-Jordan inverse; raises ValueError when singular."""
        n = a.shape[0]
        rows = [[self.scalar(x) for x in a[i]] + [self.scalar(int(i == j)) for j in range(n)] for i in range(n)]
        for c in range(n):
            piv = next((r for r in range(c, n) if rows[r][c] != 0), None)
            if piv is None:
                raise ValueError("matrix is singular")
            rows[c], rows[piv] = rows[piv], rows[c]
            inv = self._inv(rows[c][c])
            rows[c] = [self._mul(inv, x) for x in rows[c]]
            for r in range(n):
                if r != c and rows[r][c] != 0:
                    k = rows[r][c]
                    rows[r] = [self._sub(x, self._mul(k, y)) for x, y in zip(rows[r], rows[c])]
        return self.array([row[n:] for row in rows])

    def _inv(self, x):
        return Fraction(1) / x if self.p is None else pow(int(x), self.p - 2, self.p)

    def _mul(self, x, y):
        return x * y if self.p is None else (x * y) % self.p

    def _sub(self, x, y):
        return x - y if self.p is None else (x - y) % self.p

    def fmt(self, x) -> str:
        return str(x)


# -- maps -----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LinMap:
    field: ExactField
    mat: np.ndarray

    @property
    def dom(self) -> int:
        return self.mat.shape[1]

    @property
    def cod(self) -> int:
        return self.mat.shape[0]

    def __matmul__(self, other: "LinMap") -> "LinMap":
        """Composition ``self ∘ other``."""
        if self.dom != other.cod:
            raise ValueError(f"cannot compose {self.cod}x{self.dom} after {other.cod}x{other.dom}")
        return LinMap(self.field, self.field.reduce(self.mat @ other.mat))

    def __add__(self, other: "LinMap") -> "LinMap":
        return LinMap(self.field, self.field.reduce(self.mat + other.mat))

    def __sub__(self, other: "LinMap") -> "LinMap":
        return LinMap(self.field, self.field.reduce(self.mat - other.mat))

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinMap) and self.mat.shape == other.mat.shape
                and bool(np.all(self.mat == other.mat)))

    __hash__ = None

    def entry(self, i: int, j: int):
        return self.mat[i, j]

    def with_entry(self, i: int, j: int, value) -> "LinMap":
        m = self.mat.copy()
        m[i, j] = self.field.scalar(value)
        return LinMap(self.field, m)

    def rows(self) -> list[list]:
        return [[self.field.fmt(x) for x in row] for row in self.mat]

    def to_text(self) -> str:
        """Row-major text form: a header line then one line per row."""
        head = f"{self.cod}x{self.dom} over {self.field.name}"
        return "\n".join([head] + [" ".join(r) for r in self.rows()])

    def first_difference(self, other: "LinMap") -> tuple[int, int] | None:
        diff = np.argwhere(self.mat != other.mat)
        return None if len(diff) == 0 else (int(diff[0][0]), int(diff[0][1]))


def linmap(field: ExactField, rows) -> LinMap:
    return LinMap(field, field.array(rows))


def identity(field: ExactField, n: int) -> LinMap:
    return LinMap(field, field.eye(n))


def kron(*maps: LinMap) -> LinMap:
    """Tensor product of maps under the flat-index convention."""
    out = maps[0]
    for g in maps[1:]:
        out = LinMap(out.field, out.field.reduce(np.kron(out.mat, g.mat)))
    return out


def permutation(field: ExactField, dims: Sequence[int], order: Sequence[int]) -> LinMap:
    """Reorder tensor factors: V_0⊗...⊗V_{n-1} -> V_{order[0]}⊗...⊗V_{order[n-1]}."""
    n = math.prod(dims)
    old = np.arange(n).reshape(tuple(dims)).transpose(tuple(order)).ravel()
    m = field.zeros(n, n)
    for new, o in enumerate(old):
        m[new, o] = field.scalar(1)
    return LinMap(field, m)


def transport(P: LinMap, Pinv: LinMap, f: LinMap, dom_factors: int, cod_factors: int) -> LinMap:
    """Conjugate a map between tensor powers of one space by a basis change P (new -> old coords)."""
    if dom_factors == 0:
        src = identity(P.field, 1)
    else:
        src = kron(*([P] * dom_factors))
    if cod_factors == 0:
        tgt = identity(P.field, 1)
    else:
        tgt = kron(*([Pinv] * cod_factors))
    return tgt @ f @ src


def _expect(rep: Report, check: str, lhs: LinMap, rhs: LinMap, **witness) -> bool:
    if lhs.mat.shape != rhs.mat.shape:
        rep.add(check, f"shapes differ: {lhs.cod}x{lhs.dom} vs {rhs.cod}x{rhs.dom}", **witness)
        return False
    pos = lhs.first_difference(rhs)
    if pos is None:
        return True
    i, j = pos
    rep.add(check, "matrices differ", row=i, col=j, lhs=lhs.field.fmt(lhs.mat[i, j]),
            rhs=rhs.field.fmt(rhs.mat[i, j]), **witness)
    return False


def _shape(rep: Report, check: str, f: LinMap, cod: int, dom: int) -> bool:
    if (f.cod, f.dom) != (cod, dom):
        rep.add(check, f"expected a {cod}x{dom} matrix, got {f.cod}x{f.dom}")
        return False
    return True


# -- structures ----------------------------------------------------------------------

@dataclass(frozen=True)
class BialgebraBundle:
    field: ExactField
    dim: int
    mult: LinMap
    unit: LinMap
    comult: LinMap
    counit: LinMap


@dataclass(frozen=True)
class Comodule:
    """A right comodule: ``coaction : Q -> Q⊗B``."""

    dim: int
    coaction: LinMap


@dataclass(frozen=True)
class ModuleAlgebra:
    """An algebra A with a left action ``act : B⊗A -> A``."""

    dim: int
    mult: LinMap
    unit: LinMap
    act: LinMap

    @property
    def field(self) -> ExactField:
        return self.mult.field


@dataclass(frozen=True)
class LeftAModule:
    dim: int
    act: LinMap


def _check_algebra(rep: Report, mult: LinMap, unit: LinMap, d: int, prefix: str) -> None:
    k = mult.field
    I = identity(k, d)
    if not (_shape(rep, f"{prefix}mult", mult, d, d * d) and _shape(rep, f"{prefix}unit", unit, d, 1)):
        return
    _expect(rep, f"{prefix}associativity", mult @ kron(mult, I), mult @ kron(I, mult))
    _expect(rep, f"{prefix}left-unit", mult @ kron(unit, I), I)
    _expect(rep, f"{prefix}right-unit", mult @ kron(I, unit), I)


def check_bialgebra(B: BialgebraBundle) -> Report:
    rep = Report(f"bialgebra of dimension {B.dim}")
    k, d = B.field, B.dim
    _check_algebra(rep, B.mult, B.unit, d, "")
    if not (_shape(rep, "comult", B.comult, d * d, d) and _shape(rep, "counit", B.counit, 1, d)):
        return rep
    if not rep.ok:
        return rep
    I, D, e = identity(k, d), B.comult, B.counit
    _expect(rep, "coassociativity", kron(D, I) @ D, kron(I, D) @ D)
    _expect(rep, "left-counit", kron(e, I) @ D, I)
    _expect(rep, "right-counit", kron(I, e) @ D, I)
    swap_mid = permutation(k, (d, d, d, d), (0, 2, 1, 3))
    _expect(rep, "comult-multiplicative", D @ B.mult, kron(B.mult, B.mult) @ swap_mid @ kron(D, D))
    _expect(rep, "comult-unital", D @ B.unit, kron(B.unit, B.unit))
    _expect(rep, "counit-multiplicative", e @ B.mult, kron(e, e))
    _expect(rep, "counit-unital", e @ B.unit, identity(k, 1))
    return rep


def check_comodule(B: BialgebraBundle, Q: Comodule) -> Report:
    rep = Report(f"comodule of dimension {Q.dim}")
    if not _shape(rep, "coaction", Q.coaction, Q.dim * B.dim, Q.dim):
        return rep
    k = B.field
    IQ, IB, r = identity(k, Q.dim), identity(k, B.dim), Q.coaction
    _expect(rep, "coassociativity", kron(r, IB) @ r, kron(IQ, B.comult) @ r)
    _expect(rep, "counit", kron(IQ, B.counit) @ r, IQ)
    return rep


def trivial_comodule(B: BialgebraBundle) -> Comodule:
    """The ground field with ``ρ(1) = 1⊗1_B``; the monoidal unit."""
    return Comodule(1, B.unit)


def regular_comodule(B: BialgebraBundle) -> Comodule:
    return Comodule(B.dim, B.comult)


def tensor_comodule(B: BialgebraBundle, Q: Comodule, Q2: Comodule) -> Comodule:
    """``q⊗q' ↦ Σ q0⊗q'0⊗q1·q'1``."""
    k = B.field
    shuffle = permutation(k, (Q.dim, B.dim, Q2.dim, B.dim), (0, 2, 1, 3))
    rho = kron(identity(k, Q.dim * Q2.dim), B.mult) @ shuffle @ kron(Q.coaction, Q2.coaction)
    return Comodule(Q.dim * Q2.dim, rho)


def check_module_algebra(B: BialgebraBundle, A: ModuleAlgebra) -> Report:
    rep = Report(f"module algebra of dimension {A.dim}")
    k, d = B.field, A.dim
    _check_algebra(rep, A.mult, A.unit, d, "algebra-")
    if not _shape(rep, "act", A.act, d, B.dim * d) or not rep.ok:
        return rep
    IA, IB, t = identity(k, d), identity(k, B.dim), A.act
    _expect(rep, "action-associativity", t @ kron(B.mult, IA), t @ kron(IB, t))
    _expect(rep, "action-unit", t @ kron(B.unit, IA), IA)
    # b▷(aa') = Σ (b1▷a)(b2▷a')
    shuffle = permutation(k, (B.dim, B.dim, d, d), (0, 2, 1, 3))
    _expect(rep, "module-algebra", t @ kron(IB, A.mult),
            A.mult @ kron(t, t) @ shuffle @ kron(B.comult, IA, IA))
    _expect(rep, "unit-preserved", t @ kron(IB, A.unit), A.unit @ B.counit)
    return rep


def check_left_module(A: ModuleAlgebra, M: LeftAModule) -> Report:
    rep = Report(f"left module of dimension {M.dim}")
    if not _shape(rep, "act", M.act, M.dim, A.dim * M.dim):
        return rep
    k = A.field
    IA, IM, v = identity(k, A.dim), identity(k, M.dim), M.act
    _expect(rep, "associativity", v @ kron(A.mult, IM), v @ kron(IA, v))
    _expect(rep, "unit", v @ kron(A.unit, IM), IM)
    return rep


def regular_module(A: ModuleAlgebra) -> LeftAModule:
    return LeftAModule(A.dim, A.mult)


def check_tensor_monad(mult: LinMap, unit: LinMap, dim_a: int, dim_v: int) -> Report:
    """Monad laws of ``V ↦ A⊗V`` with μ_V = mult⊗V and η_V = unit⊗V, at one object V."""
    rep = Report(f"monad A⊗- at dimension {dim_v}")
    k = mult.field
    IA, IV = identity(k, dim_a), identity(k, dim_v)
    mu = kron(mult, IV)
    eta = kron(unit, IV)
    _expect(rep, "associativity", mu @ kron(IA, mu), mu @ kron(mult, IA, IV))
    _expect(rep, "left-unit", mu @ kron(unit, IA, IV), kron(IA, IV))
    _expect(rep, "right-unit", mu @ kron(IA, eta), kron(IA, IV))
    return rep


def module_map_ok(A: ModuleAlgebra, M: LeftAModule, N: LeftAModule, f: LinMap) -> bool:
    return N.act @ kron(identity(A.field, A.dim), f) == f @ M.act


# -- the canonical law and the lifted action ----------------------------------------

def canonical_law(B: BialgebraBundle, A: ModuleAlgebra, dim_m: int, Q: Comodule) -> LinMap:
    """``a⊗m⊗q ↦ Σ (q1▷a)⊗m⊗q0`` as a map A⊗(M⊗Q) -> (A⊗M)⊗Q.

    Only the dimension of M enters: the formula never uses the M-action.
    """
    k = B.field
    dA, dQ = A.dim, Q.dim
    coact = kron(identity(k, dA * dim_m), Q.coaction)
    bring_front = permutation(k, (dA, dim_m, dQ, B.dim), (3, 0, 1, 2))
    return kron(A.act, identity(k, dim_m * dQ)) @ bring_front @ coact


LawFamily = Callable[[int, Comodule], LinMap]


def _family(B: BialgebraBundle, A: ModuleAlgebra, law, dim_m: int, Q: Comodule) -> LawFamily:
    """Turn a single component (at ``(M, Q)``) into a family, canonical elsewhere."""
    if law is None:
        return lambda d, P: canonical_law(B, A, d, P)
    if callable(law):
        return law

    def fam(d: int, P: Comodule) -> LinMap:
        if d == dim_m and P.dim == Q.dim and P.coaction == Q.coaction:
            return law
        return canonical_law(B, A, d, P)
    return fam


def check_linear_distlaw(law, B: BialgebraBundle, A: ModuleAlgebra, M: LeftAModule, Q: Comodule,
                         partners: Iterable[Comodule] = ()) -> Report:
    """D1-D4 for a law between ``- ⊗ Q`` and ``A ⊗ -`` at the object M.

    ``law`` is a LinMap (the component at (M, Q); other components are taken
    canonical), a callable family ``(dim, comodule) -> LinMap``, or None for the
    canonical law. D2 is checked against Q itself, the trivial comodule and
    any extra ``partners``.
    """
    rep = Report(f"linear distributive law at M of dim {M.dim}, Q of dim {Q.dim}")
    k = B.field
    fam = _family(B, A, law, M.dim, Q)
    dA, dM, dQ = A.dim, M.dim, Q.dim
    l = fam(dM, Q)
    if not _shape(rep, "law", l, dA * dM * dQ, dA * dM * dQ):
        return rep
    IA = identity(k, dA)
    I_MQ = identity(k, dM * dQ)
    # D1: (μ⊗id)∘l_{TM,Q}∘(A⊗l) = l∘(μ⊗id)
    l_T = fam(dA * dM, Q)
    _expect(rep, "D1", kron(A.mult, I_MQ) @ l_T @ kron(IA, l), l @ kron(A.mult, I_MQ), Q=dQ)
    # D2: l_{M,Q⊗Q'} = (l_{M,Q}⊗Q')∘l_{M⊗Q,Q'}, with Ψ the flat identification
    seen = []
    for P in [Q, trivial_comodule(B), *partners]:
        if any(P.dim == s.dim and P.coaction == s.coaction for s in seen):
            continue
        seen.append(P)
        QP = tensor_comodule(B, Q, P)
        lhs = fam(dM, QP)
        rhs = kron(l, identity(k, P.dim)) @ fam(dM * dQ, P)
        _expect(rep, "D2", lhs, rhs, Q=dQ, Q2=P.dim)
    # D3: l∘(η⊗id) = η⊗id
    _expect(rep, "D3", l @ kron(A.unit, I_MQ), kron(A.unit, I_MQ))
    # D4: the component at the unit comodule is the identity
    _expect(rep, "D4", fam(dM, trivial_comodule(B)), identity(k, dA * dM))
    return rep


def lifted_action_map(B: BialgebraBundle, A: ModuleAlgebra, M: LeftAModule, Q: Comodule,
                      law: LinMap | None = None) -> LeftAModule:
    """The A-module M⊗Q with action (ν⊗Q)∘law."""
    l = canonical_law(B, A, M.dim, Q) if law is None else law
    return LeftAModule(M.dim * Q.dim, kron(M.act, identity(B.field, Q.dim)) @ l)


def lifted_action_direct(B: BialgebraBundle, A: ModuleAlgebra, M: LeftAModule, Q: Comodule) -> LinMap:
    """``a▷(m⊗q) = Σ ((q1▷a)▷m)⊗q0`` by explicit summation over basis indices.

    An independent route used to cross-check :func:`lifted_action_map`.
    """
    k = B.field
    dA, dM, dQ, dB = A.dim, M.dim, Q.dim, B.dim
    rho, tri, nu = Q.coaction.mat, A.act.mat, M.act.mat
    out = k.zeros(dM * dQ, dA * dM * dQ)
    for a, m, q in itertools.product(range(dA), range(dM), range(dQ)):
        col = (a * dM + m) * dQ + q
        for q0, b in itertools.product(range(dQ), range(dB)):
            c = rho[q0 * dB + b, q]
            if c == 0:
                continue
            for a2 in range(dA):
                c2 = c * tri[a2, b * dA + a]
                if c2 == 0:
                    continue
                for m2 in range(dM):
                    c3 = c2 * nu[m2, a2 * dM + m]
                    if c3 != 0:
                        out[m2 * dQ + q0, col] += c3
    return LinMap(k, k.reduce(out))


# -- the monad induced by B on lifted modules ------------------------------------------

def lb_monad_maps(B: BialgebraBundle, M: LeftAModule) -> tuple[LinMap, LinMap]:
    """Multiplication and unit of the induced monad at M: id_M⊗mult and id_M⊗unit."""
    I = identity(B.field, M.dim)
    return kron(I, B.mult), kron(I, B.unit)


def _lb_mult_direct(B: BialgebraBundle, dim_m: int) -> LinMap:
    """(M⋄mult)∘Ψ⁻¹ entry by entry: (m⊗b)⊗b' ↦ m⊗(bb'), Ψ being the flat identification."""
    k, d = B.field, B.dim
    out = k.zeros(dim_m * d, dim_m * d * d)
    for m, b, b2 in itertools.product(range(dim_m), range(d), range(d)):
        src = (m * d + b) * d + b2          # index in (M⊗B)⊗B; Ψ⁻¹ keeps it in M⊗(B⊗B)
        for c in range(d):
            out[m * d + c, src] += B.mult.mat[c, b * d + b2]
    return LinMap(k, k.reduce(out))


def check_lb_monad(B: BialgebraBundle, A: ModuleAlgebra, M: LeftAModule) -> Report:
    """The induced monad at (M, ν): its structure maps are A-module maps and satisfy the monad laws.

    The multiplication is (M⋄mult)∘Ψ⁻¹ with Ψ the flat identification, so it
    must equal id_M⊗mult as a matrix; that identity is checked first.
    """
    rep = Report(f"induced monad at M of dim {M.dim}")
    k = B.field
    R = regular_comodule(B)
    RR = tensor_comodule(B, R, R)
    one = trivial_comodule(B)
    mu, eta = lb_monad_maps(B, M)
    _expect(rep, "multiplication-is-M⊗mult", _lb_mult_direct(B, M.dim), mu)
    MB = lifted_action_map(B, A, M, R)
    MBB = lifted_action_map(B, A, M, RR)
    M1 = lifted_action_map(B, A, M, one)
    IA = identity(k, A.dim)
    _expect(rep, "multiplication-A-linear", MB.act @ kron(IA, mu), mu @ MBB.act)
    _expect(rep, "unit-A-linear", MB.act @ kron(IA, eta), eta @ M1.act)
    IM, IB = identity(k, M.dim), identity(k, B.dim)
    _expect(rep, "associativity", mu @ kron(mu, IB), mu @ kron(IM, B.mult, IB))
    _expect(rep, "left-unit", mu @ kron(eta, IB), kron(IM, IB))
    _expect(rep, "right-unit", mu @ kron(IM, IB, B.unit), kron(IM, IB))
    return rep


def free_lb_module(B: BialgebraBundle, A: ModuleAlgebra, M: LeftAModule) -> tuple[LeftAModule, LinMap]:
    """(M⊗B, lifted action) with the right B-action id_M⊗mult."""
    return lifted_action_map(B, A, M, regular_comodule(B)), kron(identity(B.field, M.dim), B.mult)


def check_right_module(B: BialgebraBundle, dim_n: int, right: LinMap) -> Report:
    rep = Report(f"right module of dimension {dim_n}")
    if not _shape(rep, "right-act", right, dim_n, dim_n * B.dim):
        return rep
    k = B.field
    IN, IB = identity(k, dim_n), identity(k, B.dim)
    _expect(rep, "right-associativity", right @ kron(right, IB), right @ kron(IN, B.mult))
    _expect(rep, "right-unit", right @ kron(IN, B.unit), IN)
    return rep


def check_LB_compatibility(B: BialgebraBundle, A: ModuleAlgebra, N: LeftAModule, right: LinMap) -> Report:
    """``a▷(n◀h) = [(h2▷a)▷n]◀h1`` as maps A⊗N⊗B -> N."""
    rep = Report(f"compatibility on a module of dimension {N.dim}")
    rep.extend(check_left_module(A, N))
    rep.extend(check_right_module(B, N.dim, right))
    if not rep.ok:
        return rep
    k = B.field
    dA, dN, dB = A.dim, N.dim, B.dim
    lhs = N.act @ kron(identity(k, dA), right)
    split = kron(identity(k, dA * dN), B.comult)                      # a⊗n⊗h1⊗h2
    reorder = permutation(k, (dA, dN, dB, dB), (3, 0, 1, 2))          # h2⊗a⊗n⊗h1
    rhs = right @ kron(N.act, identity(k, dB)) @ kron(A.act, identity(k, dN * dB)) @ reorder @ split
    _expect(rep, "compatibility", lhs, rhs)
    return rep
