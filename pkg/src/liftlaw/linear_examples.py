"""Structure constants for small bialgebras, module algebras and comodules.

Includes the sign-action instance over F3 and a generator of random
bundles (monoid bialgebras and function bialgebras acting on algebras of
dimension at most 3) used for property testing.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .linear import (
    BialgebraBundle,
    Comodule,
    ExactField,
    LeftAModule,
    LinMap,
    ModuleAlgebra,
    identity,
    kron,
    linmap,
    regular_comodule,
    regular_module,
    transport,
    trivial_comodule,
)


def _basis_mult(k: ExactField, d: int, table) -> LinMap:
    """Multiplication from ``table[i][j] = {k: coeff}`` (e_i·e_j = Σ coeff e_k)."""
    m = k.zeros(d, d * d)
    for i, j in itertools.product(range(d), repeat=2):
        for t, c in table[i][j].items():
            m[t, i * d + j] = k.scalar(c)
    return LinMap(k, k.reduce(m))


def _column(k: ExactField, d: int, coeffs: dict) -> LinMap:
    m = k.zeros(d, 1)
    for t, c in coeffs.items():
        m[t, 0] = k.scalar(c)
    return LinMap(k, m)


# -- bialgebras ----------------------------------------------------------------------

def monoid_bialgebra(k: ExactField, table: Sequence[Sequence[int]], unit: int = 0) -> BialgebraBundle:
    """k[S] for a finite monoid S with Δ(s) = s⊗s and ε(s) = 1."""
    d = len(table)
    mult = _basis_mult(k, d, [[{table[i][j]: 1} for j in range(d)] for i in range(d)])
    comult = k.zeros(d * d, d)
    for s in range(d):
        comult[s * d + s, s] = 1
    counit = linmap(k, [[1] * d])
    return BialgebraBundle(k, d, mult, _column(k, d, {unit: 1}), LinMap(k, comult), counit)


def function_bialgebra(k: ExactField, table: Sequence[Sequence[int]], unit: int = 0) -> BialgebraBundle:
    """k^S, functions on a finite monoid S: pointwise product, Δ(δ_s) = Σ_{xy=s} δ_x⊗δ_y."""
    d = len(table)
    mult = _basis_mult(k, d, [[{i: 1} if i == j else {} for j in range(d)] for i in range(d)])
    comult = k.zeros(d * d, d)
    for x, y in itertools.product(range(d), repeat=2):
        comult[x * d + y, table[x][y]] = 1
    counit = k.zeros(1, d)
    counit[0, unit] = 1
    return BialgebraBundle(k, d, mult, _column(k, d, {s: 1 for s in range(d)}), LinMap(k, comult),
                           LinMap(k, counit))


def cyclic_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def monoid_tables(max_order: int = 3) -> list[list[list[int]]]:
    """Every monoid multiplication on {0..n-1} with unit 0, n ≤ max_order (not up to iso)."""
    out = []
    for n in range(1, max_order + 1):
        free = [(a, b) for a in range(1, n) for b in range(1, n)]
        for vals in itertools.product(range(n), repeat=len(free)):
            t = [[0] * n for _ in range(n)]
            for a in range(n):
                t[0][a] = t[a][0] = a
            for (a, b), v in zip(free, vals):
                t[a][b] = v
            if all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n)):
                out.append(t)
    return out


# -- algebras ------------------------------------------------------------------------

@dataclass(frozen=True)
class Algebra:
    dim: int
    mult: LinMap
    unit: LinMap


def truncated_polynomials(k: ExactField, n: int) -> Algebra:
    """k[x]/(x^n) with basis 1, x, ..., x^{n-1}."""
    table = [[{i + j: 1} if i + j < n else {} for j in range(n)] for i in range(n)]
    return Algebra(n, _basis_mult(k, n, table), _column(k, n, {0: 1}))


def product_algebra(k: ExactField, n: int) -> Algebra:
    """k^n with the idempotent basis."""
    table = [[{i: 1} if i == j else {} for j in range(n)] for i in range(n)]
    return Algebra(n, _basis_mult(k, n, table), _column(k, n, {i: 1 for i in range(n)}))


def monoid_algebra(k: ExactField, table: Sequence[Sequence[int]]) -> Algebra:
    B = monoid_bialgebra(k, table)
    return Algebra(B.dim, B.mult, B.unit)


def upper_triangular(k: ExactField) -> Algebra:
    """Upper triangular 2x2 matrices, basis e11, e12, e22 (not commutative)."""
    table = [[{} for _ in range(3)] for _ in range(3)]
    table[0][0] = {0: 1}
    table[0][1] = {1: 1}
    table[1][2] = {1: 1}
    table[2][2] = {2: 1}
    return Algebra(3, _basis_mult(k, 3, table), _column(k, 3, {0: 1, 2: 1}))


def small_algebras(k: ExactField) -> list[Algebra]:
    return [
        truncated_polynomials(k, 1),
        truncated_polynomials(k, 2),
        truncated_polynomials(k, 3),
        product_algebra(k, 2),
        product_algebra(k, 3),
        monoid_algebra(k, cyclic_table(2)),
        monoid_algebra(k, cyclic_table(3)),
        upper_triangular(k),
    ]


def algebra_endomorphisms(k: ExactField, alg: Algebra) -> list[LinMap]:
    """Every unital algebra endomorphism over a prime field.

    Columns of φ are assigned one at a time; a product rule e_i·e_j is checked
    as soon as φ is known on e_i, e_j and on the support of e_i·e_j.
    """
    d, p = alg.dim, k.p
    c = alg.mult.mat.reshape(d, d, d)  # e_i e_j = Σ_t c[t, i, j] e_t
    u = alg.unit.mat[:, 0]
    support = {(i, j): {t for t in range(d) if c[t, i, j] % p} for i in range(d) for j in range(d)}
    u_support = {t for t in range(d) if u[t] % p}
    columns = [np.array(v, dtype=np.int64) for v in itertools.product(range(p), repeat=d)]
    out: list[LinMap] = []
    phi = np.zeros((d, d), dtype=np.int64)

    def consistent(n: int) -> bool:
        known = set(range(n))
        if u_support <= known and u_support and max(u_support) == n - 1:
            if np.any((phi[:, :n] @ u[:n]) % p != u % p):
                return False
        for i in range(n):
            for j in range(n):
                if n - 1 not in (i, j, *support[(i, j)]) or not support[(i, j)] <= known:
                    continue
                lhs = (phi[:, :n] @ c[:n, i, j]) % p
                rhs = np.einsum("sab,a,b->s", c, phi[:, i], phi[:, j]) % p
                if not np.array_equal(lhs, rhs):
                    return False
        return True

    def extend(n: int) -> None:
        if n == d:
            out.append(LinMap(k, phi.copy()))
            return
        for col in columns:
            phi[:, n] = col
            if consistent(n + 1):
                extend(n + 1)
        phi[:, n] = 0

    extend(0)
    return out


def action_from_monoid_hom(B: BialgebraBundle, alg: Algebra, images: Sequence[LinMap]) -> ModuleAlgebra:
    """k[S] acting on A through algebra endomorphisms: basis element s acts as images[s]."""
    k, d = B.field, alg.dim
    act = k.zeros(d, B.dim * d)
    for s, phi in enumerate(images):
        act[:, s * d:(s + 1) * d] = phi.mat
    return ModuleAlgebra(d, alg.mult, alg.unit, LinMap(k, act))


def trivial_module_algebra(B: BialgebraBundle, alg: Algebra) -> ModuleAlgebra:
    """b▷a = ε(b)a."""
    return ModuleAlgebra(alg.dim, alg.mult, alg.unit, kron(B.counit, identity(B.field, alg.dim)))


def graded_comodule(B: BialgebraBundle, grades: Sequence[int]) -> Comodule:
    """For B = k[S]: q_i ↦ q_i⊗s_i."""
    k, n = B.field, len(grades)
    rho = k.zeros(n * B.dim, n)
    for i, s in enumerate(grades):
        rho[i * B.dim + s, i] = 1
    return Comodule(n, LinMap(k, rho))


# -- the sign-action instance ----------------------------------------------------------

def f3_instance() -> tuple[BialgebraBundle, ModuleAlgebra, LeftAModule, Comodule]:
    """B = F3[C2], A = F3[x]/(x²) with g▷1 = 1, g▷x = 2x, M = A regular, Q = B with ρ = Δ."""
    k = ExactField(3)
    B = monoid_bialgebra(k, cyclic_table(2))
    alg = truncated_polynomials(k, 2)
    sign = linmap(k, [[1, 0], [0, 2]])
    A = action_from_monoid_hom(B, alg, [identity(k, 2), sign])
    return B, A, regular_module(A), regular_comodule(B)


def f2_shift_instance() -> tuple[BialgebraBundle, ModuleAlgebra]:
    """B = F2[C2] acting on F2[x]/(x²) by g▷x = x+1: not a module algebra."""
    k = ExactField(2)
    B = monoid_bialgebra(k, cyclic_table(2))
    alg = truncated_polynomials(k, 2)
    shift = linmap(k, [[1, 1], [0, 1]])
    return B, action_from_monoid_hom(B, alg, [identity(k, 2), shift])


# -- random bundles --------------------------------------------------------------------

@dataclass(frozen=True)
class Bundle:
    B: BialgebraBundle
    A: ModuleAlgebra
    M: LeftAModule
    Q: Comodule
    description: str


def _random_invertible(k: ExactField, n: int, rng: random.Random) -> tuple[LinMap, LinMap]:
    while True:
        P = linmap(k, [[rng.randrange(k.p) for _ in range(n)] for _ in range(n)])
        try:
            return P, LinMap(k, k.inverse(P.mat))
        except ValueError:
            continue


def _change_basis(k, rng, B: BialgebraBundle, A: ModuleAlgebra, M: LeftAModule, Q: Comodule):
    PB, PBi = _random_invertible(k, B.dim, rng)
    PA, PAi = _random_invertible(k, A.dim, rng)
    PM, PMi = _random_invertible(k, M.dim, rng)
    PQ, PQi = _random_invertible(k, Q.dim, rng)
    B2 = BialgebraBundle(k, B.dim, transport(PB, PBi, B.mult, 2, 1), transport(PB, PBi, B.unit, 0, 1),
                         transport(PB, PBi, B.comult, 1, 2), transport(PB, PBi, B.counit, 1, 0))
    act = PAi @ A.act @ kron(PB, PA)
    A2 = ModuleAlgebra(A.dim, transport(PA, PAi, A.mult, 2, 1), transport(PA, PAi, A.unit, 0, 1), act)
    M2 = LeftAModule(M.dim, PMi @ M.act @ kron(PA, PM))
    Q2 = Comodule(Q.dim, kron(PQi, PBi) @ Q.coaction @ PQ)
    return B2, A2, M2, Q2


def _characters(k: ExactField, alg: Algebra) -> list[LinMap]:
    """Algebra maps A -> k, as 1 x d matrices."""
    d, p = alg.dim, k.p
    c = alg.mult.mat.reshape(d, d, d)
    out = []
    for vals in itertools.product(range(p), repeat=d):
        chi = np.array(vals, dtype=np.int64)
        if int(chi @ alg.unit.mat[:, 0]) % p != 1:
            continue
        lhs = np.einsum("k,kij->ij", chi, c) % p
        if np.array_equal(lhs, np.outer(chi, chi) % p):
            out.append(LinMap(k, chi.reshape(1, d)))
    return out


class BundleGenerator:
    """Random valid bundles with every dimension at most 3 over F2, F3, F5."""

    FIELDS = (2, 3, 5)

    def __init__(self, seed: int = 0):
        self.rng = random.Random(seed)
        self._endos: dict = {}
        self._monoids = monoid_tables(3)

    def _endomorphisms(self, k: ExactField, idx: int, alg: Algebra) -> list[LinMap]:
        key = (k.p, idx)
        if key not in self._endos:
            self._endos[key] = algebra_endomorphisms(k, alg)
        return self._endos[key]

    def _monoid_action(self, B, k, idx, alg, table) -> ModuleAlgebra:
        endos = self._endomorphisms(k, idx, alg)
        n = len(table)
        ident = identity(k, alg.dim)
        for _ in range(50):
            imgs = [ident] + [self.rng.choice(endos) for _ in range(n - 1)]
            if all(imgs[table[a][b]] == imgs[a] @ imgs[b] for a in range(n) for b in range(n)):
                return action_from_monoid_hom(B, alg, imgs)
        return trivial_module_algebra(B, alg)

    def _graded_action(self, B, k, alg, table) -> ModuleAlgebra | None:
        """For B = k^S: an S-grading of A with the idempotent δ_s projecting to degree s."""
        n, d = len(table), alg.dim
        c = alg.mult.mat.reshape(d, d, d)
        u = alg.unit.mat[:, 0]
        for _ in range(30):
            deg = [self.rng.randrange(n) for _ in range(d)]
            ok = all(deg[t] == table[deg[i]][deg[j]] for t, i, j in itertools.product(range(d), repeat=3)
                     if c[t, i, j] != 0)
            ok = ok and all(deg[t] == 0 for t in range(d) if u[t] != 0)
            if ok:
                act = k.zeros(d, n * d)
                for s in range(n):
                    for i in range(d):
                        if deg[i] == s:
                            act[i, s * d + i] = 1
                return ModuleAlgebra(d, alg.mult, alg.unit, LinMap(k, act))
        return None

    def _function_comodule(self, B, k, table) -> Comodule:
        """For B = k^S: a left S-set on a basis gives q ↦ Σ_s (s·q)⊗δ_s."""
        n = len(table)
        for _ in range(50):
            size = self.rng.randint(1, 3)
            images = [list(range(size))] + [[self.rng.randrange(size) for _ in range(size)] for _ in range(n - 1)]
            if all(images[table[a][b]][q] == images[a][images[b][q]]
                   for a in range(n) for b in range(n) for q in range(size)):
                rho = k.zeros(size * n, size)
                for q in range(size):
                    for s in range(n):
                        rho[images[s][q] * n + s, q] += 1
                return Comodule(size, LinMap(k, k.reduce(rho)))
        return trivial_comodule(B)

    def draw(self) -> Bundle:
        rng = self.rng
        k = ExactField(rng.choice(self.FIELDS))
        table = rng.choice(self._monoids)
        algs = small_algebras(k)
        idx = rng.randrange(len(algs))
        alg = algs[idx]
        functions = rng.random() < 0.3
        A = None
        if functions:
            B = function_bialgebra(k, table)
            A = self._graded_action(B, k, alg, table)
            Q = self._function_comodule(B, k, table)
            kind = "functions"
        if A is None:
            functions = False
            B = monoid_bialgebra(k, table)
            A = self._monoid_action(B, k, idx, alg, table)
            if rng.random() < 0.3 and B.dim <= 3:
                Q = regular_comodule(B)
            else:
                Q = graded_comodule(B, [rng.randrange(B.dim) for _ in range(rng.randint(1, 3))])
            kind = "monoid"
        if rng.random() < 0.5:
            M = regular_module(A)
        else:
            chars = _characters(k, alg)
            if chars:
                chi = rng.choice(chars)
                M = LeftAModule(1, chi)
            else:
                M = regular_module(A)
        desc = f"{k.name} {kind}(order {len(table)}) on algebra #{idx} dim {alg.dim}, M dim {M.dim}, Q dim {Q.dim}"
        if rng.random() < 0.7:
            B, A, M, Q = _change_basis(k, rng, B, A, M, Q)
            desc += ", basis changed"
        return Bundle(B, A, M, Q, desc)
