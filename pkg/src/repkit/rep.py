"""Representations of finite groups by matrices over exact fields."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import FieldError, NotInvariantError, RepresentationError
from .exactfield import (
    QQ,
    CyclotomicField,
    Field,
    FieldElement,
    PrimeField,
    RationalField,
    embedding,
)
from .group import FiniteGroup, GroupAction, cosets_and_action, permutation_sign
from .linalg import Matrix, Subspace, block_diagonal, extend_to_basis, solve


class Representation:
    """One d x d matrix per group element, indexed like the group's elements."""

    def __init__(self, group: FiniteGroup, field: Field, matrices: Sequence[Matrix], *, check: bool = True):
        self.group = group
        self.field = field
        self.matrices = tuple(matrices)
        if check:
            _check_rep(group, field, self.matrices)
        self.degree = self.matrices[0].rows

    def __getitem__(self, x: int) -> Matrix:
        return self.matrices[x]

    def __repr__(self):
        return f"Representation({self.group.name}, {self.field}, degree={self.degree})"

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return self.group == other.group and self.field == other.field and self.matrices == other.matrices

    def __hash__(self):
        return hash((self.group, self.field, self.matrices))

    def character(self) -> "Character":
        return character(self)

    def inverse_matrix(self, x: int) -> Matrix:
        return self.matrices[self.group.inv(x)]


def _check_rep(G: FiniteGroup, F: Field, mats: tuple[Matrix, ...]) -> None:
    if len(mats) != G.order:
        raise RepresentationError(f"expected {G.order} matrices, got {len(mats)}")
    d = mats[0].rows
    if d < 1:
        raise RepresentationError("degree must be positive")
    for x, M in enumerate(mats):
        if not isinstance(M, Matrix) or M.shape != (d, d):
            raise RepresentationError(f"matrix for {G.labels[x]} is not {d}x{d}", (x,))
        if M.field != F:
            raise RepresentationError(f"matrix for {G.labels[x]} is over {M.field}, expected {F}", (x,))
    if not mats[G.identity].is_identity():
        raise RepresentationError("identity element is not sent to the identity matrix", (G.identity,))
    for x in range(G.order):
        for y in range(G.order):
            if mats[G.mul(x, y)] != mats[x] @ mats[y]:
                raise RepresentationError(
                    f"rho({G.labels[x]}*{G.labels[y]}) != rho({G.labels[x]}) rho({G.labels[y]})", (x, y)
                )


def validate_rep(group: FiniteGroup, field: Field, matrices: Sequence[Matrix]) -> Representation:
    return Representation(group, field, matrices)


# ---------------------------------------------------------------------------
# characters


@dataclass(frozen=True, eq=False)
class Character:
    group: FiniteGroup
    field: Field
    values: tuple

    def __getitem__(self, x: int) -> FieldElement:
        return FieldElement(self.field, self.values[x])

    def __iter__(self) -> Iterator[FieldElement]:
        return (FieldElement(self.field, v) for v in self.values)

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.group == other.group and self.field == other.field and self.values == other.values

    def __hash__(self):
        return hash((self.group, self.field, self.values))

    def _same(self, other: "Character"):
        if self.group != other.group or self.field != other.field:
            raise FieldError("characters of different groups or fields")

    def __add__(self, other: "Character") -> "Character":
        self._same(other)
        F = self.field
        return Character(self.group, F, tuple(F.add(a, b) for a, b in zip(self.values, other.values)))

    def __mul__(self, other: "Character") -> "Character":
        self._same(other)
        F = self.field
        return Character(self.group, F, tuple(F.mul(a, b) for a, b in zip(self.values, other.values)))

    def conjugate(self) -> "Character":
        return Character(self.group, self.field, tuple(self.field.conj(v) for v in self.values))

    def is_class_function(self) -> bool:
        G = self.group
        return all(len({self.values[x] for x in cls}) == 1 for cls in G.conjugacy_classes)

    def by_class(self) -> list[FieldElement]:
        """One value per conjugacy class, in class order."""
        return [FieldElement(self.field, self.values[cls[0]]) for cls in self.group.conjugacy_classes]

    def values_in_subfield(self, sub: Field) -> bool:
        """Necessary condition for realizability over ``sub``: every value lies in it."""
        F = self.field
        if sub == F:
            return True
        if isinstance(F, CyclotomicField) and isinstance(sub, (RationalField, CyclotomicField)):
            m = 1 if isinstance(sub, RationalField) else sub.n
            if F.n % m:
                return False
            fixing = [k for k in range(1, F.n + 1) if k % m == 1 % m and _coprime(k, F.n)]
            return all(F.galois(v, k) == v for v in self.values for k in fixing)
        raise FieldError(f"{sub} is not a subfield of {F} handled here")

    def to_json(self) -> list:
        return [self.field.format(v) for v in self.values]


def _coprime(a: int, b: int) -> bool:
    return math.gcd(a, b) == 1


def character(rho: Representation) -> Character:
    return Character(rho.group, rho.field, tuple(M.trace().value for M in rho.matrices))


# ---------------------------------------------------------------------------
# constructions


def trivial_rep(G: FiniteGroup, F: Field, degree: int = 1) -> Representation:
    eye = Matrix.identity(F, degree)
    return Representation(G, F, [eye] * G.order, check=False)


def permutation_rep(action: GroupAction, F: Field) -> Representation:
    """delta_a -> delta_{x . a}: column a holds a 1 in row x . a."""
    n = action.size
    mats = []
    for p in action.perms:
        data = [[F.zero] * n for _ in range(n)]
        for a in range(n):
            data[p[a]][a] = F.one
        mats.append(Matrix._raw(F, data, n, n))
    return Representation(action.group, F, mats, check=False)


def left_regular(G: FiniteGroup, F: Field) -> Representation:
    perms = tuple(tuple(G.mul(x, a) for a in range(G.order)) for x in range(G.order))
    return permutation_rep(GroupAction(G, G.order, perms), F)


def right_regular(G: FiniteGroup, F: Field) -> Representation:
    """pi_x(a) = a x^-1."""
    perms = tuple(tuple(G.mul(a, G.inv(x)) for a in range(G.order)) for x in range(G.order))
    return permutation_rep(GroupAction(G, G.order, perms), F)


def coset_rep(G: FiniteGroup, H: Iterable[int], F: Field) -> Representation:
    return permutation_rep(cosets_and_action(G, H).action, F)


def natural_action(G: FiniteGroup) -> GroupAction:
    """Action of a permutation group on its points."""
    if G.permutations is None:
        raise RepresentationError(f"{G.name} does not carry permutations")
    return GroupAction(G, len(G.permutations[0]), G.permutations)


def sign_rep(G: FiniteGroup, F: Field) -> Representation:
    if G.permutations is None:
        raise RepresentationError(f"{G.name} does not carry permutations")
    mats = [Matrix.scalar(F, 1, permutation_sign(p)) for p in G.permutations]
    return Representation(G, F, mats, check=False)


def standard_reps(kind: str, G: FiniteGroup, F: Field, action: GroupAction | None = None) -> Representation:
    if kind == "trivial":
        return trivial_rep(G, F)
    if kind == "left_regular":
        return left_regular(G, F)
    if kind == "right_regular":
        return right_regular(G, F)
    if kind == "permutation":
        if action is None:
            raise RepresentationError("permutation representation needs an action")
        return permutation_rep(action, F)
    raise ValueError(f"unknown representation kind {kind!r}")


def _same_setting(rho: Representation, sigma: Representation) -> None:
    if rho.group != sigma.group:
        raise RepresentationError("representations of different groups")
    if rho.field != sigma.field:
        raise RepresentationError(f"representations over {rho.field} and {sigma.field}")


def direct_sum(rho: Representation, sigma: Representation) -> Representation:
    _same_setting(rho, sigma)
    mats = [block_diagonal([a, b]) for a, b in zip(rho.matrices, sigma.matrices)]
    return Representation(rho.group, rho.field, mats, check=False)


def tensor_product(rho: Representation, sigma: Representation) -> Representation:
    _same_setting(rho, sigma)
    mats = [a.kron(b) for a, b in zip(rho.matrices, sigma.matrices)]
    return Representation(rho.group, rho.field, mats, check=False)


def dual_rep(rho: Representation) -> Representation:
    G = rho.group
    mats = [rho.matrices[G.inv(x)].transpose() for x in range(G.order)]
    return Representation(G, rho.field, mats, check=False)


def conjugate_by(rho: Representation, S: Matrix) -> Representation:
    """x -> S rho_x S^-1."""
    Sinv = S.inverse()
    if Sinv is None:
        raise RepresentationError("change of basis must be invertible")
    return Representation(rho.group, rho.field, [S @ M @ Sinv for M in rho.matrices], check=False)


def restrict(rho: Representation, H: Iterable[int]) -> Representation:
    """Restriction to a subgroup, re-indexed by ``sorted(H)``."""
    elems = sorted(set(H))
    sub = rho.group.subgroup(elems)
    return Representation(sub, rho.field, [rho.matrices[x] for x in elems], check=False)


def invariance_witness(rho: Representation, L: Subspace) -> int | None:
    """First element x (in index order) with rho_x(L) not inside L."""
    if L.dim == 0:
        return None
    vecs = L.vectors()
    for x, M in enumerate(rho.matrices):
        images = [M.apply(v) for v in vecs]
        if any(c is None for c in solve(L.basis, images)):
            return x
    return None


def restrict_to_subspace(rho: Representation, L: Subspace) -> Representation:
    """The representation on an invariant subspace, in the coordinates of L's basis."""
    k = L.dim
    C = extend_to_basis(L)
    left = C.inverse().submatrix(range(k), range(C.rows))
    mats = [left @ M @ L.basis for M in rho.matrices]
    return Representation(rho.group, rho.field, mats, check=False)


class SplitRep(NamedTuple):
    sub: Representation
    quot: Representation
    base_change: Matrix


def split_along_invariant(rho: Representation, L: Subspace) -> SplitRep:
    """Sub- and quotient representation for an invariant subspace.

    ``base_change`` S satisfies: S rho_x S^-1 = [[sub_x, *], [0, quot_x]].
    """
    if not 0 < L.dim < rho.degree:
        raise RepresentationError("invariant subspace must be proper and nonzero")
    w = invariance_witness(rho, L)
    if w is not None:
        raise NotInvariantError(f"subspace is not invariant under {rho.group.labels[w]}", w)
    k, d = L.dim, rho.degree
    C = extend_to_basis(L)
    S = C.inverse()
    conj = [S @ M @ C for M in rho.matrices]
    sub = [M.submatrix(range(k), range(k)) for M in conj]
    quot = [M.submatrix(range(k, d), range(k, d)) for M in conj]
    G, F = rho.group, rho.field
    return SplitRep(Representation(G, F, sub, check=False), Representation(G, F, quot, check=False), S)


# ---------------------------------------------------------------------------
# intertwiners and isomorphism


def intertwiner_space(rho: Representation, sigma: Representation) -> list[Matrix]:
    """Basis of {A : sigma_x A = A rho_x for all x}; A maps rho's space to sigma's."""
    _same_setting(rho, sigma)
    F = rho.field
    dr, ds = rho.degree, sigma.degree
    nvar = ds * dr
    rows = []
    for g in rho.group.generators:
        R, S = rho.matrices[g], sigma.matrices[g]
        for i in range(ds):
            for j in range(dr):
                eq = [F.zero] * nvar
                for k in range(ds):
                    s = S.raw(i, k)
                    if not F.is_zero(s):
                        eq[k * dr + j] = F.add(eq[k * dr + j], s)
                for k in range(dr):
                    r = R.raw(k, j)
                    if not F.is_zero(r):
                        eq[i * dr + k] = F.sub(eq[i * dr + k], r)
                if any(not F.is_zero(c) for c in eq):
                    rows.append(eq)
    if not rows:
        rows = [[F.zero] * nvar]
    kernel = Matrix._raw(F, rows, len(rows), nvar).kernel()
    return [Matrix._raw(F, [v[i * dr:(i + 1) * dr] for i in range(ds)], ds, dr) for v in kernel.vectors()]


@dataclass(frozen=True)
class IsoVerdict:
    status: str  # "yes" | "no" | "inconclusive"
    intertwiner: Matrix | None = None
    reason: str = ""

    def __bool__(self):
        return self.status == "yes"


def _weight_vectors(k: int, side: int) -> Iterator[tuple[int, ...]]:
    """Nonzero vectors in {0..side-1}^k, by increasing coordinate sum."""

    def parts(total: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            if total < side:
                yield (total,)
            return
        for first in range(min(total, side - 1), -1, -1):
            for rest in parts(total - first, slots - 1):
                yield (first,) + rest

    for total in range(1, k * (side - 1) + 1):
        yield from parts(total, k)


SEARCH_LIMIT = 200_000


def is_isomorphic(rho: Representation, sigma: Representation, limit: int = SEARCH_LIMIT) -> IsoVerdict:
    """Decide isomorphism by searching the intertwiner space for an invertible element.

    det(sum c_i B_i) is a polynomial of degree <= d in the c_i, so if it is not
    identically zero it is nonzero somewhere on the grid {0..d}^k.  Over
    GF(p) with p <= d the whole space is enumerated when small enough.
    """
    _same_setting(rho, sigma)
    if rho.degree != sigma.degree:
        return IsoVerdict("no", reason="degrees differ")
    if character(rho) != character(sigma):
        return IsoVerdict("no", reason="characters differ")
    basis = intertwiner_space(rho, sigma)
    if not basis:
        return IsoVerdict("no", reason="no nonzero intertwiner")
    F = rho.field
    d, k = rho.degree, len(basis)
    if isinstance(F, PrimeField) and F.p <= d:
        side = F.p
        complete = side**k - 1 <= limit
    else:
        side = d + 1
        complete = side**k - 1 <= limit
    for tried, coeffs in enumerate(_weight_vectors(k, side)):
        if tried >= limit:
            break
        A = None
        for c, B in zip(coeffs, basis):
            if c:
                term = B * c
                A = term if A is None else A + term
        if not A.det().is_zero():
            return IsoVerdict("yes", A, "invertible intertwiner found")
    if complete:
        return IsoVerdict("no", reason="every intertwiner is singular")
    return IsoVerdict("inconclusive", reason="search space exhausted without certificate")


# ---------------------------------------------------------------------------
# change of field


def multiplication_matrix(F: CyclotomicField, a) -> list[list]:
    """Rational matrix of b -> a b in the power basis of Q(zeta_n)."""
    phi = F.degree
    cols = [F.mul(a, F.root_of_unity(i)) for i in range(phi)]
    return [[cols[j][i] for j in range(phi)] for i in range(phi)]


def change_field(rho: Representation, mode: str, target: Field | None = None, p: int | None = None) -> Representation:
    """``mode`` is ``extend`` (needs ``target``), ``restrict_scalars`` or ``reduce_mod`` (needs ``p``)."""
    F = rho.field
    G = rho.group
    if mode == "extend":
        if target is None:
            raise ValueError("extend needs a target field")
        if isinstance(target, PrimeField) and target != F:
            raise FieldError("use reduce_mod to pass to a prime field")
        emb = embedding(F, target)
        return Representation(G, target, [M.map(emb, target) for M in rho.matrices], check=False)
    if mode == "restrict_scalars":
        if not isinstance(F, CyclotomicField):
            raise FieldError("restriction of scalars needs a cyclotomic source field")
        phi, d = F.degree, rho.degree
        mats = []
        for M in rho.matrices:
            data = [[QQ.zero] * (d * phi) for _ in range(d * phi)]
            for r in range(d):
                for c in range(d):
                    block = multiplication_matrix(F, M.raw(r, c))
                    for i in range(phi):
                        for j in range(phi):
                            data[r * phi + i][c * phi + j] = block[i][j]
            mats.append(Matrix._raw(QQ, data, d * phi, d * phi))
        return Representation(G, QQ, mats, check=False)
    if mode == "reduce_mod":
        if p is None:
            raise ValueError("reduce_mod needs a prime")
        if not isinstance(F, RationalField):
            raise FieldError("reduction mod p is only supported from the rationals")
        target = PrimeField(p)
        for x, M in enumerate(rho.matrices):
            for row in M.raw_rows():
                for a in row:
                    if a.denominator % p == 0:
                        raise FieldError(f"entry {a} of rho({G.labels[x]}) has a denominator divisible by {p}")
        return Representation(G, target, [M.map(target.from_fraction, target) for M in rho.matrices])
    raise ValueError(f"unknown field change mode {mode!r}")

