"""Invariant subspaces, averaging, Schur-type decision procedures and certified decomposition.

Everything here is exact.  Statements that classically need the complex
numbers are realized over cyclotomic fields, with complex conjugation
replaced by the automorphism zeta -> zeta^-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import DegeneratePairingError, FieldError, ModularObstruction, NotInvariantError, RepkitError, SubgroupError
from .exactfield import (
    MAX_CONDUCTOR,
    CyclotomicField,
    FieldElement,
    RationalField,
    candidate_roots,
    conductor,
    cyclotomic,
    embedding,
    factor,
)
from .group import FiniteGroup, check_subgroup, cosets_and_action
from .linalg import Matrix, Subspace, block_diagonal, eigenspace, eval_poly_at_matrix, extend_to_basis, min_poly
from .rep import (
    Character,
    Representation,
    change_field,
    character,
    intertwiner_space,
    invariance_witness,
    is_isomorphic,
    restrict,
    restrict_to_subspace,
)

ABSOLUTELY_IRREDUCIBLE = "absolutely_irreducible"
IRREDUCIBLE_OVER_FIELD = "irreducible_over_field"
REDUCIBLE = "reducible"
MODULAR_INCONCLUSIVE = "modular_inconclusive"


def is_modular(rho: Representation) -> bool:
    """True when the characteristic divides |G|, i.e. |G| is zero in the field."""
    p = rho.field.characteristic
    return p > 0 and rho.group.order % p == 0


def require_averaging(rho: Representation) -> None:
    if is_modular(rho):
        p = rho.field.characteristic
        raise ModularObstruction(
            f"cannot average over {rho.group.name}: |G| = {rho.group.order} is a multiple of the "
            f"characteristic {p}, so the sum of |G| ones is 0 in {rho.field}"
        )


# ---------------------------------------------------------------------------
# invariant subspaces and averaging


def is_invariant(rho: Representation, L: Subspace) -> bool:
    return invariance_witness(rho, L) is None


def _require_invariant(rho: Representation, L: Subspace) -> None:
    w = invariance_witness(rho, L)
    if w is not None:
        raise NotInvariantError(f"subspace is not invariant under {rho.group.labels[w]}", w)


def coordinate_projection(L: Subspace) -> Matrix:
    """Projection onto L along the span of the standard vectors completing its basis."""
    F, d, k = L.field, L.ambient, L.dim
    C = extend_to_basis(L)
    D = Matrix.diagonal(F, [1] * k + [0] * (d - k))
    return C @ D @ C.inverse()


def _is_projection_onto(P: Matrix, L: Subspace) -> bool:
    if P.shape != (L.ambient, L.ambient) or P @ P != P:
        return False
    return P.image() == L


def average_projection(rho: Representation, L: Subspace, P0: Matrix | None = None) -> Matrix:
    """|G|^-1 * sum over x of rho_x P0 rho_x^-1: an equivariant projection onto L."""
    require_averaging(rho)
    _require_invariant(rho, L)
    if P0 is None:
        P0 = coordinate_projection(L)
    elif not _is_projection_onto(P0, L):
        raise RepkitError("starting matrix is not a projection onto the subspace")
    G, F = rho.group, rho.field
    total = Matrix.zeros(F, rho.degree, rho.degree)
    for x in range(G.order):
        total = total + rho.matrices[x] @ P0 @ rho.matrices[G.inv(x)]
    return total * FieldElement(F, F.inv(F.from_int(G.order)))


def invariant_complement(rho: Representation, L: Subspace) -> Subspace:
    return average_projection(rho, L).kernel()


def commutant(rho: Representation) -> list[Matrix]:
    return intertwiner_space(rho, rho)


# ---------------------------------------------------------------------------
# splitting


@dataclass(frozen=True)
class SplitOutcome:
    status: str  # "split" | "irreducible" | "needs_extension" | "inconclusive"
    subspace: Subspace | None = None
    conductor: int | None = None
    commutant_dim: int = 0
    operator: Matrix | None = None
    eigenvalue: FieldElement | None = None


def _center(G: FiniteGroup) -> list[int]:
    return [z for z in range(G.order) if all(G.mul(z, x) == G.mul(x, z) for x in range(G.order))]


def _operators(rho: Representation, basis: Sequence[Matrix]) -> Iterator[Matrix]:
    """Non-scalar commuting operators to try, most preferred first, without repeats."""
    F = rho.field
    d = rho.degree
    shift_ok = F.characteristic == 0 or d % F.characteristic != 0
    seen = set()
    for B in basis:
        if B.is_scalar():
            continue
        if shift_ok:
            c = B.trace() / F.from_int(d)
            A = B - Matrix.scalar(F, d, c)
            if A not in seen:
                seen.add(A)
                yield A
        if B not in seen:
            seen.add(B)
            yield B
    for z in _center(rho.group):
        M = rho.matrices[z]
        if not M.is_scalar() and M not in seen:
            seen.add(M)
            yield M


def _suggested_conductor(rho: Representation) -> int | None:
    F = rho.field
    if F.characteristic != 0:
        return None
    return math.lcm(conductor(F), rho.group.exponent)


def split_once(rho: Representation) -> SplitOutcome:
    """Find a proper invariant subspace as an eigenspace of a commuting operator.

    The commutant is computed; if it is one-dimensional the representation is
    irreducible.  Otherwise non-scalar commuting operators are tried in order
    (the first non-scalar commutant basis element shifted to trace zero
    comes first); each eigenvalue found by ``candidate_roots`` on the minimal
    polynomial gives an eigenspace, which is invariant because the operator
    commutes with every rho_x.

    When no eigenvalue is found, kernels of f(A) for irreducible factors f
    of the minimal polynomial are tried, then cyclic spans of eigenvectors
    of the rho_x (which catches isotypic pieces).
    """
    if rho.degree == 1:
        return SplitOutcome("irreducible", commutant_dim=1)
    modular = is_modular(rho)
    basis = commutant(rho)
    kdim = len(basis)
    if kdim == 1:
        return SplitOutcome("inconclusive" if modular else "irreducible", commutant_dim=1)
    d = rho.degree
    tried = []
    for A in _operators(rho, basis):
        m = min_poly(A)
        tried.append((A, m))
        for alpha in candidate_roots(m).roots:
            E = eigenspace(A, alpha)
            if 0 < E.dim < d:
                return SplitOutcome("split", E, commutant_dim=kdim, operator=A, eigenvalue=alpha)
    for A, m in tried:
        K = _factor_kernel(A, m)
        if K is not None:
            return SplitOutcome("split", K, commutant_dim=kdim, operator=A)
    W = cyclic_witness(rho) or _eigenvector_witness(rho)
    if W is not None:
        return SplitOutcome("split", W, commutant_dim=kdim)
    if modular:
        return SplitOutcome("inconclusive", commutant_dim=kdim)
    return SplitOutcome("needs_extension", conductor=_suggested_conductor(rho), commutant_dim=kdim)


def _factor_kernel(A: Matrix, m) -> Subspace | None:
    """ker f(A) for the first irreducible factor f of a non-irreducible minimal polynomial."""
    parts = factor(m)
    if len(parts) == 1 and parts[0][1] == 1:
        return None
    f = parts[0][0]
    K = eval_poly_at_matrix(f, A).kernel()
    return K if 0 < K.dim < A.rows else None


def cyclic_span(rho: Representation, v: Sequence) -> Subspace:
    """span{rho_x v : x in G}, always invariant."""
    return Subspace.span(rho.field, [M.apply(v) for M in rho.matrices], rho.degree)


def cyclic_witness(rho: Representation) -> Subspace | None:
    """A proper invariant cyclic span from a standard vector or the all-ones vector."""
    F, d = rho.field, rho.degree
    probes = [[F.one if i == j else F.zero for i in range(d)] for j in range(d)]
    probes.append([F.one] * d)
    for v in probes:
        W = cyclic_span(rho, v)
        if W.dim < d:
            return W
    return None


def _eigenvector_witness(rho: Representation) -> Subspace | None:
    d = rho.degree
    for M in rho.matrices:
        if M.is_scalar():
            continue
        for f, _ in factor(min_poly(M)):
            for v in eval_poly_at_matrix(f, M).kernel().vectors():
                W = cyclic_span(rho, v)
                if W.dim < d:
                    return W
    return None


@dataclass(frozen=True)
class IrreducibilityVerdict:
    status: str
    witness: Subspace | None = None
    commutant_dim: int | None = None

    def __bool__(self):
        return self.status in (ABSOLUTELY_IRREDUCIBLE, IRREDUCIBLE_OVER_FIELD)


def irreducibility_test(rho: Representation) -> IrreducibilityVerdict:
    if rho.degree == 1:
        return IrreducibilityVerdict(ABSOLUTELY_IRREDUCIBLE, commutant_dim=1)
    W = cyclic_witness(rho)
    if W is not None:
        return IrreducibilityVerdict(REDUCIBLE, W)
    outcome = split_once(rho)
    if outcome.status == "split":
        return IrreducibilityVerdict(REDUCIBLE, outcome.subspace, outcome.commutant_dim)
    if is_modular(rho):
        return IrreducibilityVerdict(MODULAR_INCONCLUSIVE, commutant_dim=outcome.commutant_dim)
    if outcome.status == "irreducible":
        return IrreducibilityVerdict(ABSOLUTELY_IRREDUCIBLE, commutant_dim=1)
    return IrreducibilityVerdict(IRREDUCIBLE_OVER_FIELD, commutant_dim=outcome.commutant_dim)


# ---------------------------------------------------------------------------
# full decomposition


@dataclass
class DecompositionResult:
    """S rho_x S^-1 = block_diagonal(blocks at x) for every x."""

    representation: Representation
    base_change: Matrix
    blocks: list[Representation]
    certificates: list[str]
    iso_groups: list[tuple[int, ...]]
    field_used: object
    commutant_dims: list[int] = field(default_factory=list)

    @property
    def block_degrees(self) -> list[int]:
        return [b.degree for b in self.blocks]

    @property
    def multiplicities(self) -> list[int]:
        return [len(g) for g in self.iso_groups]

    @property
    def basis(self) -> Matrix:
        """Columns: the new basis vectors, block by block (S^-1)."""
        return self.base_change.inverse()

    def block_matrix(self, x: int) -> Matrix:
        return block_diagonal([b.matrices[x] for b in self.blocks])

    def reassemble(self, x: int) -> Matrix:
        """S^-1 (block diagonal) S, which must equal rho_x."""
        return self.basis @ self.block_matrix(x) @ self.base_change

    def verify(self) -> bool:
        rho = self.representation
        S, Sinv = self.base_change, self.basis
        if sum(self.block_degrees) != rho.degree:
            return False
        for x in range(rho.group.order):
            if S @ rho.matrices[x] @ Sinv != self.block_matrix(x):
                return False
            if Sinv @ self.block_matrix(x) @ S != rho.matrices[x]:
                return False
        total = None
        for b in self.blocks:
            chi = character(b)
            total = chi if total is None else total + chi
        return total == character(rho)


class _Restart(Exception):
    def __init__(self, n: int):
        self.n = n


def _decompose_piece(sigma: Representation, allow_extension: bool) -> list[tuple[Matrix, Representation, str, int]]:
    F, d = sigma.field, sigma.degree
    if d == 1:
        return [(Matrix.identity(F, 1), sigma, ABSOLUTELY_IRREDUCIBLE, 1)]
    outcome = split_once(sigma)
    L = outcome.subspace
    if outcome.status == "irreducible":
        return [(Matrix.identity(F, d), sigma, ABSOLUTELY_IRREDUCIBLE, 1)]
    if L is None:
        target = outcome.conductor
        if allow_extension and target is not None and target != conductor(F):
            raise _Restart(target)
        return [(Matrix.identity(F, d), sigma, IRREDUCIBLE_OVER_FIELD, outcome.commutant_dim)]
    M = invariant_complement(sigma, L)
    out = []
    for W in (L, M):
        piece = restrict_to_subspace(sigma, W)
        for B, blk, tag, kd in _decompose_piece(piece, allow_extension):
            out.append((W.basis @ B, blk, tag, kd))
    return out


def _iso_groups(blocks: Sequence[Representation]) -> list[tuple[int, ...]]:
    groups: list[list[int]] = []
    for i, b in enumerate(blocks):
        for g in groups:
            if is_isomorphic(blocks[g[0]], b).status == "yes":
                g.append(i)
                break
        else:
            groups.append([i])
    return [tuple(g) for g in groups]


def decompose(rho: Representation, allow_extension: bool = False) -> DecompositionResult:
    """Split rho into irreducible blocks with an explicit change of basis.

    With ``allow_extension`` the computation restarts over Q(zeta_e), e the
    exponent of G (times the current conductor), as soon as some piece has
    no eigenvalue in the current field.
    """
    require_averaging(rho)
    try:
        pieces = _decompose_piece(rho, allow_extension)
    except _Restart as restart:
        target = cyclotomic(restart.n)
        return decompose(change_field(rho, "extend", target), allow_extension=False)
    # recursion order within each degree is kept
    pieces.sort(key=lambda piece: piece[1].degree)
    Q = pieces[0][0]
    for B, *_ in pieces[1:]:
        Q = Q.hstack(B)
    S = Q.inverse()
    if S is None:
        raise RepkitError("internal error: decomposition basis is singular")
    blocks = [blk for _, blk, _, _ in pieces]
    result = DecompositionResult(
        representation=rho,
        base_change=S,
        blocks=blocks,
        certificates=[tag for _, _, tag, _ in pieces],
        iso_groups=_iso_groups(blocks),
        field_used=rho.field,
        commutant_dims=[kd for *_, kd in pieces],
    )
    if not result.verify():
        raise RepkitError("internal error: decomposition certificate failed")
    return result


# ---------------------------------------------------------------------------
# invariant Hermitian forms


@dataclass(frozen=True)
class GramForm:
    """<v, w> = w^* H v, with ^* the conjugate transpose."""

    representation: Representation
    gram: Matrix
    minors_checked: bool

    def pair(self, v: Sequence, w: Sequence) -> FieldElement:
        F = self.gram.field
        Hv = self.gram.apply(v)
        return FieldElement(F, F.sum(F.mul(F.conj(b), a) for a, b in zip(Hv, w)))

    def is_hermitian(self) -> bool:
        return self.gram.conjugate_transpose() == self.gram

    def is_invariant(self) -> bool:
        H = self.gram
        return all(M.conjugate_transpose() @ H @ M == H for M in self.representation.matrices)


def leading_minors(H: Matrix) -> list[FieldElement]:
    return [H.submatrix(range(k), range(k)).det() for k in range(1, H.rows + 1)]


def invariant_hermitian_form(rho: Representation) -> GramForm:
    """H = sum over x of rho_x^* rho_x, starting from the standard form."""
    F = rho.field
    if F.characteristic != 0:
        raise FieldError(f"no Hermitian positivity over {F}")
    d = rho.degree
    H = Matrix.zeros(F, d, d)
    for M in rho.matrices:
        H = H + M.conjugate_transpose() @ M
    checked = False
    to_q = None
    if isinstance(F, RationalField):
        to_q = lambda a: a  # noqa: E731
    elif isinstance(F, CyclotomicField) and all(F.is_rational(a) for row in H.raw_rows() for a in row):
        to_q = lambda a: a[0]  # noqa: E731
    if to_q is not None:
        minors = [to_q(m.value) for m in leading_minors(H)]
        if any(m <= 0 for m in minors):
            raise RepkitError("averaged form failed the positivity check")
        checked = True
    return GramForm(rho, H, checked)


def orthogonal_complement(L: Subspace, H: GramForm) -> Subspace:
    """{v : <v, w> = 0 for all w in L}."""
    Lstar = L.basis.conjugate_transpose()
    if L.dim and (Lstar @ H.gram @ L.basis).det().is_zero():
        raise DegeneratePairingError("form is degenerate on the subspace")
    return (Lstar @ H.gram).kernel()


# ---------------------------------------------------------------------------
# spectral certificates


@dataclass(frozen=True)
class SpectralCertificate:
    element: int
    order: int
    field: CyclotomicField
    eigenpairs: list[tuple[FieldElement, Subspace]]
    character_value: FieldElement
    inverse_character_value: FieldElement

    @property
    def multiplicities(self) -> list[int]:
        return [E.dim for _, E in self.eigenpairs]

    @property
    def diagonalizable(self) -> bool:
        return sum(self.multiplicities) == self.eigenpairs[0][1].ambient if self.eigenpairs else False

    @property
    def roots_of_unity(self) -> bool:
        return all(a ** self.order == 1 for a, _ in self.eigenpairs)

    @property
    def trace_matches(self) -> bool:
        total = self.field(0)
        for a, E in self.eigenpairs:
            total = total + a * E.dim
        return total == self.character_value

    @property
    def algebraic_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.character_value.value)

    @property
    def inverse_is_conjugate(self) -> bool:
        return self.inverse_character_value == self.character_value.conjugate()

    def ok(self) -> bool:
        return (
            self.diagonalizable
            and self.roots_of_unity
            and self.trace_matches
            and self.algebraic_integer
            and self.inverse_is_conjugate
        )


def spectral_certificates(rho: Representation, x: int) -> SpectralCertificate:
    F = rho.field
    if not isinstance(F, (RationalField, CyclotomicField)):
        raise FieldError(f"spectral certificates need Q or a cyclotomic field, not {F}")
    G = rho.group
    m = G.element_orders[x]
    n = math.lcm(conductor(F), m)
    if n > MAX_CONDUCTOR:
        raise FieldError(f"conductor {n} exceeds the supported maximum {MAX_CONDUCTOR}")
    K = cyclotomic(n)
    emb = embedding(F, K)
    A = rho.matrices[x].map(emb, K)
    pairs = []
    for j in range(m):
        alpha = FieldElement(K, K.root_of_unity(j * (n // m)))
        E = eigenspace(A, alpha)
        if E.dim:
            pairs.append((alpha, E))
    chi = character(rho)
    return SpectralCertificate(
        element=x,
        order=m,
        field=K,
        eigenpairs=pairs,
        character_value=FieldElement(K, emb(chi.values[x])),
        inverse_character_value=FieldElement(K, emb(chi.values[G.inv(x)])),
    )


# ---------------------------------------------------------------------------
# abelian subgroups


@dataclass
class AbelianReport:
    bound: int
    transversal: tuple[int, ...]
    decomposition: DecompositionResult
    within_bound: list[bool]
    span_certified: list[bool | None]

    @property
    def ok(self) -> bool:
        return all(self.within_bound) and all(c is not False for c in self.span_certified)


def _common_eigenvector(block: Representation, A: Sequence[int]) -> tuple[list, Representation]:
    """A vector spanning a line invariant under the restriction to A (possibly after extension)."""
    res = decompose(restrict(block, A), allow_extension=True)
    if res.field_used != block.field:
        block = change_field(block, "extend", res.field_used)
    k = res.block_degrees[0]
    if k != 1:
        raise RepkitError("restriction to the abelian subgroup did not split into lines")
    return res.basis.raw_column(0), block


def abelian_structure(rho: Representation, A: Iterable[int]) -> AbelianReport:
    """Degree bound |G|/|A| for the irreducible blocks of rho, with coset-span certificates.

    For each absolutely irreducible block a common eigenvector v of the
    abelian subgroup is found, and span{block_y v : y in the transversal}
    is checked to be the whole block.
    """
    G = rho.group
    A = sorted(set(A))
    check_subgroup(G, A)
    if any(G.mul(a, b) != G.mul(b, a) for a in A for b in A):
        raise SubgroupError("subgroup is not abelian")
    transversal = cosets_and_action(G, A).transversal
    bound = G.order // len(A)
    result = decompose(rho, allow_extension=True)
    within, spans = [], []
    for blk, tag in zip(result.blocks, result.certificates):
        within.append(blk.degree <= bound)
        if tag != ABSOLUTELY_IRREDUCIBLE:
            spans.append(None)
            continue
        v, blk_ext = _common_eigenvector(blk, A)
        W = Subspace.span(blk_ext.field, [blk_ext.matrices[y].apply(v) for y in transversal], blk.degree)
        spans.append(W.dim == blk.degree)
    return AbelianReport(bound, transversal, result, within, spans)


def characters_of_blocks(result: DecompositionResult) -> list[Character]:
    return [character(b) for b in result.blocks]

