"""Exact representation theory of finite groups.

Modules: ``exactfield`` (Q, GF(p), Q(zeta_n)), ``linalg`` (exact matrices
and subspaces), ``group`` (Cayley tables), ``rep`` (representations and
characters), ``groupalgebra`` (convolution), ``decompose`` (Maschke
averaging, Schur tests, certified decomposition) and ``cli``.
"""

from __future__ import annotations

from .decompose import decompose, irreducibility_test, split_once
from .errors import ModularObstruction, ParseError, RepkitError
from .exactfield import GF, QQ, cyclotomic
from .group import FiniteGroup, cyclic, dihedral, symmetric, validate_group
from .linalg import Matrix, Subspace
from .rep import Representation, character, left_regular, right_regular

__version__ = "0.1.0"

__all__ = [
    "GF",
    "QQ",
    "FiniteGroup",
    "Matrix",
    "ModularObstruction",
    "ParseError",
    "Representation",
    "RepkitError",
    "Subspace",
    "character",
    "cyclic",
    "cyclotomic",
    "decompose",
    "dihedral",
    "irreducibility_test",
    "left_regular",
    "right_regular",
    "split_once",
    "symmetric",
    "validate_group",
]
