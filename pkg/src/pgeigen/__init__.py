"""Exact eigenbasis of the weighted subspace-lattice adjacency operator over F_q."""

from .field import FieldSpec, field_create, field_for_q
from .qcomb import eigenvalue_poly, galois, qbinom, qbinom_row
from .scalars import CycloNum, PhiPoly
from .lattice import Subspace, enumerate_all, enumerate_subspaces, lattice
from .vectors import PosetVector
from .characters import Character, characters, project, x_of_chi
from .operators import apply_adjacency, apply_dual, inner, lambda_mu, theta
from .eigenbasis import IndexSeq, build_basis, build_vector, enumerate_indices
from .verify import (SuiteReport, suite_crosscheck, suite_eigen, suite_orthogonality,
                     suite_qpoly, suite_structure)

__version__ = "0.1.0"
