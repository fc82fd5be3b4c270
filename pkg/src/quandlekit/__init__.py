"""Finite and smooth self-distributive structures, with a numerical verifier.

Finite side: operation tables, axiom classification, conjugation and union
constructions, exhaustive enumeration.  Smooth side: parametrized operation
families on matrices, the unit sphere, convex bodies and an algebra-plus-
plane union, plus the machinery to verify their axioms numerically, recover
brackets by differentiation, integrate flows, and test whether "x fixes y"
and "y fixes x" always agree.
"""

from .linalg import (
    ConvergenceError,
    as_matrix,
    commutator,
    conjugate_by_exp,
    eigh,
    expm,
    hermitize,
    is_hermitian,
    matrix_from_json,
    matrix_to_json,
    max_abs,
    random_complex,
    random_hermitian,
    require_hermitian,
    spectrum,
)
from .finite import (
    GroupTable,
    MagmaTable,
    StructureReport,
    UnionQuandleSpec,
    canonical_form,
    classify,
    conjugation_quandle,
    cyclic_group,
    dihedral_group,
    direct_product,
    enumerate_tables,
    inverse_operation,
    prenoether_holds,
    quaternion_group,
    relabel_table,
    symmetric_group,
    union_quandle,
)
from .realizations import (
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    REALIZATION_NAMES,
    Realization,
    UnionElement,
    bloch,
    bloch_embedding,
    bloch_generator,
    bloch_rotate,
    convex_flow,
    convex_spindle,
    corrupted_flow,
    fixed_spectrum,
    make_realization,
    matrix_general,
    matrix_hermitian,
    op_convex_flow,
    op_matrix_plain,
    op_matrix_skew,
    op_union,
    planar_rotation,
    union_lie,
)
from .verify import (
    AxiomReport,
    NoetherSummary,
    NoetherVerdict,
    Trajectory,
    integrate_flow,
    noether_check,
    noether_suite,
    numeric_bracket,
    sample_flow,
    verify_axioms,
    write_trajectory_csv,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "ConvergenceError",
    "GroupTable",
    "MagmaTable",
    "NoetherSummary",
    "NoetherVerdict",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "REALIZATION_NAMES",
    "Realization",
    "StructureReport",
    "Trajectory",
    "UnionElement",
    "UnionQuandleSpec",
    "as_matrix",
    "bloch",
    "bloch_embedding",
    "bloch_generator",
    "bloch_rotate",
    "canonical_form",
    "classify",
    "commutator",
    "conjugate_by_exp",
    "conjugation_quandle",
    "convex_flow",
    "convex_spindle",
    "corrupted_flow",
    "cyclic_group",
    "dihedral_group",
    "direct_product",
    "eigh",
    "enumerate_tables",
    "expm",
    "fixed_spectrum",
    "hermitize",
    "integrate_flow",
    "inverse_operation",
    "is_hermitian",
    "make_realization",
    "matrix_from_json",
    "matrix_general",
    "matrix_hermitian",
    "matrix_to_json",
    "max_abs",
    "noether_check",
    "noether_suite",
    "numeric_bracket",
    "op_convex_flow",
    "op_matrix_plain",
    "op_matrix_skew",
    "op_union",
    "planar_rotation",
    "prenoether_holds",
    "quaternion_group",
    "random_complex",
    "random_hermitian",
    "relabel_table",
    "require_hermitian",
    "sample_flow",
    "spectrum",
    "symmetric_group",
    "union_lie",
    "union_quandle",
    "verify_axioms",
    "write_trajectory_csv",
]
