"""Exact SLOCC entanglement-family classification for few-qubit pure states.

The package classifies 2- and 3-qubit states into their SLOCC classes and
4-qubit states into inductive span families, one label per choice of
singled-out qubit, entirely in exact Gaussian-rational arithmetic.  The
headline operation, :func:`detect_overlap`, reports whether the four
partition choices assign the same family to a state; they need not.
"""

from .dirac import (
    StateExpr,
    bind_params,
    parse_scalar,
    parse_state,
    render_state,
    state_from_text,
)
from .errors import DiracParseError, EntfamError, InternalCheckError, StateError
from .forms import (
    INFINITE,
    BinaryForm,
    RootCount,
    distinct_root_count,
    exact_quotient,
    form_gcd,
    is_infinite,
    squarefree_part,
)
from .inductive import (
    ALL_PARTITIONS,
    DEMO_BINDINGS,
    DEMO_STATES,
    ClassificationReport,
    OrbitCheckReport,
    OverlapEvidence,
    PartitionOutcome,
    classify4,
    classify_all_partitions,
    classify_partition,
    detect_overlap,
    paper_demo,
    permutation_covariance_check,
    report_json,
    report_json_dict,
    slocc_invariance_check,
)
from .oracle import NumericInventory, numeric_inventory_oracle
from .pencil import (
    FamilyLabel,
    Pencil,
    PencilInventory,
    PointType,
    ProductFamily,
    SpanFamily,
    biseparable_locus,
    det_form,
    family_label,
    flattening_minor_forms,
    inventory,
    label_key,
    label_text,
    product_locus,
)
from .scalars import GaussianRational
from .slocc_classes import (
    Class2,
    Class3,
    cayley_hyperdet,
    classify2,
    classify3,
    hyperdeterminant,
)
from .states import (
    ExactMatrix,
    LocalOperator,
    PureState,
    QubitPartition,
    apply_local,
    coefficient_matrix,
    matrix_rank,
    permute_qubits,
    row_space_basis,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_PARTITIONS",
    "BinaryForm",
    "Class2",
    "Class3",
    "ClassificationReport",
    "DEMO_BINDINGS",
    "DEMO_STATES",
    "DiracParseError",
    "EntfamError",
    "ExactMatrix",
    "FamilyLabel",
    "GaussianRational",
    "INFINITE",
    "InternalCheckError",
    "LocalOperator",
    "NumericInventory",
    "OrbitCheckReport",
    "OverlapEvidence",
    "PartitionOutcome",
    "Pencil",
    "PencilInventory",
    "PointType",
    "ProductFamily",
    "PureState",
    "QubitPartition",
    "RootCount",
    "SpanFamily",
    "StateError",
    "StateExpr",
    "apply_local",
    "bind_params",
    "biseparable_locus",
    "cayley_hyperdet",
    "classify2",
    "classify3",
    "classify4",
    "classify_all_partitions",
    "classify_partition",
    "coefficient_matrix",
    "det_form",
    "detect_overlap",
    "distinct_root_count",
    "exact_quotient",
    "family_label",
    "flattening_minor_forms",
    "form_gcd",
    "hyperdeterminant",
    "inventory",
    "is_infinite",
    "label_key",
    "label_text",
    "matrix_rank",
    "numeric_inventory_oracle",
    "paper_demo",
    "parse_scalar",
    "parse_state",
    "permutation_covariance_check",
    "permute_qubits",
    "product_locus",
    "render_state",
    "report_json",
    "report_json_dict",
    "row_space_basis",
    "slocc_invariance_check",
    "squarefree_part",
    "state_from_text",
]
