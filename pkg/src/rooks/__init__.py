"""Exact combinatorics of rook monoids, symplectic Renner monoids, and the
Bruhat-Chevalley-Renner order."""

from .counting import (
    CountReport,
    admissible_count,
    bell,
    borel_sp_rank_count,
    rank_count_rook,
    stirling2,
    triangular_census,
)
from .folding import PartialMatrix, fold, preimage_count, unfold_preimages
from .nilpotent import NilpotentReport, nilpotent_analysis
from .order import (
    HasseDiagram,
    StandardForm,
    bcr_le,
    bcr_le_ppr,
    build_poset,
    ehresmann_le,
    standard_form,
)
from .partitions import (
    SetPartition,
    embed_nilpotent,
    parse_partition,
    partition_standard_string,
    partition_to_rook,
    rook_to_partition,
)
from .rook import (
    Rook,
    TriangularParts,
    diagonal_idempotent,
    format_one_line,
    is_nilpotent_rook,
    msp_membership,
    multiply,
    parse_one_line,
    rank,
    triangular_decompose,
)
from .symplectic import (
    FamilySpec,
    ResourceLimitError,
    cross_section_lattice,
    enum_admissible,
    enum_family,
    is_admissible,
    is_symplectic_rook,
)
from .weyl import (
    GroupContext,
    ParabolicData,
    coxeter_length,
    group_context,
    min_coset_reps,
    parabolic_data,
    symplectic_generators,
    theta_perm,
)

__version__ = "0.1.0"
