"""Generalized Petersen graphs, Kronecker covers, and their quotients."""

from .graphs import (
    Graph,
    GraphFormatError,
    bipartition,
    connected_components,
    decode_graph6,
    encode_graph6,
    girth,
    graph,
    to_dot,
)
from .families import (
    GpParams,
    LcfSpec,
    c_minus,
    c_plus,
    edge_classes,
    gp,
    h_graph,
    lcf,
    lcf_violations,
    moebius_ladder,
)
from .perms import (
    Perm,
    WordTriple,
    compose,
    desargues_half_turn,
    format_word,
    from_triple,
    identity,
    inverse,
    involution_profile,
    is_automorphism,
    normalize_word,
    power,
    reflection,
    rim_swap,
    rotation,
)
from .covers import (
    NotKroneckerInvolution,
    is_kronecker_involution,
    kronecker_cover,
    kronecker_involution_failure,
    natural_swap,
    quotient,
)
from .classify import (
    Arith,
    Case,
    Classification,
    Conditions,
    QuotientDesc,
    arith,
    classify,
    family_shifts,
    involution_family,
    necessary_conditions,
    q_value,
    quotient_lcf,
    symmetry_class,
    two_adic,
)
from .oracle import (
    SearchBoundExceeded,
    VertexPartition,
    automorphisms,
    canonical_form,
    is_isomorphic,
    kronecker_involutions,
    quotients_up_to_iso,
    refine,
    unit_partition,
)
from .census import CensusRow, VerifyReport, census, rows_to_csv, rows_to_json, verify

__version__ = "0.1.0"
