"""Combinatorics of eventually periodic binary sequences.

The package is organized around a recursive pair invariant on finite binary
words (module `oscillation`) and the coloring it induces on the eventually
zero sequences (`coloring`).  `words` holds the word and sequence primitives,
`relations` the decidable relation catalog with structure profiling and
acyclicity certificates, `antichains` the exact code-family enumerations, and
`embed` the finite-depth color-preserving embedding construction.  `cli`
exposes everything as a command-line verification harness.
"""

from .words import (
    Point,
    alpha,
    alpha_index,
    b,
    b_inverse,
    classify,
    from_q,
    le_l,
    parse_point,
    parse_word,
    q_normalize,
    q_predecessor,
    q_word,
    render_word,
)
from .oscillation import (
    DefectError,
    SuffAssignment,
    SuffPreconditionError,
    exhaustive_check,
    invariant_i,
    osc,
    q_words_upto,
    suff_check,
)
from .coloring import (
    PI02,
    SIGMA02,
    GammaClass,
    color_c,
    cycle_witness,
    diagonally_complex_check,
    g_beta_bipartite_contains,
    g_beta_diagfree_contains,
    r_beta_contains,
    witness_pair,
)
from .relations import (
    AC_CATALOG,
    KPoint,
    RelationSpec,
    SpacePoint,
    acyclicity_check,
    diag_class,
    evaluate,
    kcell,
    parse_relation_spec,
    sp,
    standard_vertices,
    structural_profile,
)
from .antichains import (
    catalog_Ac,
    enum_A,
    enum_Cpi02,
    enum_P,
    enum_rank1,
    family_codes,
    graph_subbases,
    graph_subcatalog,
    instantiate,
)
from .embed import (
    EmbeddingScheme,
    HSpec,
    SearchExhausted,
    build_embedding,
    check_color_preservation,
    h_preset,
    verify_conditions,
)

__version__ = "0.1.0"
