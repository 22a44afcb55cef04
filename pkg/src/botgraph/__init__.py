"""Mode-directed bottom-clause saturation and bipartite clause-graph datasets.

The pipeline: parse definite-clause data, background knowledge and mode
declarations; saturate each example into its depth-bounded most-specific
clause; compile that clause into a labelled bipartite graph; strip the head,
symmetrise, and vectorise the graph; export the result as a graph dataset or
a Boolean feature matrix.
"""

from .engine import DeriveResult, Engine, derive
from .errors import (
    BotgraphError,
    DatasetError,
    EngineError,
    LanguageError,
    ParseError,
    PositionError,
    ShapeError,
    SubsetError,
    UnknownPredicateError,
    VocabularyError,
)
from .graphs import (
    ClauseGraph,
    EMPTY_GRAPH,
    antecedent,
    bot_graph,
    bottom_clause_graph,
    cg_leq,
    clause_to_graph,
    explanation_subgraph,
    graph_to_clause,
    lits,
    terms_set,
    term_type,
    ugraph,
)
from .logic import (
    Compound,
    Constant,
    DefiniteClause,
    Literal,
    Program,
    Term,
    Variable,
    clause_equal,
    enumerate_places,
    mklist,
    render_clause,
    render_literal,
    render_term,
    term_at_place,
)
from .modes import (
    ConstantArg,
    InputArg,
    IOTerms,
    ModeDecl,
    OutputArg,
    StructuredArg,
    TypeSystem,
    declared_type_names,
    io_terms,
    matches,
    mode_type,
    render_mode,
)
from .parser import (
    parse_clause,
    parse_labels,
    parse_literal,
    parse_modes,
    parse_program,
    parse_term,
)
from .propositional import (
    BooleanFeatureMatrix,
    propositionalise_bcp,
    propositionalise_drm,
)
from .saturation import BottomClause, SaturationConfig, saturate
from .sequences import (
    INFINITE_DEPTH,
    enumerate_lambda_mu_sequences,
    in_mode_language,
    is_lambda_mu_sequence,
    sequence_violations,
    term_depth,
    term_depths,
)
from .dataset import (
    GraphDataset,
    build_dataset,
    export_json,
    export_tu,
    load_json,
    load_tu,
)
from .vectorise import VectorisedGraph, Vocabulary, gnn_graph, transform_graph, vectorise

__version__ = "0.1.0"
