"""Labeled-graph subgraph isomorphism toolkit.

Three interchangeable containment engines (a baseline vertex-at-a-time
matcher, a neighborhood-filtering ordered matcher, and a path-at-a-time
matcher over disjoint path covers), a brute-force oracle for ground truth,
transaction-format dataset IO, a synthetic graph generator, and a benchmark
harness with a CLI.
"""

from .bench import (
    ENGINE_NAMES,
    BenchConfig,
    BenchReport,
    BenchRow,
    emit_report,
    linear_r2,
    run_benchmark,
)
from .dataset import (
    DEFAULT_EDGE_LABEL,
    GraphDataset,
    QuerySet,
    dataset_equal,
    read_dataset,
    read_query_set,
    write_dataset,
    write_query_set,
)
from .errors import (
    ConfigError,
    CoverIncomplete,
    Disconnected,
    DuplicateEdge,
    EngineDisagreement,
    GraphError,
    IncompleteMapping,
    IndexOutOfRange,
    InfeasibleParameters,
    InfeasibleQuerySize,
    MaxLTooLarge,
    ParseError,
    SearchTimeout,
    SelfLoop,
    SubisoError,
    TooLargeForOracle,
    ValidationError,
)
from .fast_on import fast_on_candidates, fast_on_match, order_vertices
from .fast_p import (
    MaxLChoice,
    PathCandidate,
    choose_maxL,
    fast_p_candidates,
    fast_p_match,
    graph_path_index,
    query_cover,
)
from .generate import (
    dataset_name,
    extract_queries,
    generate_dataset,
    parse_dataset_name,
)
from .graph import (
    LabeledGraph,
    LabelTable,
    Mapping,
    build_graph,
    identity_mapping,
    verify_mapping,
)
from .neighborhood import (
    DistinctNeighborhoodTable,
    InclusionMatrix,
    build_index,
    compute_neighborhood,
    multiset_includes,
    neighborhood_table,
)
from .oracle import oracle_dedupe_redundant, oracle_enumerate
from .outcome import MatchOutcome, SearchStats
from .paths import (
    DEFAULT_MAXL_CAP,
    CanonicalPath,
    PathCover,
    canonical_code,
    classify_iso,
    connectivity_after_removal,
    cover,
    density_rule_holds,
    enumerate_paths,
    order_cover,
    path_code,
)
from .ullman import ullman_candidates, ullman_match

__version__ = "0.1.0"
