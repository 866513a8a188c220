"""Lower-bound game trees, instance enumeration and upper-bound audits."""

from .audit import (
    AuditReport,
    KindResult,
    LoadClaimReport,
    Verdict,
    audit_instances,
    audit_load_claim,
    audit_upper_bound,
)
from .enumerate import EnumerationDomain, PatternFilter, enumerate_decreasing_instances, gen_i1, partitions
from .families import FAMILIES, theorem1_tree, theorem2_tree, theorem6_tree
from .trees import (
    AdversaryMove,
    AdversaryTree,
    AlgorithmMove,
    Leaf,
    Solution,
    build_tree,
    check_tree,
    iter_leaves,
    minimax_value,
    solve,
    tree_summary,
)
