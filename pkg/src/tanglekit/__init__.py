"""Tangles, ultrafilters and profiles over symmetric submodular set functions.

The toolkit models a finite ground set with a symmetric submodular order
function, enumerates the consistent orientation structures the axioms allow
(tangles, ultrafilters, profiles and their variants), verifies the
translation theorems connecting them, computes exact branch-width, and
hunts seeded random corpora for counterexamples to two open questions.
"""

from .connectivity import (
    ConnectivitySystem,
    SYSTEM_KINDS,
    VerificationReport,
    build_system,
    evaluate,
    explicit_system,
    graph_boundary_system,
    graph_cut_system,
    hyperedge_system,
    min_cardinality_system,
    system_descriptor,
    verify_axioms,
)
from .corpus import (
    BUILTIN_SYSTEMS,
    builtin_system,
    random_hyperedge_system,
    standard_corpus,
)
from .duality import (
    BranchDecomposition,
    DualityReport,
    EquivalenceVerdict,
    branch_width,
    dual_family,
    verify_branchwidth_duality,
    verify_theorem,
)
from .exceptions import (
    FilterBaseError,
    FunctionAxiomError,
    GroundSetLimitError,
    SchemaError,
    SearchBudgetError,
    ToolkitError,
)
from .io import load_document, load_family, load_system, save, to_document
from .search import (
    HUNT_BUDGET,
    HUNT_FOUND,
    HUNT_NONE_FOUND,
    STATUS_BUDGET,
    STATUS_COMPLETE,
    Counterexample,
    HuntCorpus,
    HuntVerdict,
    NamedCorpus,
    SearchBudget,
    SearchResult,
    enumerate_all,
    find_one,
    generate_random_system,
    hunt,
)
from .separations import (
    Separation,
    SeparationFamily,
    efficient_masks,
    enumerate_k_efficient,
    leq,
    lt,
    make_separation,
    reverse,
)
from .structures import (
    ORIENTATION_KINDS,
    AxiomId,
    AxiomResult,
    StructureKind,
    StructureReport,
    axiom_ids,
    check_axiom,
    check_filter_base_generates,
    check_structure,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "axiom_ids",
    "AxiomId",
    "AxiomResult",
    "branch_width",
    "BranchDecomposition",
    "build_system",
    "builtin_system",
    "BUILTIN_SYSTEMS",
    "check_axiom",
    "check_filter_base_generates",
    "check_structure",
    "ConnectivitySystem",
    "Counterexample",
    "dual_family",
    "DualityReport",
    "efficient_masks",
    "enumerate_all",
    "enumerate_k_efficient",
    "EquivalenceVerdict",
    "evaluate",
    "explicit_system",
    "FilterBaseError",
    "find_one",
    "FunctionAxiomError",
    "generate_random_system",
    "graph_boundary_system",
    "graph_cut_system",
    "GroundSetLimitError",
    "hunt",
    "HUNT_BUDGET",
    "HUNT_FOUND",
    "HUNT_NONE_FOUND",
    "HuntCorpus",
    "HuntVerdict",
    "hyperedge_system",
    "leq",
    "load_document",
    "load_family",
    "load_system",
    "lt",
    "make_separation",
    "min_cardinality_system",
    "NamedCorpus",
    "ORIENTATION_KINDS",
    "random_hyperedge_system",
    "reverse",
    "save",
    "SchemaError",
    "SearchBudget",
    "SearchBudgetError",
    "SearchResult",
    "Separation",
    "SeparationFamily",
    "standard_corpus",
    "STATUS_BUDGET",
    "STATUS_COMPLETE",
    "StructureKind",
    "StructureReport",
    "system_descriptor",
    "SYSTEM_KINDS",
    "to_document",
    "ToolkitError",
    "VerificationReport",
    "verify_axioms",
    "verify_branchwidth_duality",
    "verify_theorem",
]
