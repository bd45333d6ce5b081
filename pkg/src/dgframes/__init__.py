"""Coherent diagrams of integer chain complexes and their cofibrant resolutions.

The package implements, with exact integer arithmetic throughout:

* bounded finitely generated free chain complexes, graded maps, cones,
  cylinders, shifts, mapping complexes and homology (``complexes``),
* the combinatorics of order maps, the direct category of sequences, and the
  path/cell coalgebras with their differentials and comultiplications
  (``simplicial``),
* coherent simplices of chain complexes — a twisting cochain per simplex —
  with a Maurer-Cartan validator, reindexing action and generators
  (``dg_nerve``),
* the resolution B(alpha): a twisted sum over the subset lattice which is
  Reedy cofibrant, homotopical and compatible with reindexing, together with
  last-vertex retraction data, an integer splitting solver for acyclic
  cofibrations, edge recovery from cylinders and coherence-extension checks
  (``frames``),
* Smith normal form and integer linear solvers (``exact_linalg``), and a
  deterministic JSON command line (``cli``).
"""

from .complexes import (
    ChainComplex,
    GradedMap,
    HomologySummary,
    cone,
    cylinder,
    hom_complex,
    hom_differential,
    homology,
    is_acyclic,
    is_nullhomotopic,
    is_weak_equivalence,
    random_chain_map,
    random_complex,
    random_graded_map,
    shift,
    zero_complex,
)
from .dg_nerve import (
    NerveSimplex,
    act,
    coherence_defect,
    eval_cochain,
    make_perturbed_2simplex,
    make_strict,
    random_simplex,
    validate_maurer_cartan,
)
from .exact_linalg import IntMatrix, invariant_factors, kernel_basis, snf, solve
from .frames import (
    FrameDiagram,
    FrameObject,
    build_frame_diagram,
    build_frame_object,
    check_simplicial_compat,
    include_last,
    homotopy,
    is_homotopical,
    is_reedy_cofibrant,
    last_vertex_data,
    latching_data,
    latching_map,
    recover_map_from_cylinder,
    retraction,
    split_acyclic_cofibration,
    structure_map,
    verify_mc_extension,
)
from .reporting import CheckItem, Report
from .simplicial import (
    DMorphism,
    FormalChain,
    OrderMap,
    cell_comult,
    cell_diff,
    enumerate_d_objects,
    enumerate_order_maps,
    is_weak_equivalence_d,
    path_comult,
    path_diff,
    reindex_cell,
)

__all__ = [
    "ChainComplex",
    "CheckItem",
    "DMorphism",
    "FormalChain",
    "FrameDiagram",
    "FrameObject",
    "GradedMap",
    "HomologySummary",
    "IntMatrix",
    "NerveSimplex",
    "OrderMap",
    "Report",
    "act",
    "build_frame_diagram",
    "build_frame_object",
    "cell_comult",
    "cell_diff",
    "check_simplicial_compat",
    "coherence_defect",
    "cone",
    "cylinder",
    "enumerate_d_objects",
    "enumerate_order_maps",
    "eval_cochain",
    "hom_complex",
    "hom_differential",
    "homology",
    "homotopy",
    "include_last",
    "invariant_factors",
    "is_acyclic",
    "is_homotopical",
    "is_nullhomotopic",
    "is_reedy_cofibrant",
    "is_weak_equivalence",
    "is_weak_equivalence_d",
    "kernel_basis",
    "last_vertex_data",
    "latching_data",
    "latching_map",
    "make_perturbed_2simplex",
    "make_strict",
    "path_comult",
    "path_diff",
    "random_chain_map",
    "random_complex",
    "random_graded_map",
    "random_simplex",
    "recover_map_from_cylinder",
    "reindex_cell",
    "retraction",
    "shift",
    "snf",
    "solve",
    "split_acyclic_cofibration",
    "structure_map",
    "validate_maurer_cartan",
    "verify_mc_extension",
    "zero_complex",
]

__version__ = "0.1.0"
