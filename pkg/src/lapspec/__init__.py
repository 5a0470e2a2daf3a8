"""Graph Laplacian spectra, eigenvector localisation, and bound verification."""

from .analysis import (
    BranchBehavior,
    BranchPath,
    DecayCertificate,
    branch_behavior,
    branching_paths,
    count_in_interval,
    localization_vertex,
    multiplicity,
    starlikeliness,
    verify_decay,
)
from .eigen import (
    ConvergenceError,
    GerschgorinDisk,
    Spectrum,
    eig_symmetric,
    gerschgorin_disks,
    lattice_spectrum_closed_form,
    path_spectrum_closed_form,
)
from .generators import (
    StarlikeSpec,
    cartesian_product,
    claw_chain,
    comet,
    counterexample_graph,
    lattice,
    path,
    prufer_decode,
    star,
    starlike,
)
from .graph import Graph, GraphError, build_graph, is_tree, laplacian, parse_edge_list, serialize_edge_list
from .sweep import enumerate_prufer_sweep
from .verify import (
    BoundCheck,
    PerturbationSetup,
    check_general_bounds,
    check_guo,
    check_starlike_bounds,
    lattice_multiplicity_4,
    perturbation_check,
    verify_counterexample,
    verify_eigenvalue4_structure,
)

__version__ = "0.1.0"
