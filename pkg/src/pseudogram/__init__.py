"""Rank-3 weighted pseudocircle arrangements.

Validation and oriented-matroid data (covectors, chirotopes, bases, cell
complexes) for arrangements of weighted pseudocircles on the 2-sphere, plus
a discrete straightening pipeline that carries any valid spanning symmetric
arrangement to a Parseval frame.
"""

from .arrangement import (
    Arrangement,
    InvalidArrangementError,
    ValidityReport,
    WeightedPseudocircle,
    act_rotation,
    aim_eval,
    aim_vector,
    arrangement_dist,
    is_spanning,
    proj_subset,
    validate,
    weighted_frechet,
)
from .cells import CellComplex, build_complex, cell_of
from .chart import ChartPseudoline
from .frames import (
    Frame,
    antipodal_warp,
    circles_from_frame,
    coord_frame,
    frame_from_circles,
    orthonormalize_path,
    parseval_check,
    procrustes_gap,
    spd_inv_sqrt,
    stiefel_dist,
)
from .generators import GenSpec, gen, non_pappus
from .om import (
    Chirotope,
    CovectorSet,
    check_chirotope_axioms,
    check_covector_axioms,
    chirotope,
    covectors,
    om_consistency,
    rank_bases,
)
from .render import RenderSpec, render
from .sphere import Arc, ChartBasis, ChartPoint, DegeneracyError, arc_intersect, edge_side, orient, to_chart, from_chart
from .straighten import (
    DeformationTrace,
    InterpMap,
    StageState,
    basis_normalize,
    chord_redraw,
    greedy_pipeline,
    h_pivot_cell,
    h_projective_pivot,
    interp_pl,
    pick_basis,
    surrogate_radius,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "Arc",
    "ChartBasis",
    "ChartPoint",
    "ChartPseudoline",
    "CellComplex",
    "Chirotope",
    "CovectorSet",
    "DeformationTrace",
    "DegeneracyError",
    "Frame",
    "GenSpec",
    "InterpMap",
    "InvalidArrangementError",
    "RenderSpec",
    "StageState",
    "ValidityReport",
    "WeightedPseudocircle",
    "act_rotation",
    "aim_eval",
    "aim_vector",
    "antipodal_warp",
    "arc_intersect",
    "arrangement_dist",
    "basis_normalize",
    "build_complex",
    "cell_of",
    "check_chirotope_axioms",
    "check_covector_axioms",
    "chirotope",
    "chord_redraw",
    "circles_from_frame",
    "coord_frame",
    "covectors",
    "edge_side",
    "frame_from_circles",
    "from_chart",
    "gen",
    "greedy_pipeline",
    "h_pivot_cell",
    "h_projective_pivot",
    "interp_pl",
    "is_spanning",
    "non_pappus",
    "om_consistency",
    "orient",
    "orthonormalize_path",
    "parseval_check",
    "pick_basis",
    "procrustes_gap",
    "proj_subset",
    "rank_bases",
    "render",
    "spd_inv_sqrt",
    "stiefel_dist",
    "surrogate_radius",
    "to_chart",
    "validate",
    "weighted_frechet",
]
