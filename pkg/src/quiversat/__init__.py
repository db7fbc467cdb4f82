"""Exact Schofield subdimension vectors, King cones and determinantal semi-invariants of quivers."""
from .cone import ConeDecision, ConeDescription, cone_description, in_cone, sigma_to_A
from .quiver import (
    CyclicQuiverError,
    DimensionMismatchError,
    InconsistencyError,
    Quiver,
    QuiverError,
    QuiverParseError,
    euler_form,
    l1_apply,
    l1_inverse,
    l2_apply,
    multiplicity_matrix,
    parse_quiver,
    path_matrix,
    restrict_support,
    reverse,
    topological_order,
)
from .schofield import HullData, SchofieldSession, hull_data, hull_sample_check
from .semiinvariant import (
    DeltaSystem,
    GroupElement,
    Representation,
    Witness,
    WitnessFailure,
    act,
    delta_system,
    generic_nonvanishing,
    random_representation,
    saturation_witness,
    semi_invariance_check,
    weight_check,
)

__version__ = "0.1.0"
