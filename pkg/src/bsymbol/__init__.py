"""Exact toolkit for linear codes over small finite fields in the b-symbol metric."""

from .bmetric import (
    BWeightEnumerator,
    CodeMatrix,
    b_distance,
    b_weight,
    b_weight_enumerator,
    is_faithful,
    min_b_distance,
    read_vector,
)
from .bounds import (
    BoundReport,
    GriesmerDecomposition,
    bound_report,
    counting_max_n,
    exact_n22,
    griesmer,
    griesmer_b_alt,
    griesmer_b_lower,
    lower_bound_n22,
    period,
    periodic_split,
    point_count,
    sigma_epsilon,
    singleton_max_d,
)
from .gf import (
    FieldSpec,
    GFMatrix,
    GFVector,
    enumerate_hyperplanes,
    enumerate_points,
    make_field,
    mat,
    rref,
    subspace_dim,
    vec,
)

__all__ = [name for name in dir() if not name.startswith("_")]
