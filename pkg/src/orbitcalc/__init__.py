"""Partition calculus for nilpotent orbits of the classical Lie algebras."""

from .arthur import (
    ArthurPartitionData,
    bitorsor_bound,
    check_criterion,
    check_expansion_form,
    check_prop58,
    constructed_member_partition,
    constructed_union,
    enumerate_parameters,
    gl_wavefront,
    parse_parameter,
    split_IJ,
    sufficient_condition_class,
)
from .classical import (
    GroupType,
    OracleTieError,
    TypeMismatchError,
    collapse,
    collapse_oracle,
    dim_group,
    enumerate_type_partitions,
    expansion,
    expansion_oracle,
    is_special,
    is_type,
    spaltenstein_dual,
)
from .dimensions import dim_orbit, verify_lemma41, verify_prop42
from .duality import achar_identity_check, eta, eta_alt
from .partitions import (
    Partition,
    PartitionError,
    SizeMismatchError,
    dominance_leq,
    parse_partition,
    transpose,
)
from .verification import run_identity, search_counterexamples

__version__ = "0.1.0"
