"""Effective linear circle actions: invariant generators, orbit-type
stratification, and recovery of the weights from the abstract diagram."""

from .action import INFINITE, ActionSpec, canonicalize, gcd_label, isotropy_order
from .errors import (
    CircleActionError,
    CountMismatch,
    DistinguishedStratum,
    EmptyAction,
    IndexOutOfRange,
    LengthMismatch,
    MalformedDiagram,
    NegativeMultiplicity,
    NoDistinguishedStratum,
    NotCoprime,
    NotEffective,
    NotInvariant,
    ParityError,
    UnknownStratum,
)
from .invariants import (
    PART_ABS2,
    PART_IM,
    PART_RE,
    ExponentVector,
    InvariantGenerator,
    abs2_exponent,
    circle_weight,
    decompose,
    hilbert_basis,
    is_invariant_exponent,
    realize_generators,
)
from .numeric import (
    check_axes_image,
    check_homogeneity,
    check_invariance,
    check_m2_membership,
    check_membership,
    check_separation,
    evaluate_hilbert_map,
    rotate,
    run_property_suite,
    same_orbit,
)
from .recovery import infer_dimensions, recover_weights, roundtrip
from .stratification import (
    DISTINGUISHED_ID,
    FaceClass,
    StratificationDiagram,
    Stratum,
    depth,
    face_table,
    hasse_edges,
    orbit_strata,
)

__version__ = "0.1.0"
