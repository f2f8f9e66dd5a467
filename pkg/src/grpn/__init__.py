"""Exact combinatorics behind the simple-module labels of cyclotomic Hecke
algebras of type G(r,p,n) at roots of unity."""

from .afunction import a_value_component, a_value_r, beta_sets
from .classify import SimpleLabel, classify, count_check, triangularity_metadata
from .clifford import (
    OrbitDatum,
    SemisimpleLabel,
    VarpiAction,
    apply_varpi,
    orbit,
    semisimple_labels,
    tableau_orbits,
    varpi,
)
from .combinat import (
    DEFAULT_TABLEAU_CAP,
    Multipartition,
    Partition,
    StandardTableau,
    enumerate_multipartitions,
    enumerate_partitions,
    enumerate_standard_tableaux,
    syt_count,
)
from .errors import (
    ComponentMismatch,
    EnumerationCapExceeded,
    GrpnError,
    InvalidParameters,
)
from .flotw import Node, enumerate_flotw, enumerate_lambda1, is_flotw, residue
from .kleshchev import (
    addable_removable_profile,
    enumerate_kleshchev,
    enumerate_lambda0,
    good_node,
)
from .params import (
    ChargeData,
    ParameterSpec,
    RootOfUnity,
    build_parameters,
    build_Q,
    charge_data,
    morita_split,
)

__version__ = "0.1.0"

__all__ = [
    "ChargeData",
    "ComponentMismatch",
    "DEFAULT_TABLEAU_CAP",
    "EnumerationCapExceeded",
    "GrpnError",
    "InvalidParameters",
    "Multipartition",
    "Node",
    "OrbitDatum",
    "ParameterSpec",
    "Partition",
    "RootOfUnity",
    "SemisimpleLabel",
    "SimpleLabel",
    "StandardTableau",
    "VarpiAction",
    "a_value_component",
    "a_value_r",
    "addable_removable_profile",
    "apply_varpi",
    "beta_sets",
    "build_Q",
    "build_parameters",
    "charge_data",
    "classify",
    "count_check",
    "enumerate_flotw",
    "enumerate_kleshchev",
    "enumerate_lambda0",
    "enumerate_lambda1",
    "enumerate_multipartitions",
    "enumerate_partitions",
    "enumerate_standard_tableaux",
    "good_node",
    "is_flotw",
    "morita_split",
    "orbit",
    "residue",
    "semisimple_labels",
    "syt_count",
    "tableau_orbits",
    "triangularity_metadata",
    "varpi",
]
