#!/usr/bin/env python3
"""Wedges, ends, coends, ends with parameters and the Fubini isomorphism."""
from .wedges import (
    Cowedge,
    Wedge,
    as_leg,
    check_cowedge,
    check_wedge,
    cone_to_wedge,
    parallel_pair,
    product_elements,
    value_sizes,
    wedge_to_cone,
)
from .compute import EndResult, compute_end, decode_family, decode_function, nat_set, oracle_end, oracle_nat_set
from .coends import CoendResult, compute_coend, count_cowedges_into_two, oracle_coend_size
from .fubini import FubiniWitness, ParameterEnd, fubini_check, parameter_functor, transpose

__all__ = [
    "Cowedge", "Wedge", "as_leg", "check_cowedge", "check_wedge", "cone_to_wedge",
    "parallel_pair", "product_elements", "value_sizes", "wedge_to_cone",
    "EndResult", "compute_end", "decode_family", "decode_function", "nat_set", "oracle_end",
    "oracle_nat_set", "CoendResult", "compute_coend", "count_cowedges_into_two",
    "oracle_coend_size", "FubiniWitness", "ParameterEnd", "fubini_check",
    "parameter_functor", "transpose",
]
