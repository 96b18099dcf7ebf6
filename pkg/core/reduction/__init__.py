from core.reduction.three_partition import (
    PartitionSolution, ReductionParams, ThreePartitionInstance, brute_force_3partition,
    default_params, k_of, normalize_instance, parse_instance, parse_params_override,
    read_instance, serialize_instance, write_instance,
)
from core.reduction.gadgets import (
    GadgetLayout, apex_reduction, build_H, build_H_prime, check_diamond_free, find_diamond,
    witness_coloring,
)

__all__ = [
    'PartitionSolution', 'ReductionParams', 'ThreePartitionInstance', 'brute_force_3partition',
    'default_params', 'k_of', 'normalize_instance', 'parse_instance', 'parse_params_override',
    'read_instance', 'serialize_instance', 'write_instance',
    'GadgetLayout', 'apex_reduction', 'build_H', 'build_H_prime', 'check_diamond_free',
    'find_diamond', 'witness_coloring',
]
