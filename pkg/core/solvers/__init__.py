from core.solvers.achromatic import (
    PARAMS, ParamResult, chi2, chi_s, compute, psi2, psi_max_class, psi_max_graph,
    psi_max_signed_graph, psi_min_class, psi_min_graph, psi_min_signed_graph, psi_ordinary, psis,
    verify_complete_2ec, verify_complete_signed,
)
from core.solvers.partitions import PartitionSearch

__all__ = [
    'PARAMS', 'ParamResult', 'chi2', 'chi_s', 'compute', 'psi2', 'psi_max_class', 'psi_max_graph',
    'psi_max_signed_graph', 'psi_min_class', 'psi_min_graph', 'psi_min_signed_graph',
    'psi_ordinary', 'psis', 'verify_complete_2ec', 'verify_complete_signed', 'PartitionSearch',
]
