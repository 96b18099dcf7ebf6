from core.cliques.cliques import (
    add_apex, apex_extend, bp3_reach, clique_counterexample, is_2ec_clique, is_signed_clique, up3_reach,
)

__all__ = [
    'add_apex', 'apex_extend', 'bp3_reach', 'clique_counterexample', 'is_2ec_clique',
    'is_signed_clique', 'up3_reach',
]
