from core.sgraph.graph import (
    Balance, CycleWitness, Graph2EC, PathWitness, Sign, SwitchingSet, VertexId,
)
from core.sgraph.switching import (
    SignedClass, UnsignedGraph, apply_switching, bp3_mask, canonical_signature,
    cycle_balance, is_equivalent, rc_classes, resign_at, switching_between,
    twin_pairs, twins_2ec, twins_signed, uc4_antipodal, up3_between, up3_mask,
)
from core.sgraph.formats import parse_graph, read_graph, serialize_graph, write_graph

__all__ = [
    'Balance', 'CycleWitness', 'Graph2EC', 'PathWitness', 'Sign', 'SwitchingSet', 'VertexId',
    'SignedClass', 'UnsignedGraph', 'apply_switching', 'bp3_mask', 'canonical_signature',
    'cycle_balance', 'is_equivalent', 'rc_classes', 'resign_at', 'switching_between',
    'twin_pairs', 'twins_2ec', 'twins_signed', 'uc4_antipodal', 'up3_between', 'up3_mask',
    'parse_graph', 'read_graph', 'serialize_graph', 'write_graph',
]
