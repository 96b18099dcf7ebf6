from core.morphism.coloring import (
    Coloring, MergePlan, MergeStep, parse_coloring, read_coloring, serialize_coloring, write_coloring,
)
from core.morphism.identify import (
    apply_merge_plan, first_identifiable_pair, first_identifiable_pair_signed,
    identifiable_2ec, identifiable_signed, merge_2ec, merge_signed,
)
from core.morphism.quotient import (
    MONOCHROMATIC, SIGN_CONFLICT, Quotient, Violation, color_conflicts, quotient,
    verify_hom_2ec, verify_hom_signed,
)

__all__ = [
    'Coloring', 'MergePlan', 'MergeStep', 'parse_coloring', 'read_coloring', 'serialize_coloring',
    'write_coloring', 'apply_merge_plan', 'first_identifiable_pair', 'first_identifiable_pair_signed',
    'identifiable_2ec', 'identifiable_signed', 'merge_2ec', 'merge_signed',
    'MONOCHROMATIC', 'SIGN_CONFLICT', 'Quotient', 'Violation', 'color_conflicts', 'quotient',
    'verify_hom_2ec', 'verify_hom_signed',
]
