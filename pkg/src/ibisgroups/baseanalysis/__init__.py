from .search import (
    IbisVerdict,
    IrrSequence,
    Rejection,
    SearchCaps,
    Spectrum,
    closure_elements,
    extend_to_irredundant_base,
    irredundant_spectrum,
    is_ibis,
    is_irredundant,
    minimal_base_size,
    naive_spectrum,
    socle_irredundant_lower_bound,
    verify_witness_not_base,
)

__all__ = [
    "IbisVerdict", "IrrSequence", "Rejection", "SearchCaps", "Spectrum", "closure_elements",
    "extend_to_irredundant_base", "irredundant_spectrum", "is_ibis",
    "is_irredundant", "minimal_base_size", "naive_spectrum",
    "socle_irredundant_lower_bound", "verify_witness_not_base",
]
