"""Canonical form, invariants and classification of three-qubit pure states."""

from .canonical import (
    CanonicalForm,
    ErasingDirection,
    canonical_candidates,
    canonical_form,
    erasing_states,
    reconstruct,
)
from .classify import Classification, classify, classify_state, verify_type_identities
from .decompositions import (
    ProductBiseparableForm,
    Set2Form,
    TwoProductDecomposition,
    product_plus_biseparable,
    set2_form,
    two_product,
)
from .exceptions import (
    DegenerateInput,
    InvalidCanonicalForm,
    NotDecomposable,
    NotNormalized,
    NotUnitary,
    ThreeQubitError,
)
from .invariants import (
    InvariantSet,
    hyperdeterminant,
    invariants,
    invariants_direct,
    invariants_from_canonical,
    invariants_J,
)
from .states import (
    ThreeQubitState,
    apply_local,
    basis_state,
    fidelity,
    from_amplitudes,
    ghz,
    haar_random,
    overlap,
    pencil,
    permute_parties,
    reduced_density,
    reduced_density_ab,
    w_state,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "Classification",
    "DegenerateInput",
    "ErasingDirection",
    "InvalidCanonicalForm",
    "InvariantSet",
    "NotDecomposable",
    "NotNormalized",
    "NotUnitary",
    "ProductBiseparableForm",
    "Set2Form",
    "ThreeQubitError",
    "ThreeQubitState",
    "TwoProductDecomposition",
    "apply_local",
    "basis_state",
    "canonical_candidates",
    "canonical_form",
    "classify",
    "classify_state",
    "erasing_states",
    "fidelity",
    "from_amplitudes",
    "ghz",
    "haar_random",
    "hyperdeterminant",
    "invariants",
    "invariants_J",
    "invariants_direct",
    "invariants_from_canonical",
    "overlap",
    "pencil",
    "permute_parties",
    "product_plus_biseparable",
    "reconstruct",
    "reduced_density",
    "reduced_density_ab",
    "set2_form",
    "two_product",
    "verify_type_identities",
    "w_state",
]
