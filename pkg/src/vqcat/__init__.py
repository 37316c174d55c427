"""Finite quantale-enriched categories: orders, presheaves, tensors, duality."""

from .quantale import BUILTIN_NAMES, Quantale, builtin, powerset_monoid, validate_quantale
from .vcat import (
    VCategory,
    discrete,
    is_separated,
    opposite,
    quantale_as_vcategory,
    separated_reflection,
    separation_witness,
    tensor_vcat,
    terminal_category,
    underlying_order,
    unit_category,
    validate_vcategory,
)
from .dist import (
    Distributor,
    VFunctor,
    compose_dist,
    compose_functors,
    functor_hom,
    graph,
    identity_dist,
    identity_functor,
    is_adjoint_functors,
    is_adjoint_pair,
    right_extension,
    right_lifting,
    validate_distributor,
    validate_functor,
)
from .presheaf import (
    Presheaf,
    PresheafCategory,
    cauchy_completion,
    enumerate_presheaves,
    inverter,
    presheaf_hom,
    yoneda,
)
from .cocomplete import (
    CocompleteWitness,
    check_cocomplete,
    is_cocontinuous,
    join_obj,
    left_kan,
    right_adjoint,
    sup_of,
    tensor_obj,
    weighted_colimit,
)
from .tensorprod import (
    TensorProduct,
    build_tensor_product,
    check_universal_property,
    extend_bimorphism,
    galois_iso,
    is_bimorphism,
    is_g_ideal,
    reflector_q,
    star_autonomy_check,
    vsup_category,
)
from .ccd import (
    TotallyBelowWitness,
    ccd_closure_check,
    ccd_reflector,
    check_main_theorem,
    dual_object,
    is_ccd,
    is_nuclear,
    totally_below,
)
from .errors import (
    NoSuchColimit,
    NotCCD,
    NotCocomplete,
    NotCocompleteInput,
    NotSeparated,
    ParseError,
    QuantaleError,
    SizeExceeded,
    VqError,
)

__version__ = "0.1.0"
