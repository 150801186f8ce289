"""Fourth-order curvature flow laboratory (python bindings)."""

from ._curvlab import (  # noqa: F401
    classify,
    decompose,
    df_inner,
    family_names,
    flow_coefficient,
    functionals,
    gursky_bound,
    hamilton_sequence_check,
    integrate_flow,
    interpolation_ratio,
    kulkarni_nomizu,
    model,
    psmajor_sides,
    random_curvature,
    sphere_jet_curvature,
    symbol_eigenvalues,
    verify_first_variations,
    verify_identities,
)

__all__ = [
    "classify",
    "decompose",
    "df_inner",
    "family_names",
    "flow_coefficient",
    "functionals",
    "gursky_bound",
    "hamilton_sequence_check",
    "integrate_flow",
    "interpolation_ratio",
    "kulkarni_nomizu",
    "model",
    "psmajor_sides",
    "random_curvature",
    "sphere_jet_curvature",
    "symbol_eigenvalues",
    "verify_first_variations",
    "verify_identities",
]
