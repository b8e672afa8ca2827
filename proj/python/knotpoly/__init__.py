from ._core import (
    InputError,
    InvariantError,
    PreconditionError,
    boundary_slopes,
    cable_apoly,
    collision_search,
    cont_frac,
    em_genus,
    em_sd,
    em_slope,
    ess_solutions,
    identify_torus,
    invert_sd,
    is_small_candidate,
    iterated_apoly,
    normalize,
    run_cli,
    torus_alexander,
    torus_apoly,
    torus_factors,
    width,
)

__all__ = [
    "InputError",
    "InvariantError",
    "PreconditionError",
    "boundary_slopes",
    "cable_apoly",
    "collision_search",
    "cont_frac",
    "em_genus",
    "em_sd",
    "em_slope",
    "ess_solutions",
    "identify_torus",
    "invert_sd",
    "is_small_candidate",
    "iterated_apoly",
    "normalize",
    "run_cli",
    "torus_alexander",
    "torus_apoly",
    "torus_factors",
    "width",
]
