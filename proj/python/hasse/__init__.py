"""Local-global arithmetic of diagonal forms and quaternion Brauer classes.

Thin re-export of the compiled module; exact rationals cross the boundary
as fractions.Fraction.
"""

from ._hasse import (
    census,
    conic_soluble,
    count_points,
    delta,
    density_product,
    everywhere_soluble,
    hilbert,
    hilbert_table,
    invariant_sum,
    local_density,
    local_density_sample,
    lr_local,
    lr_verify,
    ramification_locus,
    real_density,
    reduction_residue,
    residue_tame,
    schanuel,
    solve,
)

__all__ = [
    "census",
    "conic_soluble",
    "count_points",
    "delta",
    "density_product",
    "everywhere_soluble",
    "hilbert",
    "hilbert_table",
    "invariant_sum",
    "local_density",
    "local_density_sample",
    "lr_local",
    "lr_verify",
    "ramification_locus",
    "real_density",
    "reduction_residue",
    "residue_tame",
    "schanuel",
    "solve",
]
