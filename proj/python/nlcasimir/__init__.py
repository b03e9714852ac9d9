"""Casimir pressure between spatially dispersive metallic mirrors."""

from ._nlcasimir import (
    ConfigError,
    DomainError,
    Error,
    Material,
    ModelError,
    casimir_pressure,
    ev_to_rad_per_s,
    imaginary_axis,
    lindhard_fl,
    nonlocal_correction_curve,
    perfect_mirror_pressure,
    run_cli,
    separation_from_dimensionless,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "Error",
    "Material",
    "ModelError",
    "casimir_pressure",
    "ev_to_rad_per_s",
    "imaginary_axis",
    "lindhard_fl",
    "nonlocal_correction_curve",
    "perfect_mirror_pressure",
    "run_cli",
    "separation_from_dimensionless",
]
