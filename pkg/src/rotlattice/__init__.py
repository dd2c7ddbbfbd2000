"""Exact lattice-point counting for 3D bodies of rotation with flat poles."""

from rotlattice.rotation_body import (
    FlatPole,
    RotationBody,
    Sphere,
    Spheroid,
    Superball,
    eval_f,
    slice_capacity,
)

__version__ = "0.1.0"

__all__ = [
    "FlatPole",
    "RotationBody",
    "Sphere",
    "Spheroid",
    "Superball",
    "eval_f",
    "slice_capacity",
    "__version__",
]
