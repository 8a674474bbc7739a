"""Weierstrass gaps and pure gaps at totally ramified places of Kummer curves y^m = f(x)."""

__version__ = "0.1.0"

from .curve import (  # noqa: E402
    INFTY,
    Divisor,
    KummerCurve,
    KummerError,
    Place,
    UParameter,
    genus,
    new_curve,
)
from .oracle import dim_L, is_gap, is_pure_gap, restriction_profile  # noqa: E402

__all__ = [
    "INFTY",
    "Divisor",
    "KummerCurve",
    "KummerError",
    "Place",
    "UParameter",
    "dim_L",
    "genus",
    "is_gap",
    "is_pure_gap",
    "new_curve",
    "restriction_profile",
]
