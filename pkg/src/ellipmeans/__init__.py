"""Toader mean, complete elliptic integrals, and sharp mean bounds."""

from ._backend import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"
__all__ = ["KERNEL_BACKEND", "__version__"]
