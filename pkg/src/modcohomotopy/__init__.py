"""Modular cohomotopy groups of finite complexes.

Computes pi^n(X; G) for G = Z/p^r or Z_(p) up to extension, with splitting
verdicts, on top of exact integer linear algebra, simplicial Steenrod
operations, and a symbolic space catalog.
"""

from .abelian import (FinAbGroup, GroupHom, LocalModule, PresentedGroup,
                      Subgroup, hom_kernel_cokernel, tensor_and_tor)
from .matrices import IntMatrix, SmithDecomposition, smith_normal_form

__all__ = [
    "FinAbGroup",
    "GroupHom",
    "IntMatrix",
    "LocalModule",
    "PresentedGroup",
    "SmithDecomposition",
    "Subgroup",
    "hom_kernel_cokernel",
    "smith_normal_form",
    "tensor_and_tor",
]
