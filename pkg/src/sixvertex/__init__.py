"""Exact computer algebra for the t = -1 boson / six-vertex model.

Submodules:

* :mod:`sixvertex.algebra` sparse multivariate polynomials over the rationals
* :mod:`sixvertex.combinatorics` partitions, occupations and interlacing
* :mod:`sixvertex.symfunc` Schur and Schur-Q polynomials, Cauchy identity
* :mod:`sixvertex.lattice` L-operators, row operators and determinant formulas
* :mod:`sixvertex.asm` alternating sign matrices and domain-wall configurations
* :mod:`sixvertex.cli` the ``sixvertex`` command
"""

__version__ = "0.1.0"

from .algebra import (
    DivisionNotExact,
    PolyMatrix,
    Polynomial,
    VarTable,
    det_bareiss,
    exact_div,
    format_polynomial,
    parse_polynomial,
)
from .combinatorics import OccupationVector, Partition, StrictPartition
from .symfunc import SchurContext, cauchy_sides, schur_bialternant, schur_combinatorial, schur_q

__all__ = [
    "DivisionNotExact",
    "OccupationVector",
    "Partition",
    "PolyMatrix",
    "Polynomial",
    "SchurContext",
    "StrictPartition",
    "VarTable",
    "cauchy_sides",
    "det_bareiss",
    "exact_div",
    "format_polynomial",
    "parse_polynomial",
    "schur_bialternant",
    "schur_combinatorial",
    "schur_q",
]
