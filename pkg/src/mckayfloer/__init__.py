"""Exact McKay-correspondence calculator.

Given generators of a finite subgroup G of SL(n, C) with entries in a
cyclotomic field, enumerate G, grade its conjugacy classes by age, build the
Reeb-orbit catalog of the link S^(2n-1)/G with its Conley-Zehnder gradings,
and predict the Betti numbers of a crepant resolution of C^n/G.
"""

__version__ = "0.1.0"

from .cyclotomic import Cyclotomic, cyc_arith, cyc_conj, cyc_make, cyc_to_complex
from .groups import ConjClass, MatrixGroup, ValidationReport, close, conjugacy_classes, element_order, validate
from .spectrum import (
    ClassSpectrum,
    EigenSpectrum,
    IsotropyData,
    age,
    age_census,
    eigen_spectrum,
    isotropy,
)
from .czindex import IndexRecord, constant_orbit_bound, cz_morse_bott, cz_rotation_path, w_function
from .floer import (
    FSummand,
    GradedRankTable,
    MorseBottOrbit,
    e1_equivariant,
    e1_plain,
    gysin_solve,
    orbit_catalog,
    parity_degeneration,
    stack_f_summands,
)
from .filtration import (
    FilterValue,
    HamiltonianProfile,
    capped_quadratic_profile,
    f_primitive,
    filtration_value,
    verify_profile,
)
from .mckay import McKayReport, obstruction_flag, predict

__all__ = [
    "Cyclotomic", "cyc_arith", "cyc_conj", "cyc_make", "cyc_to_complex",
    "ConjClass", "MatrixGroup", "ValidationReport", "close", "conjugacy_classes", "element_order", "validate",
    "ClassSpectrum", "EigenSpectrum", "IsotropyData", "age", "age_census", "eigen_spectrum", "isotropy",
    "IndexRecord", "constant_orbit_bound", "cz_morse_bott", "cz_rotation_path", "w_function",
    "FSummand", "GradedRankTable", "MorseBottOrbit", "e1_equivariant", "e1_plain", "gysin_solve",
    "orbit_catalog", "parity_degeneration", "stack_f_summands",
    "FilterValue", "HamiltonianProfile", "capped_quadratic_profile", "f_primitive", "filtration_value",
    "verify_profile",
    "McKayReport", "obstruction_flag", "predict",
]
