"""Spectral distance bounds for quasi-twisted codes over finite fields."""

from __future__ import annotations

from .field_arith import GF, RootSystem, build_root_system, field_of_order, make_field, root_system
from .poly_algebra import Poly, PolyMatrix, determinant, reduce_generating_set
from .qt_module import QtCode, load_code, parse_code, random_qt_code
from .spectral_core import (INFINITY, common_eigenspace, eigencode, eigenspace, eigenvalues,
                            omega_bar, parity_check, spectral_data)
from .oracle import OracleConfig, constacyclic_distance, min_distance, qt_min_distance, verify_table1
from .distance_bounds import (BoundWitness, bch_bound, ht_bound, roos_bound, shift_bound,
                              spectral_bound, spectral_roos, spectral_shift)

__version__ = "0.1.0"
