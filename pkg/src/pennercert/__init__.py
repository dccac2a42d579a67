"""Exact spectral certificates for nonnegative integral transition matrices.

The main entry points are re-exported here; see the submodules for the
full surface.
"""

__version__ = "0.1.0"

from .intmatrix import ConeVector, NonNegIntMatrix, cone_norm, from_rows, mat_pow, path_count
from .digraph import (
    ComponentKind,
    component_kind,
    exceeds_one,
    graph_of,
    is_circle,
    is_perron_frobenius,
    restrict,
    scc_decompose,
)
from .spectral import SpectralInterval, collatz_wielandt, dominant_component, spectral_radius
from .penner import BoundReport, PennerCertificate, bound_from_certificate, certify, check, core_bound
from .substitution import Substitution, arc_count_admissible, entropy_interval, incidence_matrix
from .family import claim_operator, eigenvector_check, family_stretch, sharpness_report
