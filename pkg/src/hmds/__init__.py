"""Higher-order MDS codes over finite fields: exact verification, list
decoding checks, Reed-Solomon transforms and field-size bounds."""

from .generic import SubsetCollection, enumerate_generic, enumerate_km1_generic, is_generic
from .gf import FieldElement, FieldSpec, field_new, field_of_order
from .linalg import MatrixGF, Subspace, block_matrix, det, dual, intersect_dim, rank, span
from .rs import RSCode, expurgate, mds3_criterion, pseudo_shorten, puncture, vandermonde
from .verifier import VerificationReport, is_mds, is_mds_ell, is_mds_ell_reduced

__version__ = "0.1.0"
