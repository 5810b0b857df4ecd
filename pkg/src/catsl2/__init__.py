"""Exact computer algebra for categorified quantum sl2."""

from .kernels import BACKEND
from .qscalar import LaurentPoly, QSeries, RationalQ, gauss_binomial, quantum_factorial, quantum_integer
from .symfunc import SymFunc, h_in_e, schur_jacobi_trudi
from .multipoly import MultiPoly
from .nilhecke import NilHeckeElt, Permutation, SymMatrix, nh_e_idempotent, theta_matrix
from .udot import UdotElt, semilinear, tau, tau_inv

__version__ = "0.1.0"
