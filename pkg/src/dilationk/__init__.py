"""Exact K-theory for Exel crossed products C(T^d) x_{alpha_A, L} N by dilation matrices."""

from .bimodule import (FilterBank, OmegaMatrix, alpha, build_filterbank, check_orthonormal,
                       inner, kernel_representatives, module_action, omega, reconstruct, transfer)
from .exterior import (SubsetIndex, adjugate_compound_b, compound_c, enumerate_subsets,
                       graded_family, laplace_identity_diag, laplace_identity_offdiag,
                       product_sign, tau_pair_sign, tau_sign)
from .groups import AbelianGroup, cokernel
from .ktheory import (InternalConsistencyError, KTheoryResult, identity_class,
                      injectivity_report, kgroups, kgroups_2x2, one_minus_b)
from .laurent import LaurentPolynomial
from .linalg import (IntegerMatrix, Matrix, RationalMatrix, SingularMatrixError,
                     block_transpose_permutation, characteristic_polynomial, determinant,
                     rational_inverse)
from .smith import SmithDecomposition, coset_representatives, smith_normal_form
from .stability import (DilationCertificate, NotADilationError, certify_dilation, norm_decay,
                        require_dilation)

__version__ = "0.1.0"
