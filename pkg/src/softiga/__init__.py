"""Soft B-spline Galerkin solver for low-energy bound states of the unified
1D two-body / 2D three-body quantum eigenproblem."""

from .assemble import (SoftnessConfig, assemble_2d, assemble_mass,
                       assemble_potential, assemble_potential_2d,
                       assemble_softness, assemble_stiffness, soft_stiffness)
from .meshing import (GradedMeshSpec, QuadratureRule, gauss_rule, graded_mesh,
                      uniform_mesh)
from .model import (DiffusionCoeffs, PotentialShape, ProblemSpec,
                    default_shift, gamma_field, gamma_hat_field,
                    kappa_from_mass_ratio, potential_value)
from .solve import (EigenResult, ErrorRecord, NoConvergence, SingularMass,
                    SoftnessTooLarge, SolverError, eigen_error,
                    sample_eigenfunction, solve_smallest)
from .splines import (Mesh1D, SplineSpace, collocation_matrix, eval_basis,
                      open_knot_vector, pth_derivative_jumps)

__version__ = "0.1.0"
