"""Exact tools for weak Lefschetz questions on power-sum quotients."""

from .errors import GuardRefusal, InternalFault
from .monomials import (CUBES, SQUARES, ExtendMode, GeneratorCase,
                        GeneratorSet, Monomial, Ordering, cubes_dk,
                        enumerate_degree_piece, extend_cubes,
                        extend_cubes_witness, extend_squares, generic_power,
                        in_combinatorial_ideal, initial_generators,
                        revlex_compare, revlex_sort_key, squares_dk)
from .hilbert import (HilbertTable, TruncatedSeries, aci_hilbert,
                      complement_count, froberg_corollary_degree,
                      froberg_truncation, power_ci_hilbert, power_ci_table)
from .linalg import (DEFAULT_PRIME, FAST_PRIME, RATIONALS, EchelonResult,
                     FieldTag, RationalMatrix, echelonize, in_column_space,
                     kernel_basis, matrix_rank, prime_field)
from .quotient import (DegreeRecord, Form, IdealSpec, WlpReport,
                       form_from_coefficients, form_power, graded_dimension,
                       ideal_degree_basis, initial_degree_piece,
                       injectivity_threshold_check, linear_coefficients,
                       linear_form, monomial_quotient_kernel,
                       monomial_quotient_map_rank, multiplication_kernel,
                       multiplication_map_rank, multiply_forms,
                       random_linear_form, standard_monomials,
                       support_bound_check, variable_sum, wlp_sweep)
from .witness import (EpsilonTable, PsiTable, SumKind, WitnessParams,
                      build_Q, build_Qprime, epsilon_table, psi_table,
                      random_witness_params, subset_sum_check,
                      verify_congruence, verify_nonmembership, witness_record)
from .paths import (BoundaryConvention, PathCounts, PathSpec, closed_form_a,
                    conjecture_check, count_admissible_paths,
                    count_double_cross, path_counts)
