"""Exact computations around constant depth functions of monomial ideals.

Depth sequences k -> depth(S/I^k), Rees algebra h-vectors and normality,
and the direct-summand / algebra-retract tests on monomial generators.
"""

__version__ = "0.1.0"

from .monomial import (Field, Graph, MonomialIdeal, PolyContext, QQ, contains, edge_ideal,  # noqa: E402
                       maximal_ideal, minimalize, power, product)
from .hilbert import count_in_ideal, count_quotient, hilbert_numerator, krull_dim  # noqa: E402
from .betti import (betti_table, depth_function, depth_quotient, lcm_closure,  # noqa: E402
                    reduced_homology_dims, upper_koszul)
from .lattice import (AffineMonoid, algebra_dim, cone_lattice_hilbert_basis, degree_selection,  # noqa: E402
                      hilbert_basis_lattice_positive, lattice_contains, lattice_from_rows,
                      monoid_contains, normality_check, summand_check)
from .summand import is_summand, retract_check  # noqa: E402
from .rees import (analytic_spread, analyze_constant_depth, rees_cm_status, rees_hilbert_function,  # noqa: E402
                   rees_hvector, rees_normality, rees_semigroup)
from .explore import explore_questions  # noqa: E402
