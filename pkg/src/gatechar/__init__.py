"""Nonlocal characterization of two-qubit quantum gates.

Local invariants, Weyl-chamber coordinates, perfect-entangler verdicts,
entangling power (exact, single-trace, and Monte-Carlo routes), closed-form
results for the swap-power and controlled-unitary families, and numerical
searches for gate synthesis up to local equivalence.
"""

__version__ = "0.1.0"

from .entangling_power import (EP_MAX, EPResult, ep_exact, ep_monte_carlo,
                               ep_single_trace, transposition_kernel)
from .errors import (DimensionError, GateCharError, NumericError,
                     PreconditionError)
from .families import (GateCountResult, cnot_gate_count, cu_gate,
                       cu_invariants_closed, cu_output_concurrence,
                       ep_cu_closed, ep_swap_power_closed, is_cnot_class,
                       max_output_concurrence, swap_power, swap_root,
                       swap_root_invariants_closed,
                       swap_root_output_concurrence)
from .gates import BUILTIN_GATES, CNOT, IDENTITY, SWAP
from .invariants import (MAGIC_BASIS, LocalInvariants, WeylPoint,
                         in_weyl_chamber, invariants_from_coordinates,
                         invariants_match, is_perfect_entangler_coords,
                         is_perfect_entangler_hull, local_invariants,
                         magic_gram, to_magic_basis, weyl_coordinates)
from .linalg import (PAULIS, SIGMA_X, SIGMA_Y, SIGMA_Z, UNITARITY_TOL,
                     is_unitary, tensor_product, transposition_13,
                     unitary_eigenphases)
from .measures import (concurrence, linear_entropy, product_state,
                       reduced_density)
from .sampling import (ProductStateSampler, haar_random_unitary,
                       philox_generator, product_amplitudes)
from .synthesis import (CNOT_INVARIANTS, SynthesisResult, align_locals,
                        invariant_distance, local_unitary_pair,
                        search_two_gate_cnot, su2_from_euler,
                        synthesis_verdict)
