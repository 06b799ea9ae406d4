"""Lexicographic orderings of context-free languages.

Grammars and bounded enumeration (:mod:`lexdense.grammar`), the
lexicographic order and its binary coding (:mod:`lexdense.lexorder`),
convolution automata (:mod:`lexdense.automata`), the PCP reduction
(:mod:`lexdense.pcp`) and order-type analysis (:mod:`lexdense.order`).
"""

from .grammar import (EnumerationLimitExceeded, Grammar, GrammarError, OrderedAlphabet, Word,
                      enumerate_between, enumerate_up_to_length, is_right_linear, make_grammar,
                      parse_grammar, recognize, serialize_grammar, trim)
from .lexorder import (PREFIX_RELATED, BinaryCode, Decomposition, Ordering, PrefixViolation,
                       binary_code, encode_grammar, first_difference, lex_compare,
                       prefix_free_bounded)
from .pcp import (CENT, DOLLAR, Certificate, PcpInstance, ReductionArtifacts, Refuted,
                  brute_force_solve, build_delta_alphabet, build_reduction_grammar,
                  certify_adjacent, gap_witness, neighbor_witnesses, parse_pcp, verify_solution)
from .order import (DensityProbeReport, DensityVerdict, OrderReport, SolutionDetected,
                    classify_regular_order_type, decide_dense_regular, decide_endpoints_regular,
                    middle_witness, probe_density_cfl)

__version__ = "0.1.0"
