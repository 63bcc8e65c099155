"""Finite-ring toolkit for skew generalized power series and McCoy searches."""

__version__ = "0.1.0"

from .errors import (ActionError, CapacityError, ConfigError, HypothesisError,
                     InconsistencyError, InvalidIdealError, InvalidSpecError,
                     RingAxiomError, SidednessError, SkewMcCoyError)
from .rings import (FiniteRing, build_ring, from_tables, gf, product,
                    read_table_file, s_matrix, upper_triangular,
                    validate_ring_axioms, zmod)
from .structure import (Check, Endomorphism, Ideal, PropertyProfile,
                        all_ideals, annihilator, enumerate_endomorphisms,
                        idempotents, is_abelian, is_prime_ideal, is_quasi_duo,
                        is_regular, is_semiregular, jacobson_radical,
                        maximal_ideals, nilpotency_index,
                        one_sided_maximal_ideals, quotient_ring, ring_profile)
from .omonoid import (INTEGERS, NATURALS, OrderedMonoid, build_monoid,
                      validate_strict_order, validate_support)
from .series import (MonoidAction, SkewSeries, build_action, embed_const,
                     embed_monoid, format_series, is_compatible, parse_series,
                     scale_left_const, scale_right_const, series_add,
                     series_mul, trivial_action, truncated_mul)
from .search import BUDGET, WindowSpace, fit_window
from .checkers import (CAVEAT, LemmaReport, McCoyVerdict, action_names,
                       enumerate_actions, fields_witness_check,
                       hypothesis_profile, mccoy_search, replay,
                       two_primal_exploration, verify_annihilator_nonzero,
                       verify_coefficients_in_radical,
                       verify_compatible_membership, verify_lemma_generation,
                       verify_main_theorem, verify_maximal_prime,
                       verify_quasi_duo, verify_sn_transfer)
