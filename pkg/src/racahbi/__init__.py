"""Exact rewriting engine for the Racah and Bannai-Ito algebras over Q."""

from .terms import (Alphabet, AlphabetMismatch, Element, GenSymbol, Scalar,
                    add, anticommutator, commutator, format_element,
                    from_json_obj, mul, scale, to_json_obj)
from .rewrite import (NonTerminating, OverlapReport, ReductionSystem, Rule,
                      TermOrder, check_confluence, check_termination,
                      format_system, normal_form, parse_system)
from .expressions import ExprSyntaxError, parse, parse_element
from .presentations import (Presentation, bannai_ito, bi_rebased, by_id,
                            racah, rebase_to_iota, rebase_to_z)
from .morphisms import (AlgebraMap, UnsealedMap, apply, check_d6_relations,
                        check_equivariance, compose, d6_element, format_map,
                        identity_map, parse_map, sigma, tau, zeta)
from .filtration import (STANDARD_WEIGHTS, ProductWitness,
                         check_filtration_product, is_filtration,
                         leading_form, weighted_degree, weighted_monomials)
from .casimir import (CASIMIR_VARS, CENTRAL_VARS, CasimirSpec, CommPoly,
                      MonomialCheck, NotInCentralizerImage, RankReport,
                      casimir_base, casimir_element, central_value,
                      correction_for, express_casimir, is_central,
                      source_weights, zeta_rank_check)
from .corpus import CORPUS, Identity, corpus_failures, run_corpus
from .acceptance import CheckResult, format_results, run_all, suite_passed

__version__ = "0.1.0"
