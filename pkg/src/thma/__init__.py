"""Finite categories, truncated nerves, exact integer homology, and
checkers for the fiberwise-contractibility and Morita theorems."""

from .core import (CatFunctor, FinCat, NatTrans, ValidationReport,
                   arrow_category, codisc, compose_functors,
                   connected_components, disc, identity_functor, iso_part,
                   opposite, product, strict_pullback, validate_category,
                   validate_functor, validate_nat_trans)
from .constructions import (AdjointSectionWitness, CoverData, SpanDiagram,
                            cech_category, codisc_decomposition_check,
                            comma_fiber, comma_slice, fatten, s_category,
                            t_category, t_op_category, twisted_arrow)
from .simplicial import (BiSimplicialSet, BudgetExceeded, SimplicialHomotopy,
                         SimplicialMap, SimplicialSet, bisimplicial_D,
                         check_diag_equals_nerve_S, diagonal,
                         nat_trans_to_homotopy, nerve, nerve_map,
                         projection_beta)
from .homology import (ChainComplex, ChainHomotopyData, ChainMapData,
                       HomologyReport, chain_homotopy_from_simplicial,
                       chain_map, homology, is_homology_equivalence,
                       mapping_cone, normalized_chains, smith_normal_form,
                       total_complex)
from .verifiers import (ContractibilityCertificate, TheoremVerdict,
                        certify_contractible, is_essentially_surjective,
                        is_fully_faithful, morita_check, segal_cover_check,
                        shrinkable_witness_check, theorem_a_check)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
