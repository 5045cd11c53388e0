"""Exact computations in virtual extensions of symmetric groups."""

from .words import (GenSym, Word, commutator, concat, conjugate, free_reduce,
                    invert, involution_normalize, parse_symbol, parse_word,
                    relator_canonical, word)
from .presentations import (FAMILY_KINDS, Presentation, RangeError, family,
                            make_presentation, rename_generators,
                            same_relator_set, tietze_eliminate)
from .permutations import Permutation, all_permutations
from .quotients import (BudgetExceeded, FiniteGroup, QuotientMap,
                        check_homomorphism, hom_count, parity_image,
                        parse_target, symmetric_group, symmetric_image)
from .schreier import (RSGenerator, SchreierTransversal, gamma,
                       kappa_defining_word, paper_aliases, pure_to_kappa,
                       pvl_subgroup_presentation, subgroup_presentation,
                       tau_rewrite, transversal_m2, transversal_mn)
from .intlinalg import (AbelianInvariants, Class2Quotient, IntMatrix,
                        abelianization, class2_quotient, exponent_matrix,
                        kernel_basis, smith_normal_form)
from .crysto import (CrystoElement, SignedAction, act, coxeter_check,
                     holonomy_faithful, orbit_representatives,
                     pair_action_spec, torsion_element)
from .raag import SimpleGraph, is_chordal, pvt_commutator_free, pvt_graph

__version__ = "0.1.0"
