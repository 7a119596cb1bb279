"""Gray maps over finite groups of order at most 16.

Groups are dense Cayley tables (identity at index 0). On top of them sit
automorphism search, cyclic extensions and semidirect decompositions, the
two Gray map constructions, an exhaustive verifier and a survey of the
fourteen groups of order 16.
"""

from .errors import *  # noqa: F401,F403
from .groups import (GroupTable, Isomorphism, build_builtin, BUILTIN_NAMES, cyclic,
                     elementary_abelian, direct_product, element_order, inverse,
                     count_involutions, order_profile, generated, generating_set,
                     is_subgroup, is_normal, subgroups, subgroup_table,
                     contains_subgroup_isomorphic_to, extend_homomorphism,
                     homomorphism_from_labels, isomorphisms, is_isomorphic)
from .automorphisms import (Automorphism, automorphism_group, aut_as_group, automorphism_order,
                            automorphism_from_images, identity_automorphism, inner_automorphism,
                            inner_automorphism_group, automorphisms_of_order)
from .extensions import (ExtensionType, Extension, SemidirectDecomposition, extension_type,
                         validate_extension_type, build_extension, extension_equivalent,
                         coset_decomposition, semidirect_product, parse_extension_literal,
                         format_extension, order16_group, order16_extension, classify_order16)
from .graymaps import (BinaryWord, GrayMapTable, VerificationReport, hamming_weight,
                       hamming_distance, verify_gray_map, is_gray_map, base_gray_map,
                       elementary_gray_map, transport, type1_extend, compatible, type2_construct,
                       weight_parity_feasible, doubling_obstruction, dumps_graymap, loads_graymap)
from .io import dumps_group, loads_group, resolve_group

__version__ = "0.1.0"
