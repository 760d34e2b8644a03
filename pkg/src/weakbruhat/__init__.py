"""Exact interval sizes in the weak order on S_n via linear extensions."""

from .counting import (
    Strategy, choose_strategy, count_from_identity, count_interval,
    count_le_decomposition, count_le_weighted_quotient, count_le_width_dp,
    multinomial,
)
from .decomposition import (
    DecompositionTree, NodeKind, block_decompose, classify_node,
    enumerate_blocks, inflate, intrinsic_width, is_simple,
)
from .perms import (
    ChainCover, Permutation, compose, identity, increasing_chain_cover,
    inverse, inversion_set, lds_width, parse_permutation, upper_covers,
    weak_leq,
)
from .posets import (
    GenericPoset, Poset2D, count_le_bruteforce, ingest_poset_file,
    is_linear_extension, max_antichain_bruteforce, phi, phi_inverse,
    relation_holds,
)

__version__ = "0.1.0"
