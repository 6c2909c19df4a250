"""
Módulo de redes elípticas: modelo, propagación, evaluación desde curvas,
escalados y recuperación
"""

from .axiom import AxiomReport, check_axiom, sample_quadruples
from .builtin import BUILTIN_NAMES, builtin_net
from .elliptic_net import (EllipticNet, NetBlock, block_indices, reduce_net, subnet,
                           transform_by_homomorphism)
from .lattice import NetIndex, RelationInstance
from .propagate import (PropagationEngine, SeedSet, fill_block, generic_instance_search,
                        rank1_term, rank2_bootstrap, rank2_term, rank3_lift, rankn_term)
from .recover import (Classification, classify, recover, recover_rank1, recover_rank2,
                      recover_rank2_symmetric, recover_rankn)
from .seeds import (CurveNetContext, eval_term_curve_backed, net_from_curve, seed_rank1,
                    seed_rank2, seed_rank3)
from .transform import (QuadraticFormScaling, apply_scaling, are_scale_equivalent,
                        homothety, homothety_exponent, is_degenerate, normalize, scale_constant)

__all__ = [
    'AxiomReport', 'check_axiom', 'sample_quadruples',
    'BUILTIN_NAMES', 'builtin_net',
    'EllipticNet', 'NetBlock', 'block_indices', 'reduce_net', 'subnet', 'transform_by_homomorphism',
    'NetIndex', 'RelationInstance',
    'PropagationEngine', 'SeedSet', 'fill_block', 'generic_instance_search',
    'rank1_term', 'rank2_bootstrap', 'rank2_term', 'rank3_lift', 'rankn_term',
    'Classification', 'classify', 'recover', 'recover_rank1', 'recover_rank2',
    'recover_rank2_symmetric', 'recover_rankn',
    'CurveNetContext', 'eval_term_curve_backed', 'net_from_curve', 'seed_rank1', 'seed_rank2', 'seed_rank3',
    'QuadraticFormScaling', 'apply_scaling', 'are_scale_equivalent', 'homothety',
    'homothety_exponent', 'is_degenerate', 'normalize', 'scale_constant',
]
