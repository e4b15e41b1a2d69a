"""Las Vegas computation over infinite objects.

Exact real streams, closed sets with negative information, probabilistic
choice operators, a Las Vegas machine engine with failure recognition, and
executable case studies: robust division, bimatrix Nash equilibria and
intermediate-value zero finding.
"""

from .choices import (
    CnSelection,
    DensityWitness,
    IntervalCode,
    MindChangeLog,
    PathEmitting,
    PathExhausted,
    PathFailed,
    cn_select,
    interval_decode,
    interval_encode,
    ldl_search,
    majority_vote,
    wwkl_path,
)
from .engine import (
    Exhausted,
    Failed,
    LasVegasMachine,
    RestartResult,
    Succeeding,
    SuccessEstimate,
    identity_machine,
    lv_compose,
    lv_estimate_success,
    lv_restart_loop,
    lv_run,
    wilson_interval_99,
    wwkl_machine,
)
from .exact import Dyadic, dyadic_round, format_rational, parse_dyadic, parse_rational
from .ivt import (
    PwlFunction,
    Stalled,
    Zero,
    ivt_probabilistic,
    ivt_tree_sequence,
    ivt_trisect,
    pwl_eval,
    pwl_zero_set,
)
from .machines import auc_machine, ivt_machine
from .nash import (
    BimatrixGame,
    StrategyPair,
    nash_2x2_family,
    nash_family_recover,
    nash_solve,
    nash_verify,
)
from .observe import NotYetAfter, ObservedOne, sierp_observe
from .rdiv import (
    AucInterval,
    AucPoint,
    RdivOutcome,
    auc_to_pcc_h,
    auc_to_pcc_k,
    rdiv,
    rdiv_stream,
    rdiv_verify,
)
from .sampling import (
    BAIRE,
    CANTOR,
    NAT_TIMES_CANTOR,
    NATURALS,
    NATURALS_COUNTING,
    AdviceSpace,
    SplitMix64,
    advice_sample,
    split_seed,
)
from .streams import (
    BinaryName,
    BitStream,
    NatStream,
    SignedDigitStream,
    cantor_pair,
    cantor_unpair,
    interleave,
    project_left,
    project_right,
    sds_approx,
    sds_from_rational,
)
from .svc import (
    SvcTable,
    baire_to_cantor_prefix,
    signum_preimage_measure,
    svc_embed_prefix,
    svc_interval,
    svc_remaining_length,
)
from .trees import (
    CoTree,
    NegClosedUnit,
    product_amplify,
    tree_from_excluded,
    tree_measure_exact,
    tree_measure_upper,
)

__version__ = "0.1.0"
