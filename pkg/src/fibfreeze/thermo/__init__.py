"""Potential, return words, partition sums and the zeta lower bound."""

from .bounds import (
    GAMMA,
    BoundReport,
    ExclusionReport,
    Levels,
    beta_c_exclusion,
    levels_PQ,
    lower_bound,
)
from .excursions import (
    DepthWords,
    classify_DW,
    depth_words,
    dw_candidates,
    entry_exit_words,
    find_DW_members,
)
from .potential import InvalidParameters, PotentialParams, potential_value, validate_params
from .returns import (
    EXCURSION,
    FREE,
    WORKERS_ENV,
    NotAReturnWord,
    PartitionEstimate,
    TrajectoryAnnotation,
    annotate_trajectory,
    annotation_violations,
    birkhoff_sum,
    enumerate_return_words,
    is_return_word,
    lambda_truncated,
    trajectory_deltas,
)
from .zeta import hofbauer_beta_c, zeta
