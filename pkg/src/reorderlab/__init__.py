"""Receiver-side analysis of packet reordering.

The library models a receiver that buffers out-of-order packets until the
next in-sequence ID arrives, and builds everything else on that single
process: buffer-size series, cumulative ACKs, equivalence of traces,
ordered/unordered episode segmentation, ascending-list disorder measures,
reconstruction of low-disorder permutations from buffer series alone, and
consistency probes for reordering metrics.
"""

from .buffering import (
    ORDERED,
    UNORDERED,
    Episode,
    EpisodeSegmentation,
    ReceiverState,
    ack_from_buffer,
    ack_sequence,
    behaviorally_equivalent,
    buffer_sizes,
    check_ids,
    check_permutation,
    fb_equivalent,
    segment_episodes,
)
from .disorder import SusPartition, lds_bruteforce, sus, sus_partition
from .errors import (
    CapacityExceededError,
    InvalidParameterError,
    InvalidSequenceError,
    ReorderError,
)
from .metrics import (
    DisplacementDistribution,
    RcvWindowSeries,
    consistency_counterexample,
    mean_buffer_size,
    rcv_window_series,
    reorder_density,
)
from .oracle import (
    EquivalenceClassReport,
    IdentityViolation,
    enumerate_classes,
    verify_identities,
    verify_theorem,
)
from .reconstruct import MAX_SUS, ReconstructionTrace, reconstruct, reconstruct_trace

__version__ = "0.1.0"

__all__ = [
    "CapacityExceededError",
    "DisplacementDistribution",
    "Episode",
    "EpisodeSegmentation",
    "EquivalenceClassReport",
    "IdentityViolation",
    "InvalidParameterError",
    "InvalidSequenceError",
    "MAX_SUS",
    "ORDERED",
    "RcvWindowSeries",
    "ReceiverState",
    "ReconstructionTrace",
    "ReorderError",
    "SusPartition",
    "UNORDERED",
    "ack_from_buffer",
    "ack_sequence",
    "behaviorally_equivalent",
    "buffer_sizes",
    "check_ids",
    "check_permutation",
    "consistency_counterexample",
    "enumerate_classes",
    "fb_equivalent",
    "lds_bruteforce",
    "mean_buffer_size",
    "rcv_window_series",
    "reconstruct",
    "reconstruct_trace",
    "reorder_density",
    "segment_episodes",
    "sus",
    "sus_partition",
    "verify_identities",
    "verify_theorem",
    "__version__",
]
