from .kernels import (
    TradeContext,
    Walker,
    apply_trade,
    curveball_step,
    switch_outcomes,
    switch_step,
    trade_context,
    trade_outcomes,
)
from .preprocess import preprocess, preprocess_bipartite, preprocess_graph
from .runner import (
    ChainConfig,
    ChainKind,
    make_rng,
    relabel_samples,
    replica_seed,
    run_chain,
    sample,
)

__all__ = [
    "ChainConfig",
    "ChainKind",
    "TradeContext",
    "Walker",
    "apply_trade",
    "curveball_step",
    "make_rng",
    "preprocess",
    "preprocess_bipartite",
    "preprocess_graph",
    "relabel_samples",
    "replica_seed",
    "run_chain",
    "sample",
    "switch_outcomes",
    "switch_step",
    "trade_context",
    "trade_outcomes",
]
