"""Fully dynamic global minimum cut maintenance."""

from .cactus import Cactus, CactusError
from .dynamic import DynamicMinCut
from .flow import FlowNetwork, FlowResult
from .graph import DynGraph, GraphError
from .oracles import oracle_all_min_cuts, oracle_min_st_cut
from .static_cactus import build_cactus, build_uv_cactus, static_min_cut

__all__ = [
    "Cactus",
    "CactusError",
    "DynGraph",
    "DynamicMinCut",
    "FlowNetwork",
    "FlowResult",
    "GraphError",
    "build_cactus",
    "build_uv_cactus",
    "oracle_all_min_cuts",
    "oracle_min_st_cut",
    "static_min_cut",
]
