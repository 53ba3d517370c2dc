"""Pair-cover solver: set-disjoint and path-disjoint facility location."""

from ._paircover import (
    InfeasibleError,
    Instance,
    Network,
    NetworkError,
    build_instance,
    export_lp,
    failure_probability,
    generate,
    hslb,
    make_network,
    sample_cf,
    solve_dhs,
    solve_exact,
    solve_genetic,
    solve_greedy,
    solve_shs,
    tree_optimum,
    updfl,
)

__all__ = [
    "InfeasibleError",
    "Instance",
    "Network",
    "NetworkError",
    "build_instance",
    "export_lp",
    "failure_probability",
    "generate",
    "hslb",
    "make_network",
    "sample_cf",
    "solve_dhs",
    "solve_exact",
    "solve_genetic",
    "solve_greedy",
    "solve_shs",
    "tree_optimum",
    "updfl",
]
