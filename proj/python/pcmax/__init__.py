"""Makespan scheduling on identical parallel machines."""

from ._core import (
    Instance,
    ParseError,
    Schedule,
    combine,
    compare_benchmark,
    evaluate,
    exact_opt,
    format_instance,
    generate,
    graham_bound,
    lower_bounds,
    lpt,
    lpt_rev,
    lpt_rev_bound,
    multifit,
    noncritical_k_bound,
    parse_instance,
    r2_bound,
    rk_bound,
    run_lp_battery,
    slack,
)

__all__ = [
    "Instance",
    "ParseError",
    "Schedule",
    "combine",
    "compare_benchmark",
    "evaluate",
    "exact_opt",
    "format_instance",
    "generate",
    "graham_bound",
    "lower_bounds",
    "lpt",
    "lpt_rev",
    "lpt_rev_bound",
    "multifit",
    "noncritical_k_bound",
    "parse_instance",
    "r2_bound",
    "rk_bound",
    "run_lp_battery",
    "slack",
]
