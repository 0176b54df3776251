"""Chow, Witt and mod-2 invariants of flag varieties.

Shapes are given as "d1,d2,..." or a list of ints; twists as "0", "i,j,..." or a list of blocks.
Large integers come back as Python ints.
"""

from ._core import (
    ValidationError,
    WRing,
    ann_euler,
    ann_top_chern,
    bockstein_ranks,
    chow_poincare,
    count_flags_complex,
    count_flags_real,
    count_lines_cubic,
    count_quintic_fourplanes,
    euler_class,
    euler_sym_sum_rk2,
    euler_sym_tensor,
    gw_form,
    hypersurface_count,
    piqp_check,
    q_spec,
    run_suite,
    schubert_ideal_rank,
    suite_names,
    torsion_poincare,
    torsion_poincare_closed,
    w_poincare,
)

__all__ = [
    "ValidationError",
    "WRing",
    "ann_euler",
    "ann_top_chern",
    "bockstein_ranks",
    "chow_poincare",
    "count_flags_complex",
    "count_flags_real",
    "count_lines_cubic",
    "count_quintic_fourplanes",
    "euler_class",
    "euler_sym_sum_rk2",
    "euler_sym_tensor",
    "gw_form",
    "hypersurface_count",
    "piqp_check",
    "q_spec",
    "run_suite",
    "schubert_ideal_rank",
    "suite_names",
    "torsion_poincare",
    "torsion_poincare_closed",
    "w_poincare",
]
