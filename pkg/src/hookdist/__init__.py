"""Distributions of t-hook counts and Hilbert scheme Betti numbers modulo b.

Exact q-series for Han's t-hook generating function and the Goettsche /
Buryak-Feigin Poincare series, the limiting constants c_t(a,b;n) and d(a,b),
a truncated Bessel-series evaluator, and high-precision checks of the
asymptotics of the q-products F_1, F_2, F_3 near roots of unity.
"""

from .distributions import (
    TruncationPlan,
    ct_constant,
    d_constant,
    hardy_ramanujan_main,
    psi_ratio,
    zuckerman_truncated,
)
from .hilbert import buryak_feigin_series, delta, delta_quasi, goettsche_series
from .hooks import HookQuery, Partition, brute_force_pt, han_series, hook_multiset, pt_series
from .modular import ExactPhase, dedekind_sum, kloosterman_closed, kloosterman_direct, lambda_invariant, omega
from .series import CycSeries, IntSeries, eta_like_product, partition_series

__version__ = "0.1.0"

__all__ = [
    "IntSeries",
    "CycSeries",
    "eta_like_product",
    "partition_series",
    "Partition",
    "HookQuery",
    "hook_multiset",
    "brute_force_pt",
    "han_series",
    "pt_series",
    "goettsche_series",
    "buryak_feigin_series",
    "delta",
    "delta_quasi",
    "ExactPhase",
    "dedekind_sum",
    "omega",
    "lambda_invariant",
    "kloosterman_direct",
    "kloosterman_closed",
    "ct_constant",
    "d_constant",
    "psi_ratio",
    "hardy_ramanujan_main",
    "TruncationPlan",
    "zuckerman_truncated",
]
