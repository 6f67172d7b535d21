# Copyright 2026 The fidbound Authors
# SPDX-License-Identifier: Apache-2.0
"""Maximal pure-state fidelity at a fixed relative energy gap."""

from ._fidbound import (
    CutoffExceeded,
    DomainError,
    FidboundError,
    e_from_y,
    fmax,
    pair_tradeoff,
    run_cli,
    verify,
    y_from_e,
    ymax_for_fidelity,
)

__all__ = [
    "CutoffExceeded",
    "DomainError",
    "FidboundError",
    "e_from_y",
    "fmax",
    "pair_tradeoff",
    "run_cli",
    "verify",
    "y_from_e",
    "ymax_for_fidelity",
]
