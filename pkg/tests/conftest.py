"""Shared helpers for the test suite."""

import numpy as np


def random_values(rng, m, min_gap=1e-3, low=0.001, high=1.0):
    """Draw m values in (0, 1] with pairwise relative spacing >= min_gap."""
    while True:
        vals = rng.uniform(low, high, m)
        if m == 1:
            return vals
        gaps = np.abs(vals[:, None] - vals[None, :]) + np.eye(m)
        if gaps.min() >= min_gap:
            return vals
