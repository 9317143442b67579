"""Hypothesis profiles; pick one with HYPOTHESIS_PROFILE=ci|dev."""

import os

from hypothesis import HealthCheck, Verbosity, settings

# reproducible runs: the same examples on every machine
settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    print_blob=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("dev", deadline=None, verbosity=Verbosity.verbose)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))
