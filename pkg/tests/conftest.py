"""Shared test configuration."""
import os

from hypothesis import settings

# cache-growth on first examples can be slow; disable the per-example deadline
settings.register_profile("default", deadline=None)
settings.register_profile("dev", max_examples=20, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))
