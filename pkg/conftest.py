import os

from hypothesis import HealthCheck, settings

# Exact coloring and canonical forms have no useful per-example deadline
settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", parent=settings.get_profile("default"), max_examples=300)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))
