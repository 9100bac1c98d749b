import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=250, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("quick", max_examples=25, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))
