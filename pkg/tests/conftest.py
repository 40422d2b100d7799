import os

from hypothesis import settings

# Numeric property tests can be slow under coverage or on loaded machines;
# deadlines add flake without value here.
settings.register_profile("default", deadline=None)
settings.register_profile("stress", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))
