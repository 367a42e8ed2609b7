from hypothesis import settings

settings.register_profile("pseudoplane", deadline=None, max_examples=80)
settings.load_profile("pseudoplane")
