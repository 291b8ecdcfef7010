import hypothesis

hypothesis.settings.register_profile(
    "exact", max_examples=40, deadline=None, derandomize=True
)
hypothesis.settings.load_profile("exact")
