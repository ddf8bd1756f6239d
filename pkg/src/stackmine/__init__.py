"""stackmine: manufacture labeled crash datasets from C/C++ mutation campaigns
and score fault-localization predictions against them."""

__version__ = "0.1.0"
