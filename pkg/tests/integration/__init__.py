"""
Integration tests against the hep-th dataset.
"""
