"""
Test package for tvgnet.
"""
