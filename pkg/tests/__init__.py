"""
Test package for the maximal-subalgebra toolkit.
"""
