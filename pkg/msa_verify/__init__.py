"""
Command-line interface for the maximal-subalgebra toolkit.
"""
