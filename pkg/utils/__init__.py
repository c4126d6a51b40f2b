"""
Utilities package for the maximal-subalgebra toolkit.

Contains:
- config: Run defaults, RunConfig and report schema checks
- logging_config: Structured JSON logging
"""

__version__ = "0.1.0"
