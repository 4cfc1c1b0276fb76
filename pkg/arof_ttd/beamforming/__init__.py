"""
Uniform linear array model: array factor, peak extraction, squint and coverage.
"""
