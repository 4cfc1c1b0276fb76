"""
Scenario execution: single chain runs, parameter sweeps and their result tables.
"""
