"""
Sparse optical spectra, their modulation stages and the chirped grating delay laws.
"""
