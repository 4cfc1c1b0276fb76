"""
Component accounting of the RRH architectures.
"""
