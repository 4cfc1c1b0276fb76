"""
RRH front-end: interleaver, DWDM demultiplexing, photodetection, filtering and the per-element
RF feeds.
"""
