"""
Unsupervised discovery of morphologically related word pairs from raw text, combining
orthographic similarity with co-occurrence based mutual information.
"""


__author__ = "morphPairs developers"
__version__ = "0.1.0"
