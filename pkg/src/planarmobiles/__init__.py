"""Bijections between planar maps of prescribed girth and weighted mobiles."""

__version__ = "0.1.0"
