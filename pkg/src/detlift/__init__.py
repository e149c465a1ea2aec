"""Exact verification of lifts, Ext realizations and annihilators for maximal-minor thickenings."""

__version__ = "0.1.0"
