"""Closed geodesics on a hyperbolic pair of pants: cyclic edge words, the
transition graph of alternating words, Burnside counts and lower bounds,
with hexagon trigonometry, holonomy traces and a fundamental-domain tracer
as geometric cross-checks."""

__version__ = "0.1.0"
