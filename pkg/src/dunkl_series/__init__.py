"""Dunkl analogues of Bernoulli, Euler and Calogero polynomials and the
sums over Bessel zeros that they evaluate in closed form."""

__version__ = "0.1.0"
