"""Discriminants, real roots, and singular quadrature for |f(x)|^(-2/n)."""
