"""Generalized inverses over an IdealBackend."""
