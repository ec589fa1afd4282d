"""Galois ring arithmetic, QFT construction and verification."""
