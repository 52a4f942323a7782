"""Exact computer algebra for Z2-graded commutative algebras and audits of supergroup identities."""

__version__ = "0.1.0"
