"""Deduction modulo over pointed graphs: rewriting, proof checking, finite
graph semantics and translations between set-theoretic languages."""

__version__ = "0.1.0"
