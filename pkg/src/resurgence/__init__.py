"""Resurgence of symbolic powers of squarefree monomial ideals."""
