"""
Kats - exact mod-p Katz modular forms

Finite field and Dirichlet character arithmetic, truncated q-expansions with
level/weight/character metadata, Katz Eisenstein series, old spaces and the
coefficient checks that tie an eigenform to a newform of its eigensystem.
"""

__version__ = "1.0.0"
__author__ = "Kats Team"
