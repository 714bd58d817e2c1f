"""Exact computations around L-space surgeries and twist families of knots.

Modules: :mod:`lsf.laurent` (Laurent polynomials), :mod:`lsf.twistalex`
(Alexander polynomials under twisting), :mod:`lsf.seifert` (Seifert fibered
L-spaces), :mod:`lsf.braid` (braids, Burau, census, twisted torus knots),
:mod:`lsf.homology` (integer homology of surgeries) and :mod:`lsf.cli`.
"""

__version__ = "0.1.0"
