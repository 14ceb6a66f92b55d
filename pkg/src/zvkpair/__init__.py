"""Fundamental groups of plane-curve complements from braid monodromy.

Free-group words, the Artin action of braids, Zariski-van Kampen
presentations, Tietze simplification, abelian and finite-quotient
invariants, Fox calculus with exact characteristic-variety scans, and a few
lattice / orbit calculators for the two sextics bundled as fixtures.
"""
from .words import Endomorphism, Word, commutator, invert, multiply, reduce, substitute
from .braids import BraidWord, artin_action, artin_images, braids_equal, conjugate, writhe
from .monodromy import (DecompositionTable, MonodromyPresentation, compose_from_table, load_fixture,
                        solve_deformation_exponent)
from .zvk import GroupPresentation, two_generator_presentation, projectivize, tietze_simplify, zvk_presentation
from .invariants import AbelianInvariants, FiniteGroup, abelianization, catalog, fingerprint, hom_count
from .laurent import LaurentPoly
from .alexander import (AbelianLabel, CharacterPoint, alexander_matrix, alexander_polynomial, char_variety,
                        charvar_points, evaluate, fitting_ideal, fox_derivative_abelianized)
from .pipeline import RunReport, zariski_pair

__version__ = "0.1.0"
