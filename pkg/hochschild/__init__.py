"""Exact Groebner bases, Milnor algebras and Hochschild (co)homology of hypersurfaces."""
