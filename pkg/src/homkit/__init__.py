"""homkit: relative homological algebra over 2-periodic integer complexes.

The package realizes a triangulated category concretely as 2-periodic chain
complexes of finitely generated free abelian groups, classifies morphisms
through the homological ideal of homology-phantom maps, builds projective
resolutions and derived functors, verifies universal-coefficient and Kunneth
identities against brute-force homotopy-class computations, and computes
Ext/Tor over Z[t]/(p(t)) and Z[t, 1/t], Hochschild (co)homology of the
Laurent ring, and Pimsner-Voiculescu six-term sequences.
"""

__version__ = "0.1.0"
