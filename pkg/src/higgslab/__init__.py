"""higgslab: exact chart-level spectral data for SO(p+q,p) Higgs bundles.

Subpackages and modules
-----------------------
exactcore
    Field, polynomial, rational-function and polynomial-matrix arithmetic
    with Hermite/Smith normal forms.
spectral
    Spectral coefficients, the covers S, S-bar and C, regularity checks and
    symmetric functions.
higgsmodel
    Orthogonal and symplectic Higgs chart data and the Cayley chain.
langlands
    Quadratic and equivariant bundles, the invariant direct image and the
    extension that glues both halves together.
splitbuilder
    Explicit SO(p+1,p) bundles from a sign assignment on the branch points.
charclasses
    GF(2) quadratic refinements, Arf invariants and Stiefel-Whitney formulas.
census
    Closed-form genus, dimension and component counts.
"""
__version__ = "0.1.0"
