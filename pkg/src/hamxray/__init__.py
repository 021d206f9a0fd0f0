"""X-rays of Hamiltonian 2-torus spaces, equivariant symplectic cuts, and
Tolman's obstruction to invariant compatible Kähler structures.

All coordinates are exact rationals.
"""

__version__ = "0.1.0"
