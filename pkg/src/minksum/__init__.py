"""Exact face numbers of Minkowski sums of two polytopes.

The sum's faces are read from the Cayley embedding of the summands.  The
package also evaluates the tight upper bounds and constructs pairs that
attain them.
"""

__version__ = "0.1.0"

from .bounds import BoundReport, minksum_max_faces
from .cayley import CayleyComplex, direct_minkowski_sum, minkowski_fvector_via_cayley
from .kernels import BACKEND
from .polytope import FaceLattice, VPolytope, convex_hull, f_vector
from .vectors import FVector, GVector, HVector
from .witness import even_witness, odd_witness

__all__ = [
    "BACKEND",
    "BoundReport",
    "CayleyComplex",
    "FVector",
    "FaceLattice",
    "GVector",
    "HVector",
    "VPolytope",
    "convex_hull",
    "direct_minkowski_sum",
    "even_witness",
    "f_vector",
    "minksum_max_faces",
    "minkowski_fvector_via_cayley",
    "odd_witness",
]
