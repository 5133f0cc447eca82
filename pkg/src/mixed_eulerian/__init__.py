"""Exact type A and type B mixed Eulerian numbers: C-permutation enumeration,
the deletion recursion, and a volume-polynomial oracle, with an identity suite."""

from .core import (
    Division,
    admissible_elements_A,
    admissible_elements_B,
    delete_A,
    delete_B,
    is_subdiagonal,
    is_superdiagonal,
    make_division,
    parse_composition,
)
from .counting import (
    all_compositions,
    catalan,
    eulerian,
    eulerian_r,
    mixed_eulerian,
    mixed_eulerian_A,
    mixed_eulerian_B,
)
from .oracle import extract_mixed_eulerian, volume_poly, volume_poly_A, volume_poly_B
from .permutations import (
    enumerate_A,
    enumerate_B,
    index_function,
    is_c_permutation_A,
    is_c_permutation_B,
)
from .polynomial import MVPoly

__version__ = "0.1.0"
