"""Exact computations for plumbings of twisted annuli along matched trees."""
from .errors import (EdgesNotOnDirectedPath, InadmissibleFraming,
                     MismatchedUnderlying, NoPerfectMatching, NotATree,
                     NotBipartite, ParseError, PlumbingError, UnknownVertex,
                     WrongColor, ZeroFraming)
from .tree import (B, W, MatchedTree, above_set, below_set, build,
                   canonical_code, chain_tree, covers_one, directed_path,
                   enumerate_matched_trees, find_matching, leq, t1)
from .linalg import IntMatrix, IntPolynomial, bareiss_det, signature
from .form import (FramedPlumbing, all_labelings, alexander_polynomial,
                   check_admissible, framed, intersection_matrix,
                   knot_determinant, knot_signature, seifert_matrix,
                   surface_genus)
from .pairing import (pairing_by_conjugation, pairing_closed_form,
                      path_edge_counts, phi_inverse_matrix, phi_matrix)
from .classify import (SpinCBox, count_classes, sfh_torus_rank,
                       spin_c_support, surfaces_equivalent)
from .fileformat import export_dot, load, parse, serialize

__version__ = "0.1.0"
