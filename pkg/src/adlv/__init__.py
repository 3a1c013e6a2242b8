"""Combinatorics of affine Deligne-Lusztig varieties for GL_n.

Extended affine Weyl group arithmetic, admissible sets, length positive
elements, non-emptiness of X_w(b) for basic b, Deligne-Lusztig reduction
trees and the positive Coxeter type classification.
"""

from adlv.roots import (
    Root, dominance_leq, dominize, fundamental, is_dominant, pairing, rho,
)
from adlv.weyl import (
    Element, identity, from_word, reduced_word, simple, tau, translation,
    length, kappa, supp, supp_sigma, ad_tau, longest_parabolic,
)

__version__ = "0.1.0"

__all__ = [
    "Root", "dominance_leq", "dominize", "fundamental", "is_dominant",
    "pairing", "rho",
    "Element", "identity", "from_word", "reduced_word", "simple", "tau",
    "translation", "length", "kappa", "supp", "supp_sigma", "ad_tau",
    "longest_parabolic",
]
