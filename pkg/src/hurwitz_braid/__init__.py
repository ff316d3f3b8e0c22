"""Braid group computations and Hurwitz-equivalence certificates for factorizations of the full twist."""

from .braid_core import (
    BraidWord,
    Permutation,
    concat,
    conjugate,
    delta_squared_factorization,
    free_reduce,
    half_twist,
    invert,
    permutation_image,
    word_from_text,
)
from .errors import BudgetExhausted, CertificateError, NotEquivalent, ParseError
from .frames import (
    Frame,
    FrameFactorization,
    conj_certificate,
    frame_elements,
    main_theorem_certificate,
    one_conj_certificate,
    pi2_shift_certificate,
    pi_shift_certificate,
    realize,
    same_frame_certificate,
)
from .garside import NormalForm, equal, normal_form, positive_conjugator, positive_decomposition
from .hurwitz import Certificate, Factorization, HurwitzMove, apply_move, orbit_search, replay, verify_certificate
from .rewrite import RelationStep, apply_relation, positive_he_certificate, rewrite_path, step_to_moves

__version__ = "0.1.0"
