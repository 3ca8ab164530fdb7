"""Words with the rhythmic oddity property: tests, enumeration, bijection, counts."""

from .bijection import BinaryNecklace, RopClass, necklace_to_rop, psi, psi_inverse, rop_to_necklace
from .counting import (
    binomial,
    count_L,
    count_R,
    cycle_index_coeffs,
    euler_phi,
    moebius,
    necklace_coeff_prime,
    total_L,
    total_R,
)
from .enumeration import (
    binary_necklaces,
    lyndon_rop_words,
    lyndon_words,
    rop_classes,
    s_rap_classes,
    s_rop_classes,
)
from .predicates import (
    Pairing,
    equal_height_split,
    has_d_pairing,
    is_rop,
    is_rop_lemma1,
    is_rop_pairing,
    is_rop_stepread,
    is_s_rap,
    is_s_rop,
)
from .words import (
    CyclicClass,
    Word,
    height,
    is_lyndon,
    least_rotation,
    letter_counts,
    parse_word,
    period,
    rotate,
    step_read,
    word_str,
)

__version__ = "0.1.0"
