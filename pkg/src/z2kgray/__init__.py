"""Z_2k-codes as binary propelinear codes through the distance-preserving Gray map."""
from .algebra import (
    Residue, ZkVector, lee_distance, lee_weight, residue_add, vector_add, vector_lee_weight,
    vector_negate,
)
from .errors import (
    DegenerateCode, EmptyCode, LengthMismatch, LimitExceeded, ModulusMismatch, NotACodeword,
    NotApplicable, NotInImage, OutOfRange, ParityError, SizeLimitExceeded, Z2kError,
)
from .gray import (
    GrayTable, big_phi, big_phi_inverse, gray_product, gray_table, mixed_phi, mixed_pi, phi,
    phi_inverse, pi_x, sigma,
)
from .lattice import (
    GeneratorSpec, MixedGroupType, SpannedCode, info_rates, min_hamming_distance_binary,
    min_lee_distance, minimize_type, span,
)
from .perfect import (
    classify_if_perfect, hamming_code, hamming_code_spec, is_one_perfect, large_modulus_obstruction,
)
from .propelinear import (
    BinaryWord, CoordinatePermutation, PropelinearCode, check_hamming_compatible, check_propelinear,
    check_translation_invariant, codeword_inverse, hamming_distance, star, translation_witness,
)
from .search import (
    CandidateGrayMap, enumerate_gray_maps, is_hamming_compatible_map, parity_report,
    uniqueness_report,
)

__version__ = "0.1.0"
