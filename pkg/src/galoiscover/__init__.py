# import project files as required
from .core import ExitCode, GaloisCoverError, InvalidArgumentError, AmbientMismatchError, CosetOverflowError, VerificationMismatchError
from .free_groups import FreeWord, GeneratorSymbol, parse_word, format_word, paper_equal
from .braids import ActionConvention, BraidWord, HalfTwistLetter, Side, StrandLabel, action, half_twist
from .monodromy import Factorization, MonodromyFactor, build_B, build_B3, build_M, full_factorization, exponent_sum
from .van_kampen import GroupPresentation, Stage, presentation_G, presentation_G1, projective_relator
from .cosets import CosetTable, Strategy, todd_coxeter
from .fp_groups import abelianization, edge_homomorphism, image_order, tietze_simplify, verify_homomorphism
from .invariants import ChernData, chern_c1sq, chern_data, classify, degeneration_params
from .verification import VerificationReport, negative_control, verify_simply_connected
