"""Finite involutory latin quandles: translations, middle-translation
representations, spins, and exhaustive verification of their identities."""
from .core import (CayleyTable, Permutation, TranslationFamily, compose, invert,
                   is_latin, parse_table, read_table, serialize_table, write_table)
from .errors import (NotAGroupError, NotLatinError, ParseError, PreconditionError,
                     QuandleError, RecoveryError, SizeMismatchError, TooLargeError)
from .properties import (LAWS, PropertyReport, Verdict, involutory_profile,
                         is_abelian_quandle, is_commutative, is_homomorphism,
                         is_latin_quandle, is_quandle)

__all__ = [
    "CayleyTable", "Permutation", "TranslationFamily", "compose", "invert", "is_latin",
    "parse_table", "read_table", "serialize_table", "write_table",
    "QuandleError", "SizeMismatchError", "ParseError", "NotLatinError", "NotAGroupError",
    "PreconditionError", "TooLargeError", "RecoveryError",
    "LAWS", "PropertyReport", "Verdict", "involutory_profile", "is_abelian_quandle",
    "is_commutative", "is_homomorphism", "is_latin_quandle", "is_quandle",
]
__version__ = "0.1.0"
