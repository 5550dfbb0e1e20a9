# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""Exception hierarchy shared by every hopf_adams module."""


class HopfError(Exception):
    """Base class for all errors raised by hopf_adams."""


class RankMismatchError(HopfError):
    """Two multidegrees with different grading ranks were combined."""


class AlphabetMismatchError(HopfError):
    """Two words over different alphabets were compared."""


class WordError(HopfError):
    """A word does not satisfy the precondition of an operation."""


class DegreeOverflowError(HopfError):
    """A computation would leave the truncation bound of an algebra."""


class MissingImageError(HopfError):
    """A letter has no image under an evaluation map."""


class GenerationError(HopfError):
    """A generator list does not generate the algebra within the bound."""


class CharacteristicError(HopfError):
    """A power of an irreducible Lyndon word became reducible.

    This only happens in positive characteristic, which is not supported.
    """


class BasisError(HopfError):
    """A family of elements fails to be a basis of a degree stratum."""


class NonSquareMatrixError(HopfError):
    """A square matrix was expected."""


class BoundMismatchError(HopfError):
    """Graded maps or contexts with incompatible bounds were combined."""


class ConnectednessError(HopfError):
    """The degree 0 stratum is not one dimensional."""


class HilbertInversionError(HopfError):
    """A Hilbert series is not the series of a connected graded Hopf algebra."""


class CacheError(HopfError):
    """A cache entry could not be read or written."""


class SchemaError(HopfError):
    """A JSON document does not follow the expected schema.

    Parameters
    ----------
    msg: str
        Description of the violation.
    pointer: str
        JSON pointer to the offending entry.

    """

    def __init__(self: "SchemaError", msg: str, pointer: str = "") -> None:
        """Initialize the error with a JSON pointer."""
        self.pointer = pointer
        super().__init__(f"{pointer or '/'}: {msg}")


class SubsequenceError(HopfError):
    """A sorted sequence is not a subsequence of another."""


class ConfigError(HopfError):
    """A command line parameter is invalid."""
