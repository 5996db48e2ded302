"""Exception types shared across the package."""


class PosetError(Exception):
    """Base class for all errors raised by this package."""


class ZeroSizeError(PosetError):
    """A poset must contain at least one element."""


class SizeCapError(PosetError):
    """Input exceeds the size cap of the requested operation."""


class CycleError(PosetError):
    """The given relations are not acyclic (closure would break antisymmetry)."""


class DuplicateValueError(PosetError):
    """Permutation input contains a repeated value."""


class AlreadyComparableError(PosetError):
    """Attempt to orient a pair that is already comparable."""


class CapExceededError(PosetError):
    """Extension enumeration would exceed the configured cap."""


class ChainError(PosetError):
    """Operation is undefined on chains (total orders)."""


class ArityMismatchError(PosetError):
    """Number of components does not match the base poset size."""


class ComponentError(PosetError):
    """Elements do not belong to the expected component of a lexicographic sum."""


class InvalidWitnessError(PosetError):
    """A gold-partition witness failed independent re-verification."""


class RemarkViolationError(PosetError):
    """Locality of the lexicographic sum was violated (internal bug)."""
