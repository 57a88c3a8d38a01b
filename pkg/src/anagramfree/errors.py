"""Exception types shared across the package."""


class AnagramFreeError(Exception):
    """Base class for all package errors."""


class GraphError(AnagramFreeError, ValueError):
    """Malformed graph: loops, parallel edges, bad ids, or wrong kind."""


class ColouringError(AnagramFreeError, ValueError):
    """Colouring does not match its graph, or ids are not dense."""


class InvalidPath(AnagramFreeError, ValueError):
    pass


class PathBudgetExceeded(AnagramFreeError, RuntimeError):
    """Raised instead of silently passing when path enumeration hits its cap."""


class MorphismStall(AnagramFreeError, ValueError):
    """Iterating a morphism stopped growing before the requested length."""


class PremiseViolated(AnagramFreeError, ValueError):
    """The counting premise of a lower-bound construction does not hold."""


class FormatError(AnagramFreeError, ValueError):
    """Malformed graph or colouring text file."""


class MonotonicityViolation(AnagramFreeError, AssertionError):
    """An exact k-anagram chromatic chain increased with k."""
