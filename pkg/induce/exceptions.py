"""Errors raised while inducing representations."""


class CharacterError(ValueError):
    """A character is malformed or not a character of the subalgebra it names."""


class InductionError(ValueError):
    """Carrier, triplet and acting element do not belong together, or a rescaling is singular."""


class LimitError(ValueError):
    """A structure constant or matrix entry has a pole at parameter value 0."""
