"""Errors raised by Hopf structure maps."""


class PairingError(ValueError):
    """The two arguments of a pairing do not come from paired algebras."""
