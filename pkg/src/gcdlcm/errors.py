"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An input value is outside the domain an operation is defined on."""


class InfeasibleError(Exception):
    """No solution exists; carries a small certificate of why.

    For cover instances the certificate is one universe element contained
    in no set; for circulant graphs it is the gcd > 1 witnessing the
    disconnection.
    """

    def __init__(self, message: str, certificate: dict | None = None):
        super().__init__(message)
        self.certificate = certificate or {}


class CapExceededError(Exception):
    """A configurable size cap was exceeded; the call is refused rather
    than risking an accidental exponential or memory blowup."""
