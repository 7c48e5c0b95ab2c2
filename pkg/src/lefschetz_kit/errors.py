"""Shared exception types.

Input validation failures raise plain ValueError everywhere in the package.
The two classes here cover the other documented failure modes: refusing a
computation that would exceed a resource guard, and detecting that two
independent computations of the same quantity disagree.
"""

from __future__ import annotations


class GuardRefusal(RuntimeError):
    """Raised when a requested computation exceeds a hard resource guard."""


class InternalFault(RuntimeError):
    """Raised when two independent routes to the same answer disagree.

    This never indicates bad input. It means the package contradicted
    itself and no result can be trusted until the cause is found.
    """
