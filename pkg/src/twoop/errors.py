"""Exceptions shared by the structural and solving layers."""

from __future__ import annotations


class InternalProofViolation(AssertionError):
    """A claimed structural fact or cardinality bound failed on an instance.

    ``instance`` is the serialized graph on which the failure was observed,
    ``case`` the case identifier active at the time.
    """

    def __init__(self, case: str, message: str, instance: str | None = None):
        super().__init__(f"[{case}] {message}")
        self.case = case
        self.message = message
        self.instance = instance
        self.archive_path: str | None = None
