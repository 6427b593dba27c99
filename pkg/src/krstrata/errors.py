"""Shared exception types.

ValueError is raised for invalid caller input everywhere in the package;
InternalInvariantError signals that a computed result violated one of the
cross-checks the code re-verifies at runtime (a bug, never user error).
The CLI maps the former to exit code 2 and the latter to exit code 3.
"""


class InternalInvariantError(RuntimeError):
    pass
