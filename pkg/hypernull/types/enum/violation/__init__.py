from .violation_kind import ViolationKind
