from .choice_kind import ChoiceKind
from .profile_kind import ProfileKind, ProfileSource
