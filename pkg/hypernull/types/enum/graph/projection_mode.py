from enum import Enum


class ProjectionMode(str, Enum):
    SIMPLE = "simple"
    MULTI = "multi"
