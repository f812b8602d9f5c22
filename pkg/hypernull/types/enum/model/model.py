from enum import Enum


class Model(str, Enum):
    STUB = "stub"
    VERTEX = "vertex"
