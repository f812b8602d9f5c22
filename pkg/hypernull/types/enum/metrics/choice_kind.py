from enum import Enum


class ChoiceKind(str, Enum):
    UNIFORM = "uniform"
    TOP2 = "top2"
    TOPBOTTOM = "topbottom"
