from .model import Model
from .space import Space
