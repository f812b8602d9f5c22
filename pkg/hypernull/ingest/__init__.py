from .base_loader import BaseLoader
from .benson_loader import BensonLoader, load_benson
from .edge_list_loader import EdgeListLoader, load_edge_list
from .synth import synth, toy_copies, reconcile_sizes, TOY_EDGES
