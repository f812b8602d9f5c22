from .projection_mode import ProjectionMode
