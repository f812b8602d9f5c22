from .router import build_parser
from .middleware import CliMiddleware
