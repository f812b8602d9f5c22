import logging
from typing import List, Optional

from hypernull.cli import CliMiddleware, build_parser
from hypernull.config import LOG_LEVEL


class HypernullApp:
    def __init__(self):
        self.parser = build_parser()
        self.middleware = CliMiddleware()

    def run(self, argv: Optional[List[str]] = None) -> int:
        args = self.parser.parse_args(argv)
        return self.middleware.dispatch(args.handler, args)


def create_app() -> HypernullApp:
    logging.basicConfig(
        level=LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    return HypernullApp()
