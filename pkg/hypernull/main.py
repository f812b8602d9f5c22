from typing import List, Optional

from hypernull.app_instance import create_app


def main(argv: Optional[List[str]] = None) -> int:
    return create_app().run(argv)
