import logging
import sys
from argparse import Namespace
from pathlib import Path
from typing import Callable, List, Optional

from pydantic import ValidationError

from hypernull.cli.inputs import input_paths
from hypernull.services import RunManifestService
from hypernull.types.enum.exit_code import ExitCode
from hypernull.types.errors import HypernullError

logger = logging.getLogger(__name__)

Handler = Callable[[Namespace], Optional[List[Path]]]


class CliMiddleware:
    """Runs a subcommand and maps its failures to exit codes."""

    def dispatch(self, handler: Handler, args: Namespace) -> int:
        manifest = RunManifestService(
            args.command, vars(args), input_paths(args)
        )
        artifacts: List[Path] = []
        try:
            artifacts = handler(args) or []
            exit_code = ExitCode.OK
        except HypernullError as e:
            self._report(e.detail)
            exit_code = e.exit_code
        except FileNotFoundError as e:
            self._report(f"no such file: {e.filename}")
            exit_code = ExitCode.INPUT_ERROR
        except ValidationError as e:
            self._report(f"invalid input: {e}")
            exit_code = ExitCode.INPUT_ERROR
        except Exception as e:
            logger.error(
                f"Unexpected error occurred: {str(e)} in {args.command}",
                exc_info=True,
            )
            exit_code = ExitCode.INVARIANT_VIOLATION
        manifest.write(artifacts, exit_code.value)
        return exit_code.value

    @staticmethod
    def _report(message: str) -> None:
        logger.error(message)
        print(f"error: {message}", file=sys.stderr)
