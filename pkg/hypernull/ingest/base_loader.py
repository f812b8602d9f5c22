import logging
import warnings
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from hypernull.schemas import IngestConfigSchema
from hypernull.types.errors import FormatError

logger = logging.getLogger(__name__)


class BaseLoader:
    """Line-oriented reading shared by the dataset loaders."""

    def __init__(self, config: Optional[IngestConfigSchema] = None):
        self.config = config or IngestConfigSchema()
        self.dropped = 0

    @staticmethod
    def _lines(path: Union[str, Path]) -> Iterator[Tuple[int, str]]:
        """(line number, stripped text), numbered from 1."""
        with open(path, encoding="utf-8") as handle:
            for number, line in enumerate(handle, start=1):
                yield number, line.strip()

    @staticmethod
    def _parse_int(token: str, path: Union[str, Path], line: int) -> int:
        try:
            return int(token)
        except ValueError:
            raise FormatError(
                f"expected an integer, found '{token}'", str(path), line
            )

    @staticmethod
    def _parse_number(
        token: str, path: Union[str, Path], line: int
    ) -> float:
        try:
            return float(token)
        except ValueError:
            raise FormatError(
                f"expected a number, found '{token}'", str(path), line
            )

    def _read_column(
        self, path: Union[str, Path], number: bool = False
    ) -> List[float]:
        """One value per non-blank line."""
        parse = self._parse_number if number else self._parse_int
        return [
            parse(text, path, line)
            for line, text in self._lines(path)
            if text
        ]

    def _resolve_duplicates(
        self, members: Sequence, path: Union[str, Path], line: int
    ) -> Optional[list]:
        """
        Members of an edge with repeated labels handled per config.

        Returns None when the edge is dropped.
        """
        unique = list(dict.fromkeys(members))
        if len(unique) == len(members):
            return unique
        if self.config.dedupe_within_edge:
            return unique
        if self.config.drop_degenerate:
            self.dropped += 1
            message = f"{path}:{line}: dropped edge with repeated ids"
            logger.warning(message)
            warnings.warn(message, stacklevel=3)
            return None
        raise FormatError("edge repeats a node", str(path), line)
