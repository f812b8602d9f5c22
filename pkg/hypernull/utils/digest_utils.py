import hashlib
from pathlib import Path
from typing import Dict, Iterable, Union


class DigestUtils:
    @staticmethod
    def sha256_file(path: Union[str, Path]) -> str:
        digest = hashlib.sha256()
        with open(path, "rb") as handle:
            for block in iter(lambda: handle.read(1 << 16), b""):
                digest.update(block)
        return digest.hexdigest()

    @staticmethod
    def digests(paths: Iterable[Union[str, Path]]) -> Dict[str, str]:
        return {
            str(path): DigestUtils.sha256_file(path)
            for path in paths
            if Path(path).is_file()
        }
