"""Reading and writing domain and ballot files."""

import json
from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from src.domain.exceptions.domain_exceptions import DomainError, MalformedInputError
from src.infrastructure.logging import get_logger
from src.infrastructure.serialization.schemas import BallotsFile, DomainFile

logger = get_logger(__name__)


class DocumentLoader:
    """Loader for JSON (or YAML) input documents."""

    def __init__(self, path: Path | str) -> None:
        """Initialize loader with path to the input file.

        Args:
            path: Path to a JSON or YAML document
        """
        self.path = Path(path)

    def load(self) -> Any:
        """Parse the raw document.

        Raises:
            MalformedInputError: If the file is missing or unparsable
        """
        if not self.path.exists():
            raise MalformedInputError(f"Input file not found: {self.path}")
        try:
            with open(self.path, encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise MalformedInputError(f"Failed to parse {self.path}: {e}") from e
        if not isinstance(data, dict):
            raise MalformedInputError(f"{self.path} must hold a mapping at the top level")
        logger.debug("Loaded document", path=str(self.path), keys=sorted(data))
        return data

    def load_domain_file(self) -> DomainFile:
        """Load and validate a domain file.

        Raises:
            MalformedInputError: If the document does not match the schema
        """
        try:
            return DomainFile.model_validate(self.load())
        except ValidationError as e:
            raise MalformedInputError(f"Invalid domain file {self.path}: {e}") from e

    def load_ballots_file(self) -> BallotsFile:
        """Load and validate a ballots file.

        Raises:
            MalformedInputError: If the document does not match the schema
        """
        try:
            return BallotsFile.model_validate(self.load())
        except ValidationError as e:
            raise MalformedInputError(f"Invalid ballots file {self.path}: {e}") from e


def load_domain(path: Path | str) -> DomainFile:
    """Load a domain file and check it builds a valid domain.

    Raises:
        MalformedInputError: If the file is unreadable or holds invalid preferences
    """
    document = DocumentLoader(path).load_domain_file()
    try:
        document.to_domain()
    except DomainError as e:
        raise MalformedInputError(f"Invalid domain in {path}: {e}") from e
    return document


def load_ballots(path: Path | str) -> BallotsFile:
    """Load a ballots file.

    Raises:
        MalformedInputError: If the file is unreadable or does not match the schema
    """
    return DocumentLoader(path).load_ballots_file()


def dump_json(data: Any) -> str:
    """Render command output: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_json(data: Any, path: Path | str) -> None:
    """Write command output to a UTF-8 file."""
    Path(path).write_text(dump_json(data), encoding="utf-8")
