"""Domain and ballot file codecs."""

from src.infrastructure.serialization.loader import (
    DocumentLoader,
    dump_json,
    load_ballots,
    load_domain,
    write_json,
)
from src.infrastructure.serialization.schemas import BallotsFile, DomainFile, parse_fraction

__all__ = [
    "BallotsFile",
    "DocumentLoader",
    "DomainFile",
    "dump_json",
    "load_ballots",
    "load_domain",
    "parse_fraction",
    "write_json",
]
