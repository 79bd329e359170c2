"""
Genome JSON documents and LUT CSV export.
"""

import csv
from pathlib import Path

from pydantic import TypeAdapter, ValidationError

from src.core.exceptions import GenomeException

from .genome import Genome
from .membership import MembershipFunction
from .transform import TransferLut

_functions_adapter = TypeAdapter(list[MembershipFunction])


def genome_to_json(genome: Genome) -> str:
    """Array of {family, p1, p2, v} objects."""
    return _functions_adapter.dump_json(list(genome.functions), indent=2).decode() + "\n"


def genome_from_json(document: str | bytes) -> Genome:
    try:
        functions = _functions_adapter.validate_json(document)
    except ValidationError as e:
        raise GenomeException(f"malformed genome document: {e}") from e
    return Genome.from_functions(functions)


def save_genome(genome: Genome, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(genome_to_json(genome), encoding="utf-8")
    return path


def load_genome(path: str | Path) -> Genome:
    path = Path(path)
    if not path.exists():
        raise GenomeException(f"genome file not found: {path}")
    return genome_from_json(path.read_bytes())


def save_lut_csv(lut: TransferLut, path: str | Path) -> Path:
    """One `index,value` row per input level."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerows((z, int(lut.table[z])) for z in range(256))
    return path


def load_lut_csv(path: str | Path) -> TransferLut:
    with Path(path).open(newline="", encoding="utf-8") as handle:
        rows = sorted((int(z), int(value)) for z, value in csv.reader(handle))
    return TransferLut([value for _, value in rows])
