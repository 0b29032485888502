"""
Catalog persistence: a directory of brace files plus one JSON-lines index.

- All writes go through a single CatalogStore (one writer per catalog).
- index.jsonl holds one CatalogEntry per line, in enumeration order.
"""

import logging
from pathlib import Path
from typing import List, Optional

from ...core.config import settings
from ...core.exceptions import BraceFileError
from ...models.schemas import CatalogEntry
from ..braces.isomorphism import fingerprint
from .brace_file import read_brace_file, write_brace_file
from .invariants import compute_invariants

logger = logging.getLogger(__name__)


class CatalogStore:
    """Service for saving enumerated braces and their index."""

    def __init__(self, base_dir: Optional[str] = None, index_name: Optional[str] = None):
        """
        Initialize the catalog store.

        Args:
            base_dir: Catalog directory (default: settings.CATALOG_DIR)
            index_name: Index file name inside base_dir (default: settings.CATALOG_INDEX_NAME)
        """
        self.base_dir = Path(base_dir or settings.CATALOG_DIR)
        self.index_path = self.base_dir / (index_name or settings.CATALOG_INDEX_NAME)

    def save(self, entries: List[CatalogEntry]) -> Path:
        """
        Write every entry's brace file and append the entries to the index.

        Returns:
            Path of the index file
        """
        self.base_dir.mkdir(parents=True, exist_ok=True)
        lines = []
        for entry in entries:
            if entry.brace is None:
                raise BraceFileError(f"entry {entry.path} carries no brace to write")
            write_brace_file(self.base_dir / entry.path, entry.brace, comments=[f"fingerprint {entry.fingerprint}"])
            lines.append(entry.model_dump_json())

        replaced = {e.path for e in entries}
        kept = [line for line in self._read_lines() if CatalogEntry.model_validate_json(line).path not in replaced]
        with open(self.index_path, "w", encoding="utf-8", newline="\n") as f:
            for line in kept + lines:
                f.write(line + "\n")
        logger.info(f"Saved {len(entries)} braces to {self.base_dir}")
        return self.index_path

    def _read_lines(self) -> List[str]:
        if not self.index_path.exists():
            return []
        return [line for line in self.index_path.read_text(encoding="utf-8").splitlines() if line.strip()]

    def load_entries(self, with_braces: bool = False) -> List[CatalogEntry]:
        entries = [CatalogEntry.model_validate_json(line) for line in self._read_lines()]
        if with_braces:
            entries = [e.model_copy(update={"brace": read_brace_file(self.base_dir / e.path)}) for e in entries]
        return entries

    def recompute(self, entry: CatalogEntry) -> CatalogEntry:
        """Rebuild an entry from its file alone (the fingerprint comes from the canonical form)."""
        brace = read_brace_file(self.base_dir / entry.path)
        return CatalogEntry(
            path=entry.path,
            fingerprint=fingerprint(brace),
            invariants=compute_invariants(brace),
            brace=brace,
        )
