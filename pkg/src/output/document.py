"""Coloring documents: the on-disk JSON form of a coloring.

Colors are stored flat in canonical edge order. Nothing is written without
passing the verifier first.
"""

from __future__ import annotations

import logging
from enum import Enum
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.config import BASES_DIR
from src.constructions.coloring import AnyColoring, CompleteColoring, EdgeColoring
from src.errors import InvalidSpec, MalformedDocument, NotVerified
from src.graphs.base import PartiteSpec
from src.verifier.checks import verify

logger = logging.getLogger(__name__)


class DocumentKind(str, Enum):
    KPARTITE = "kpartite"
    COMPLETE = "complete"


class ProvenanceSource(str, Enum):
    MAX_SPAN = "theorem3"
    LIFT = "lift"
    BLOWUP = "blowup"
    SOLVER = "solver"
    COMPRESS = "compress"
    EXTERNAL = "external"


class Provenance(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    source: ProvenanceSource
    parent: str | None = None
    notes: str = ""


class ColoringDocument(BaseModel):
    """A serialized coloring of K_n^k (kind kpartite) or K_m (kind complete)."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    format_version: Literal["1"] = "1"
    kind: DocumentKind
    k: int | None = Field(default=None, ge=1)
    n: int | None = Field(default=None, ge=1)
    m: int | None = Field(default=None, ge=2)
    t: int = Field(ge=1)
    colors: tuple[int, ...]
    provenance: Provenance | None = None

    @model_validator(mode="after")
    def _shape(self) -> ColoringDocument:
        if self.kind == DocumentKind.KPARTITE:
            if self.k is None or self.n is None or self.m is not None:
                raise ValueError("a kpartite document needs k and n and no m")
            expected = PartiteSpec(k=self.k, n=self.n).edge_count
        else:
            if self.m is None or self.k is not None or self.n is not None:
                raise ValueError("a complete document needs m and no k or n")
            expected = self.m * (self.m - 1) // 2
        if len(self.colors) != expected:
            raise ValueError(f"{len(self.colors)} colors for {expected} edges")
        # an interval coloring never uses more colors than there are edges
        if self.t > expected:
            raise ValueError(f"t={self.t} exceeds the {expected} edges")
        return self

    @property
    def label(self) -> str:
        if self.kind == DocumentKind.KPARTITE:
            return str(PartiteSpec(k=self.k, n=self.n))
        return f"K_{self.m}"

    @classmethod
    def from_coloring(cls, coloring: AnyColoring, provenance: Provenance | None = None) -> ColoringDocument:
        if isinstance(coloring, EdgeColoring):
            return cls(
                kind=DocumentKind.KPARTITE,
                k=coloring.spec.k,
                n=coloring.spec.n,
                t=coloring.t,
                colors=coloring.colors,
                provenance=provenance,
            )
        if isinstance(coloring, CompleteColoring):
            return cls(
                kind=DocumentKind.COMPLETE,
                m=coloring.m,
                t=coloring.t,
                colors=coloring.colors,
                provenance=provenance,
            )
        raise InvalidSpec(f"no document format for {coloring.label}")

    def to_coloring(self) -> EdgeColoring | CompleteColoring:
        if self.kind == DocumentKind.KPARTITE:
            return EdgeColoring(spec=PartiteSpec(k=self.k, n=self.n), t=self.t, colors=self.colors)
        return CompleteColoring(m=self.m, t=self.t, colors=self.colors)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True) + "\n"


def parse_document(text: str, source: str = "<string>") -> ColoringDocument:
    try:
        return ColoringDocument.model_validate_json(text)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "document"
        raise MalformedDocument(f"{source}: {where}: {first['msg']}") from exc


def read_document(path: Path) -> ColoringDocument:
    """Read and validate a document; any failure is a MalformedDocument."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise MalformedDocument(f"cannot read {path}: {exc}") from exc
    return parse_document(text, source=str(path))


def write_document(
    coloring: AnyColoring,
    path: Path,
    provenance: Provenance | None = None,
) -> Path:
    """Verify, then write. Returns the written path."""
    report = verify(coloring)
    if not report.passed:
        raise NotVerified(
            f"refusing to write {coloring.label} with t={coloring.t}: "
            f"{len(report.violations)} violations"
        )
    document = ColoringDocument.from_coloring(coloring, provenance)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(document.to_json(), encoding="utf-8")
    logger.debug("wrote %s (t=%d) to %s", coloring.label, coloring.t, path)
    return path


def load_builtin_bases(bases_dir: Path | None = None) -> dict[int, CompleteColoring]:
    """Verified K_m colorings shipped in data/bases/, keyed by m.

    When several files cover the same m the one with the most colors wins.
    Files that fail to parse or verify are skipped with a warning.
    """
    directory = bases_dir or BASES_DIR
    bases: dict[int, CompleteColoring] = {}
    if not directory.exists():
        return bases
    for json_file in sorted(directory.glob("*.json")):
        try:
            coloring = read_document(json_file).to_coloring()
        except MalformedDocument as exc:
            logger.warning("skipping built-in base %s: %s", json_file.name, exc)
            continue
        if not isinstance(coloring, CompleteColoring) or not verify(coloring).passed:
            logger.warning("skipping built-in base %s: not a verified K_m coloring", json_file.name)
            continue
        current = bases.get(coloring.m)
        if current is None or coloring.t > current.t:
            bases[coloring.m] = coloring
    return bases
