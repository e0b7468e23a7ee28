"""Text interchange records and the on-disk cache.

Every number is exact text: integers as decimal strings, rationals as
"num/den".  Records are canonical JSON (sorted keys, fixed separators), the
content hash covers the payload bytes, and cache writes go through a
temporary file plus atomic rename so concurrent writers are safe.
"""

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import DomainError

ARTIFACT_VERSION = "0.1.0"

KINDS = ("qexp", "jacobi", "kohnen", "siegel", "matrix", "basis", "report")


def encode_number(x) -> str:
    if isinstance(x, bool):
        raise DomainError("booleans are not numbers")
    if isinstance(x, int):
        return str(x)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def decode_number(s: str) -> Fraction:
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def encode_vector(vec) -> list:
    return [encode_number(c) for c in vec]


def decode_vector(val) -> list:
    return [decode_number(s) for s in val]


def _canonical_bytes(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()


def content_hash(payload) -> str:
    return hashlib.sha256(_canonical_bytes(payload)).hexdigest()


@dataclass
class FormRecord:
    kind: str
    weight: object  # int, or "num/den" string for half-integral weights
    precision: int
    payload: dict
    construction: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown record kind {self.kind!r}")

    def to_json(self) -> str:
        doc = {
            "kind": self.kind,
            "weight": self.weight,
            "precision": self.precision,
            "payload": self.payload,
            "metadata": {
                "artifact_version": ARTIFACT_VERSION,
                "construction": self.construction,
                "content_hash": content_hash(self.payload),
            },
        }
        return json.dumps(doc, sort_keys=True, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "FormRecord":
        doc = json.loads(text)
        rec = cls(
            kind=doc["kind"],
            weight=doc["weight"],
            precision=doc["precision"],
            payload=doc["payload"],
            construction=doc.get("metadata", {}).get("construction", {}),
        )
        stated = doc.get("metadata", {}).get("content_hash")
        if stated is not None and stated != content_hash(rec.payload):
            raise DomainError("content hash mismatch: record corrupted")
        return rec

    def __eq__(self, other):
        if not isinstance(other, FormRecord):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.weight == other.weight
            and self.precision == other.precision
            and self.payload == other.payload
            and self.construction == other.construction
        )


# ----------------------------------------------------------------- disk cache


def cache_dir() -> Path:
    root = os.environ.get("MAASSLIFT_CACHE_DIR", ".maasslift-cache")
    return Path(root)


def cache_key(construction: dict) -> str:
    return hashlib.sha256(_canonical_bytes(construction)).hexdigest()[:32]


def cache_get(construction: dict):
    path = cache_dir() / f"{cache_key(construction)}.json"
    try:
        rec = FormRecord.from_json(path.read_text())
    except (OSError, ValueError, KeyError, DomainError):
        return None
    if rec.construction != construction:
        return None
    return rec


def cache_put(construction: dict, record: FormRecord) -> None:
    d = cache_dir()
    d.mkdir(parents=True, exist_ok=True)
    path = d / f"{cache_key(construction)}.json"
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(record.to_json())
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
