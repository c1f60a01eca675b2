"""FASTA parsing, label manifests, and genomic fragment sampling."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np

logger = logging.getLogger(__name__)

# IUPAC nucleotide codes accepted on input. U is normalized to T at parse
# time; everything outside A/C/G/T is kept but never counted downstream.
IUPAC_CODES = frozenset(b"ACGTNRYSWKMBDHV")

_U_TO_T = bytes.maketrans(b"U", b"T")


class FastaError(ValueError):
    """Malformed or unusable FASTA input."""


class EmptyFastaError(FastaError):
    """FASTA input containing no records."""


class ManifestError(ValueError):
    """Malformed or inconsistent label manifest."""


@dataclass(frozen=True)
class Sequence:
    """A named nucleotide sequence; residues are uppercase IUPAC bytes."""

    id: str
    residues: bytes

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("sequence id must be non-empty")
        if len(self.residues) < 1:
            raise ValueError(f"sequence {self.id!r} is empty")

    def __len__(self) -> int:
        return len(self.residues)


@dataclass(frozen=True)
class LabeledDataset:
    """Sequences paired with one class label each.

    ``classes`` lists the distinct labels in first-appearance order; it is
    derived automatically when omitted. At least two classes are required.
    """

    sequences: tuple[Sequence, ...]
    labels: tuple[str, ...]
    classes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "sequences", tuple(self.sequences))
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.sequences) != len(self.labels):
            raise ValueError(
                f"{len(self.sequences)} sequences but {len(self.labels)} labels"
            )
        if not self.sequences:
            raise ValueError("dataset has no sequences")
        ids = [s.id for s in self.sequences]
        if len(set(ids)) != len(ids):
            dup = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"duplicate sequence ids: {dup}")
        if not self.classes:
            object.__setattr__(self, "classes", tuple(dict.fromkeys(self.labels)))
        else:
            object.__setattr__(self, "classes", tuple(self.classes))
        if len(set(self.classes)) != len(self.classes):
            raise ValueError("classes must be distinct")
        missing = set(self.labels) - set(self.classes)
        if missing:
            raise ValueError(f"labels outside declared classes: {sorted(missing)}")
        if len(self.classes) < 2:
            raise ValueError(
                f"labeled dataset requires >= 2 classes (got {len(self.classes)})"
            )

    def __len__(self) -> int:
        return len(self.sequences)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(s.id for s in self.sequences)

    def class_counts(self) -> dict[str, int]:
        counts = {c: 0 for c in self.classes}
        for lab in self.labels:
            counts[lab] += 1
        return counts

    def subset(self, indices) -> "LabeledDataset":
        """Dataset restricted to the given row indices (classes recomputed)."""
        idx = [int(i) for i in indices]
        return LabeledDataset(
            sequences=tuple(self.sequences[i] for i in idx),
            labels=tuple(self.labels[i] for i in idx),
        )


@dataclass(frozen=True)
class Fragment:
    """A window of a parent sequence, inheriting the parent's class label."""

    parent_id: str
    offset: int
    residues: bytes
    label: str

    def __post_init__(self) -> None:
        if self.offset < 0:
            raise ValueError("fragment offset must be >= 0")
        if not self.residues:
            raise ValueError("fragment has no residues")

    def __len__(self) -> int:
        return len(self.residues)


def parse_fasta(path: str | Path) -> list[Sequence]:
    """Read a FASTA file into a list of Sequence records.

    Record ids are the header text up to the first whitespace. Sequence
    lines may wrap; they are uppercased, U is mapped to T, and CR/LF is
    stripped.

    Raises:
        EmptyFastaError: file contains no records.
        FastaError: empty record, duplicate id, or non-IUPAC residues.
        OSError: file cannot be read.
    """
    p = Path(path)
    records: list[Sequence] = []
    seen: set[str] = set()
    cur_id: str | None = None
    chunks: list[bytes] = []

    def close_record() -> None:
        if cur_id is None:
            return
        residues = b"".join(chunks)
        if not residues:
            raise FastaError(f"{p}: record {cur_id!r} has an empty sequence")
        records.append(Sequence(id=cur_id, residues=residues))

    with p.open("rb") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith(b">"):
                close_record()
                header = line[1:].decode("utf-8", "replace").strip()
                if not header:
                    raise FastaError(f"{p}:{lineno}: record with empty header")
                cur_id = header.split()[0]
                if cur_id in seen:
                    raise FastaError(f"{p}: duplicate sequence id {cur_id!r}")
                seen.add(cur_id)
                chunks = []
            else:
                if cur_id is None:
                    raise FastaError(f"{p}:{lineno}: sequence data before first '>'")
                chunk = line.upper().translate(_U_TO_T)
                bad = set(chunk) - IUPAC_CODES
                if bad:
                    shown = ", ".join(chr(b) for b in sorted(bad))
                    raise FastaError(
                        f"{p}:{lineno}: non-IUPAC residue(s) {shown} in {cur_id!r}"
                    )
                chunks.append(chunk)
    close_record()
    if not records:
        raise EmptyFastaError(f"{p}: no FASTA records found")
    return records


def write_fasta(path: str | Path, sequences, width: int = 70) -> None:
    """Write sequences as FASTA, wrapping lines at ``width`` residues."""
    with Path(path).open("wb") as fh:
        for seq in sequences:
            fh.write(b">" + seq.id.encode() + b"\n")
            for i in range(0, len(seq.residues), width):
                fh.write(seq.residues[i : i + width] + b"\n")


def load_labels(
    path: str | Path,
    sequences,
    *,
    delimiter: str = "\t",
    has_header: bool = False,
    strict: bool = True,
) -> LabeledDataset:
    """Attach class labels from a two-column (id, label) manifest.

    Every sequence must appear exactly once in the manifest. Manifest ids
    with no matching sequence raise in strict mode and are logged as
    warnings otherwise. Classes are collected in first-appearance order
    over the sequence list.
    """
    p = Path(path)
    mapping: dict[str, str] = {}
    with p.open("r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            if has_header and lineno == 1:
                continue
            line = raw.rstrip("\r\n")
            if not line.strip():
                continue
            parts = line.split(delimiter)
            if len(parts) < 2:
                raise ManifestError(
                    f"{p}:{lineno}: expected 2 {delimiter!r}-separated columns"
                )
            seq_id, label = parts[0].strip(), parts[1].strip()
            if not seq_id or not label:
                raise ManifestError(f"{p}:{lineno}: empty id or label")
            if seq_id in mapping:
                raise ManifestError(f"{p}: duplicate manifest id {seq_id!r}")
            mapping[seq_id] = label

    sequences = list(sequences)
    missing = [s.id for s in sequences if s.id not in mapping]
    if missing:
        raise ManifestError(f"{p}: no label for sequence(s) {missing}")
    extra = sorted(set(mapping) - {s.id for s in sequences})
    if extra:
        if strict:
            raise ManifestError(f"{p}: manifest id(s) with no sequence: {extra}")
        for seq_id in extra:
            logger.warning("%s: manifest id %r has no matching sequence", p, seq_id)

    labels = tuple(mapping[s.id] for s in sequences)
    return LabeledDataset(sequences=tuple(sequences), labels=labels)


def _proportional_quotas(demand: int, pool_sizes: list[int]) -> list[int]:
    """Split ``demand`` across pools proportionally to their sizes.

    Largest-remainder rounding; ties broken by position. Quotas never
    exceed the pool sizes because demand <= sum(pool_sizes).
    """
    total = sum(pool_sizes)
    exact = [demand * v / total for v in pool_sizes]
    base = [int(q) for q in exact]
    leftover = demand - sum(base)
    order = sorted(range(len(exact)), key=lambda i: (base[i] - exact[i], i))
    for i in order[:leftover]:
        base[i] += 1
    return base


def sample_fragments(
    dataset: LabeledDataset,
    fragment_length: int,
    max_per_class: int,
    seed: int,
) -> list[Fragment]:
    """Sample fixed-length fragments from the dataset's sequences.

    Per class, min(max_per_class, total valid offsets) fragments are drawn
    uniformly at random without replacement, spread across the class's
    sequences proportionally to their number of valid start offsets.
    Sequences shorter than ``fragment_length`` contribute nothing; a class
    with no long-enough sequence is logged and yields zero fragments.
    Output is deterministic given the seed.
    """
    if fragment_length < 1:
        raise ValueError(f"fragment_length must be >= 1, got {fragment_length}")
    if max_per_class < 1:
        raise ValueError(f"max_per_class must be >= 1, got {max_per_class}")
    rng = np.random.default_rng(seed)
    out: list[Fragment] = []
    for cls in dataset.classes:
        members = [
            seq
            for seq, lab in zip(dataset.sequences, dataset.labels)
            if lab == cls
        ]
        valid = [max(0, len(seq) - fragment_length + 1) for seq in members]
        pool = sum(valid)
        if pool == 0:
            logger.warning(
                "class %r: every sequence is shorter than %d nt, no fragments",
                cls,
                fragment_length,
            )
            continue
        demand = min(max_per_class, pool)
        quotas = _proportional_quotas(demand, valid)
        for seq, v, q in zip(members, valid, quotas):
            if q == 0:
                continue
            offsets = np.sort(rng.choice(v, size=q, replace=False))
            for off in offsets:
                off = int(off)
                out.append(
                    Fragment(
                        parent_id=seq.id,
                        offset=off,
                        residues=seq.residues[off : off + fragment_length],
                        label=cls,
                    )
                )
    return out
