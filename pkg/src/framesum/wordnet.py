"""Loader and query layer for Princeton WordNet 3.x plain-text database files.

Only the noun and verb databases are consumed, and only the hypernym and
hyponym/troponym pointers (``@``, ``@i``, ``~``, ``~i``; instance pointers are
folded into their plain counterparts).  The loaded :class:`Lexicon` is
immutable and safe to share across threads.

File grammar (subset), one record per line, license header lines start with
two spaces:

* ``index.{noun,verb}``::

    lemma pos synset_cnt p_cnt [ptr_symbol...] sense_cnt tagsense_cnt
    synset_offset [synset_offset...]

* ``data.{noun,verb}``::

    synset_offset lex_filenum ss_type w_cnt word lex_id [word lex_id...]
    p_cnt [ptr...] ... | gloss

  where each ptr is ``ptr_symbol synset_offset pos source/target`` and
  ``w_cnt``/``lex_id`` are hexadecimal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

__all__ = [
    "Pos",
    "Relation",
    "SynsetId",
    "Synset",
    "Lexicon",
    "LexiconError",
    "LexiconFormatError",
    "DanglingPointerError",
    "normalize_lemma",
    "load_lexicon",
    "load_wordnet_dir",
    "fixture_wordnet_dir",
    "synsets_of",
    "expand_one_level",
    "check_pointer_symmetry",
]


class Pos(str, Enum):
    """Part of speech of a synset; only nouns and verbs are modeled."""

    NOUN = "n"
    VERB = "v"


class Relation(str, Enum):
    """One-level taxonomy pointers.  HYPONYM doubles as troponym for verbs."""

    HYPERNYM = "hypernym"
    HYPONYM = "hyponym"


# Pointer symbols that survive parsing; everything else is skipped.
_POINTER_RELATIONS = {
    "@": Relation.HYPERNYM,
    "@i": Relation.HYPERNYM,
    "~": Relation.HYPONYM,
    "~i": Relation.HYPONYM,
}

_INVERSE = {Relation.HYPERNYM: Relation.HYPONYM, Relation.HYPONYM: Relation.HYPERNYM}

# (pos, offset) uniquely identifies a synset.
SynsetId = tuple[Pos, int]


class LexiconError(Exception):
    """Base error for lexicon loading and lookup problems."""


class LexiconFormatError(LexiconError):
    """A database line that does not conform to the wndb grammar."""

    def __init__(self, path: str, lineno: int, field: str, message: str):
        self.path = path
        self.lineno = lineno
        self.field = field
        super().__init__(f"{path}:{lineno}: bad {field}: {message}")


class DanglingPointerError(LexiconError):
    """A relation or index entry whose target synset does not exist."""


@dataclass(frozen=True)
class Synset:
    """One synset: its offset, part of speech, lemmas, and outgoing pointers."""

    offset: int
    pos: Pos
    lemmas: tuple[str, ...]
    relations: tuple[tuple[Relation, int, Pos], ...]

    @property
    def id(self) -> SynsetId:
        return (self.pos, self.offset)


class Lexicon:
    """Immutable in-memory view of the noun and verb databases.

    ``synsets`` maps (pos, offset) to :class:`Synset`; ``index`` maps
    (pos, lemma) to the lemma's sense offsets in file order.
    """

    def __init__(
        self,
        synsets: dict[SynsetId, Synset],
        index: dict[tuple[Pos, str], tuple[int, ...]],
    ):
        self._synsets = MappingProxyType(dict(synsets))
        self._index = MappingProxyType(dict(index))

    @property
    def synsets(self) -> Mapping[SynsetId, Synset]:
        return self._synsets

    @property
    def index(self) -> Mapping[tuple[Pos, str], tuple[int, ...]]:
        return self._index

    def synset(self, pos: Pos, offset: int) -> Synset:
        return self._synsets[(pos, offset)]

    def count(self, pos: Pos) -> int:
        return sum(1 for p, _ in self._synsets if p is pos)

    def __repr__(self) -> str:
        return (
            f"Lexicon(nouns={self.count(Pos.NOUN)}, verbs={self.count(Pos.VERB)})"
        )


def normalize_lemma(lemma: str) -> str:
    """Lowercase and replace spaces with underscores, per the index convention."""
    return lemma.strip().lower().replace(" ", "_")


def _is_header(line: str) -> bool:
    return line.startswith("  ")


def _parse_offset(token: str, path: str, lineno: int, field: str) -> int:
    if len(token) != 8 or not token.isdigit():
        raise LexiconFormatError(path, lineno, field, f"expected 8-digit offset, got {token!r}")
    return int(token)


def _parse_data_file(path: Path, pos: Pos) -> dict[int, Synset]:
    synsets: dict[int, Synset] = {}
    with open(path, encoding="latin-1") as handle:
        for lineno, line in enumerate(handle, start=1):
            if _is_header(line) or not line.strip():
                continue
            fields = line.split("|", 1)[0].split()
            try:
                synset = _parse_data_fields(fields, pos, str(path), lineno)
            except IndexError:
                raise LexiconFormatError(str(path), lineno, "record", "truncated line") from None
            if synset.offset in synsets:
                raise LexiconFormatError(
                    str(path), lineno, "synset_offset", f"duplicate offset {synset.offset:08d}"
                )
            synsets[synset.offset] = synset
    return synsets


def _parse_data_fields(fields: list[str], pos: Pos, path: str, lineno: int) -> Synset:
    offset = _parse_offset(fields[0], path, lineno, "synset_offset")
    ss_type = fields[2]
    if ss_type != pos.value:
        raise LexiconFormatError(path, lineno, "ss_type", f"expected {pos.value!r}, got {ss_type!r}")
    try:
        w_cnt = int(fields[3], 16)
    except ValueError:
        raise LexiconFormatError(path, lineno, "w_cnt", f"not hexadecimal: {fields[3]!r}") from None
    if w_cnt < 1:
        raise LexiconFormatError(path, lineno, "w_cnt", "synset has no words")

    lemmas: list[str] = []
    cursor = 4
    for _ in range(w_cnt):
        word = normalize_lemma(fields[cursor])
        try:
            int(fields[cursor + 1], 16)
        except ValueError:
            raise LexiconFormatError(
                path, lineno, "lex_id", f"not hexadecimal: {fields[cursor + 1]!r}"
            ) from None
        if word not in lemmas:
            lemmas.append(word)
        cursor += 2

    try:
        p_cnt = int(fields[cursor])
    except ValueError:
        raise LexiconFormatError(path, lineno, "p_cnt", f"not decimal: {fields[cursor]!r}") from None
    cursor += 1

    relations: list[tuple[Relation, int, Pos]] = []
    for _ in range(p_cnt):
        chunk = fields[cursor : cursor + 4]
        if len(chunk) != 4:
            raise LexiconFormatError(path, lineno, "ptr", "truncated pointer")
        symbol, target, target_pos, _source = chunk
        if symbol in _POINTER_RELATIONS:
            if target_pos not in (Pos.NOUN.value, Pos.VERB.value):
                raise LexiconFormatError(
                    path, lineno, "ptr pos", f"unexpected pos {target_pos!r} on {symbol!r} pointer"
                )
            relations.append(
                (
                    _POINTER_RELATIONS[symbol],
                    _parse_offset(target, path, lineno, "ptr offset"),
                    Pos(target_pos),
                )
            )
        cursor += 4
    # Anything after the pointer block (e.g. verb frames) is ignored.

    return Synset(offset=offset, pos=pos, lemmas=tuple(lemmas), relations=tuple(relations))


def _parse_index_file(path: Path, pos: Pos) -> dict[str, tuple[int, ...]]:
    entries: dict[str, tuple[int, ...]] = {}
    with open(path, encoding="latin-1") as handle:
        for lineno, line in enumerate(handle, start=1):
            if _is_header(line) or not line.strip():
                continue
            fields = line.split()
            try:
                lemma, offsets = _parse_index_fields(fields, pos, str(path), lineno)
            except IndexError:
                raise LexiconFormatError(str(path), lineno, "record", "truncated line") from None
            if lemma in entries:
                raise LexiconFormatError(str(path), lineno, "lemma", f"duplicate lemma {lemma!r}")
            entries[lemma] = offsets
    return entries


def _parse_index_fields(
    fields: list[str], pos: Pos, path: str, lineno: int
) -> tuple[str, tuple[int, ...]]:
    lemma = fields[0]
    if fields[1] != pos.value:
        raise LexiconFormatError(path, lineno, "pos", f"expected {pos.value!r}, got {fields[1]!r}")
    try:
        synset_cnt = int(fields[2])
        p_cnt = int(fields[3])
    except ValueError:
        raise LexiconFormatError(path, lineno, "count", "synset_cnt/p_cnt not decimal") from None
    cursor = 4 + p_cnt  # skip the pointer-symbol list
    cursor += 2  # sense_cnt, tagsense_cnt
    offset_fields = fields[cursor : cursor + synset_cnt]
    if len(offset_fields) != synset_cnt or len(fields) != cursor + synset_cnt:
        raise LexiconFormatError(
            path, lineno, "synset_offset list", f"expected exactly {synset_cnt} offsets"
        )
    offsets = tuple(
        _parse_offset(tok, path, lineno, "synset_offset") for tok in offset_fields
    )
    return lemma, offsets


def load_lexicon(
    noun_index_path: str | Path,
    noun_data_path: str | Path,
    verb_index_path: str | Path,
    verb_data_path: str | Path,
) -> Lexicon:
    """Parse the four database files into a cross-linked :class:`Lexicon`.

    Raises :class:`LexiconFormatError` on malformed lines and
    :class:`DanglingPointerError` when a relation or index entry points at a
    synset that does not exist; nothing is dropped silently.
    """
    synsets: dict[SynsetId, Synset] = {}
    for pos, data_path in ((Pos.NOUN, noun_data_path), (Pos.VERB, verb_data_path)):
        for offset, synset in _parse_data_file(Path(data_path), pos).items():
            synsets[(pos, offset)] = synset

    index: dict[tuple[Pos, str], tuple[int, ...]] = {}
    for pos, index_path in ((Pos.NOUN, noun_index_path), (Pos.VERB, verb_index_path)):
        for lemma, offsets in _parse_index_file(Path(index_path), pos).items():
            index[(pos, lemma)] = offsets

    for (pos, lemma), offsets in index.items():
        for offset in offsets:
            if (pos, offset) not in synsets:
                raise DanglingPointerError(
                    f"index entry {lemma!r} ({pos.value}) lists missing synset {offset:08d}"
                )
    for synset in synsets.values():
        for relation, target, target_pos in synset.relations:
            if (target_pos, target) not in synsets:
                raise DanglingPointerError(
                    f"synset {synset.offset:08d}-{synset.pos.value} has {relation.value} "
                    f"pointer to missing synset {target:08d}-{target_pos.value}"
                )

    return Lexicon(synsets, index)


def load_wordnet_dir(directory: str | Path) -> Lexicon:
    """Load ``index.noun``, ``data.noun``, ``index.verb``, ``data.verb`` from a directory."""
    d = Path(directory)
    return load_lexicon(d / "index.noun", d / "data.noun", d / "index.verb", d / "data.verb")


def fixture_wordnet_dir() -> Path:
    """Directory of the tiny lexicon shipped with the package (9 synsets)."""
    return Path(str(resources.files("framesum").joinpath("data/wordnet_fixture")))


def synsets_of(lex: Lexicon, lemma: str, pos: Pos) -> frozenset[SynsetId]:
    """All sense ids of ``lemma`` in ``pos``; the empty set when absent."""
    offsets = lex.index.get((pos, lemma), ())
    return frozenset((pos, offset) for offset in offsets)


def expand_one_level(lex: Lexicon, seed: Iterable[SynsetId], pos: Pos) -> frozenset[SynsetId]:
    """Seed synsets plus their direct hypernyms and hyponyms/troponyms.

    Exactly one traversal level; the seed itself is always included, so the
    result is monotone in the seed and distributes over unions.
    """
    result: set[SynsetId] = set()
    for sid in seed:
        if sid not in lex.synsets:
            raise KeyError(f"unknown synset id {sid[1]:08d}-{sid[0].value}")
        if sid[0] is not pos:
            raise ValueError(f"seed {sid[1]:08d}-{sid[0].value} does not match pos {pos.value!r}")
        result.add(sid)
        for _relation, target, target_pos in lex.synsets[sid].relations:
            result.add((target_pos, target))
    return frozenset(result)


def check_pointer_symmetry(
    lex: Lexicon, sample_size: int = 1000, rng_seed: int = 0
) -> tuple[int, list[tuple[SynsetId, Relation, SynsetId]]]:
    """Check that stored pointers have inverse pointers on their targets.

    Samples up to ``sample_size`` synsets deterministically and returns the
    number of pointers checked plus the list of violations.  Violations are
    reported, never raised: hand-built lexicons may be deliberately
    asymmetric, and the instance-pointer folding can surface asymmetries.
    """
    ids = sorted(lex.synsets)
    if len(ids) > sample_size:
        ids = random.Random(rng_seed).sample(ids, sample_size)
    checked = 0
    violations: list[tuple[SynsetId, Relation, SynsetId]] = []
    for sid in ids:
        for relation, target, target_pos in lex.synsets[sid].relations:
            checked += 1
            back = (_INVERSE[relation], sid[1], sid[0])
            if back not in lex.synsets[(target_pos, target)].relations:
                violations.append((sid, relation, (target_pos, target)))
    return checked, violations
