"""Document/frame data model and the two ingestion formats.

A document is a list of sentences plus the predicate-argument frames that an
upstream semantic role labeler produced for them (one frame per verb, with
PropBank-style labels ARG0..ARG5 and ARGM-* modifiers).  Pronouns are assumed
to be already resolved and tokens may carry part-of-speech hints; this module
never runs any tagger itself.

Two formats are supported:

* JSON lines: a leading ``{"type": "document", "sentences": [...]}`` record,
  then one ``{"type": "frame", ...}`` record per frame (see
  :func:`parse_frames_jsonl`).
* CoNLL-2005-style props columns: one token per row, blank line between
  sentences, ``word lemma marker props...`` columns (see
  :func:`parse_frames_conll`).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

from framesum.wordnet import Lexicon, Pos, normalize_lemma, synsets_of

__all__ = [
    "PosHint",
    "Token",
    "Argument",
    "Frame",
    "Document",
    "FrameFormatError",
    "parse_frames_jsonl",
    "parse_frames_conll",
    "to_jsonl",
    "noun_candidates",
]

_LABEL_RE = re.compile(r"^(ARG[0-5]|ARGM-[A-Z0-9]+)$")
_NUMBERED_RE = re.compile(r"^ARG[0-5]$")


class FrameFormatError(Exception):
    """Malformed frame input; carries the 1-based line number when known."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


class PosHint(str, Enum):
    NOUN = "noun"
    VERB = "verb"
    PROPER_NOUN = "proper_noun"
    OTHER = "other"


@dataclass(frozen=True)
class Token:
    text: str
    lemma: str
    pos_hint: PosHint | None = None

    def __post_init__(self):
        if not self.text:
            raise ValueError("token text must be non-empty")
        if not self.lemma:
            raise ValueError("token lemma must be non-empty")


@dataclass(frozen=True)
class Argument:
    """One labeled argument span; modifiers carry an ``ARGM-`` prefix."""

    label: str
    tokens: tuple[Token, ...]

    def __post_init__(self):
        if not _LABEL_RE.match(self.label):
            raise ValueError(f"unknown argument label {self.label!r}")
        if not self.tokens:
            raise ValueError(f"argument {self.label} has no tokens")
        object.__setattr__(self, "tokens", tuple(self.tokens))

    @property
    def is_modifier(self) -> bool:
        return self.label.startswith("ARGM-")

    @property
    def text(self) -> str:
        return " ".join(t.text for t in self.tokens)


@dataclass(frozen=True)
class Frame:
    """A predicate with its labeled arguments, anchored to one sentence."""

    frame_id: int
    sentence_index: int
    verb: Token
    args: tuple[Argument, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if self.sentence_index < 0:
            raise ValueError("sentence_index must be >= 0")
        numbered = [a.label for a in self.args if _NUMBERED_RE.match(a.label)]
        if len(numbered) != len(set(numbered)):
            raise ValueError(f"frame {self.frame_id} repeats a numbered argument label")

    def argument(self, label: str) -> Argument | None:
        for arg in self.args:
            if arg.label == label:
                return arg
        return None

    def tokens(self) -> Iterator[Token]:
        """Verb token first, then every argument token in order."""
        yield self.verb
        for arg in self.args:
            yield from arg.tokens


@dataclass(frozen=True)
class Document:
    """Sentences plus frames, kept sorted by (sentence_index, frame_id)."""

    sentences: tuple[str, ...]
    frames: tuple[Frame, ...]

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        frames = tuple(sorted(self.frames, key=lambda f: (f.sentence_index, f.frame_id)))
        object.__setattr__(self, "frames", frames)
        seen: set[int] = set()
        for frame in frames:
            if frame.frame_id in seen:
                raise ValueError(f"duplicate frame_id {frame.frame_id}")
            seen.add(frame.frame_id)
            if frame.sentence_index >= len(self.sentences):
                raise ValueError(
                    f"frame {frame.frame_id} references sentence {frame.sentence_index} "
                    f"but the document has {len(self.sentences)} sentences"
                )

    def frame_by_id(self, frame_id: int) -> Frame:
        for frame in self.frames:
            if frame.frame_id == frame_id:
                return frame
        raise KeyError(f"unknown frame_id {frame_id}")


def _as_lines(stream: str | Iterable[str]) -> Iterator[tuple[int, str]]:
    lines = stream.splitlines() if isinstance(stream, str) else stream
    for lineno, line in enumerate(lines, start=1):
        yield lineno, line.rstrip("\n")


def _token_from_json(obj: object, lineno: int) -> Token:
    if not isinstance(obj, dict):
        raise FrameFormatError(f"token must be an object, got {type(obj).__name__}", lineno)
    hint = obj.get("pos")
    if hint is not None:
        try:
            hint = PosHint(hint)
        except ValueError:
            raise FrameFormatError(f"unknown pos hint {hint!r}", lineno) from None
    try:
        return Token(text=obj["text"], lemma=obj["lemma"], pos_hint=hint)
    except (KeyError, TypeError, ValueError) as exc:
        raise FrameFormatError(f"bad token: {exc}", lineno) from None


def parse_frames_jsonl(stream: str | Iterable[str]) -> Document:
    """Parse the JSONL format: one document record, then one record per frame.

    Rejects duplicate frame ids, unknown argument labels, frames whose
    sentence_index is out of range, and any line that is not valid JSON of
    the expected shape; errors report the offending line number.
    """
    sentences: tuple[str, ...] | None = None
    frames: list[Frame] = []
    seen_ids: set[int] = set()
    for lineno, line in _as_lines(stream):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise FrameFormatError(f"invalid JSON: {exc.msg}", lineno) from None
        if not isinstance(record, dict):
            raise FrameFormatError("record must be a JSON object", lineno)
        kind = record.get("type")
        if kind == "document":
            if sentences is not None:
                raise FrameFormatError("second document record", lineno)
            raw = record.get("sentences")
            if not isinstance(raw, list) or not all(isinstance(s, str) for s in raw):
                raise FrameFormatError("document record needs a list of sentence strings", lineno)
            sentences = tuple(raw)
        elif kind == "frame":
            if sentences is None:
                raise FrameFormatError("missing document record before first frame", lineno)
            frames.append(_frame_from_json(record, lineno, len(sentences), seen_ids))
        else:
            raise FrameFormatError(f"unknown record type {kind!r}", lineno)
    if sentences is None:
        raise FrameFormatError("missing document record")
    return Document(sentences=sentences, frames=tuple(frames))


def _frame_from_json(
    record: dict, lineno: int, sentence_count: int, seen_ids: set[int]
) -> Frame:
    try:
        frame_id = record["frame_id"]
        sentence_index = record["sentence_index"]
        verb_obj = record["verb"]
        args_obj = record.get("args", [])
    except KeyError as exc:
        raise FrameFormatError(f"frame record missing {exc.args[0]!r}", lineno) from None
    if not isinstance(frame_id, int) or not isinstance(sentence_index, int):
        raise FrameFormatError("frame_id and sentence_index must be integers", lineno)
    if frame_id in seen_ids:
        raise FrameFormatError(f"duplicate frame_id {frame_id}", lineno)
    if sentence_index >= sentence_count:
        raise FrameFormatError(
            f"sentence_index {sentence_index} out of range ({sentence_count} sentences)", lineno
        )
    if not isinstance(args_obj, list):
        raise FrameFormatError("args must be a list", lineno)
    args = []
    for arg_obj in args_obj:
        if not isinstance(arg_obj, dict):
            raise FrameFormatError("argument must be an object", lineno)
        tokens = tuple(_token_from_json(t, lineno) for t in arg_obj.get("tokens", []))
        try:
            args.append(Argument(label=arg_obj.get("label", ""), tokens=tokens))
        except ValueError as exc:
            raise FrameFormatError(str(exc), lineno) from None
    try:
        frame = Frame(
            frame_id=frame_id,
            sentence_index=sentence_index,
            verb=_token_from_json(verb_obj, lineno),
            args=tuple(args),
        )
    except ValueError as exc:
        raise FrameFormatError(str(exc), lineno) from None
    seen_ids.add(frame_id)
    return frame


def _token_to_json(token: Token) -> dict:
    obj = {"text": token.text, "lemma": token.lemma}
    if token.pos_hint is not None:
        obj["pos"] = token.pos_hint.value
    return obj


def to_jsonl(doc: Document) -> str:
    """Serialize a document back to the JSONL format (round-trips exactly)."""
    lines = [json.dumps({"type": "document", "sentences": list(doc.sentences)})]
    for frame in doc.frames:
        lines.append(
            json.dumps(
                {
                    "type": "frame",
                    "frame_id": frame.frame_id,
                    "sentence_index": frame.sentence_index,
                    "verb": _token_to_json(frame.verb),
                    "args": [
                        {"label": a.label, "tokens": [_token_to_json(t) for t in a.tokens]}
                        for a in frame.args
                    ],
                }
            )
        )
    return "\n".join(lines) + "\n"


_SPAN_OPEN_RE = re.compile(r"^\((?P<label>[A-Za-z0-9-]+)\*(?P<close>\))?$")


@dataclass
class _OpenSpan:
    label: str
    tokens: list[Token] = field(default_factory=list)


def parse_frames_conll(stream: str | Iterable[str]) -> Document:
    """Parse CoNLL-2005-style props columns.

    Row layout: column 0 word, column 1 lemma, column 2 target-verb marker
    (``-`` or the verb lemma), columns 3+ one props column per target verb
    with bracketed spans ``(ARG0*`` ... ``*)`` and ``(V*)`` marking the verb.
    Every row of a sentence must have the same column count.
    """
    sentences: list[str] = []
    frames: list[Frame] = []
    rows: list[tuple[int, list[str]]] = []
    next_frame_id = 0

    def flush():
        nonlocal next_frame_id
        if not rows:
            return
        widths = {len(fields) for _, fields in rows}
        if len(widths) != 1:
            raise FrameFormatError("ragged column counts within a sentence", rows[0][0])
        width = widths.pop()
        if width < 3:
            raise FrameFormatError("rows need at least word, lemma, and marker columns", rows[0][0])
        sentence_index = len(sentences)
        sentences.append(" ".join(fields[0] for _, fields in rows))
        for column in range(3, width):
            frames.append(_frame_from_column(rows, column, sentence_index, next_frame_id))
            next_frame_id += 1
        rows.clear()

    for lineno, line in _as_lines(stream):
        if not line.strip():
            flush()
            continue
        rows.append((lineno, line.split()))
    flush()
    return Document(sentences=tuple(sentences), frames=tuple(frames))


def _frame_from_column(
    rows: list[tuple[int, list[str]]], column: int, sentence_index: int, frame_id: int
) -> Frame:
    verb: Token | None = None
    args: list[Argument] = []
    open_span: _OpenSpan | None = None
    for lineno, fields in rows:
        cell = fields[column]
        token = Token(text=fields[0], lemma=fields[1].lower())
        matched = _SPAN_OPEN_RE.match(cell)
        if matched:
            if open_span is not None:
                raise FrameFormatError("unbalanced span brackets: nested open", lineno)
            open_span = _OpenSpan(label=matched.group("label"), tokens=[token])
            if matched.group("close"):
                verb, open_span = _close_span(open_span, verb, args, lineno)
        elif cell == "*)":
            if open_span is None:
                raise FrameFormatError("unbalanced span brackets: close without open", lineno)
            open_span.tokens.append(token)
            verb, open_span = _close_span(open_span, verb, args, lineno)
        elif cell == "*":
            if open_span is not None:
                open_span.tokens.append(token)
        else:
            raise FrameFormatError(f"malformed span expression {cell!r}", lineno)
    if open_span is not None:
        raise FrameFormatError("unbalanced span brackets: span still open at sentence end",
                               rows[-1][0])
    if verb is None:
        raise FrameFormatError("props column without a (V*) span", rows[0][0])
    return Frame(frame_id=frame_id, sentence_index=sentence_index, verb=verb, args=tuple(args))


def _close_span(
    span: _OpenSpan, verb: Token | None, args: list[Argument], lineno: int
) -> tuple[Token | None, None]:
    if span.label == "V":
        if verb is not None:
            raise FrameFormatError("props column with two (V*) spans", lineno)
        return span.tokens[0], None
    try:
        args.append(Argument(label=span.label, tokens=tuple(span.tokens)))
    except ValueError as exc:
        raise FrameFormatError(str(exc), lineno) from None
    return verb, None


def noun_candidates(frame: Frame, lex: Lexicon) -> list[str]:
    """Lemmas of the frame's argument tokens that look like nouns.

    A token with a part-of-speech hint counts when the hint is noun or
    proper noun; an unhinted token counts when its lemma has a noun entry in
    the lexicon.  Order is preserved and duplicates are kept.
    """
    out: list[str] = []
    for arg in frame.args:
        for token in arg.tokens:
            lemma = normalize_lemma(token.lemma)
            if token.pos_hint is not None:
                if token.pos_hint in (PosHint.NOUN, PosHint.PROPER_NOUN):
                    out.append(lemma)
            elif synsets_of(lex, lemma, Pos.NOUN):
                out.append(lemma)
    return out
