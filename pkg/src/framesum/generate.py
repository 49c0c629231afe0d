"""Sentence generation by frame compression.

A summary sentence is the concatenation of a frame's ARG0 tokens, the verb,
then ARG1 and ARG2, skipping whatever is absent.  Modifier arguments are
dropped by default (``keep_modifiers`` appends them after ARG2).  No
grammatical repair is attempted: the output is the source tokens, re-cased at
the front and closed with a period.
"""

from __future__ import annotations

from dataclasses import dataclass

from framesum.centroids import CentroidSelection
from framesum.frames import Document, Frame

__all__ = ["GeneratedSentence", "assemble", "assemble_summary"]

_CORE_LABELS = ("ARG0", "ARG1", "ARG2")
_TERMINALS = (".", "!", "?")


@dataclass(frozen=True)
class GeneratedSentence:
    frame_id: int
    text: str
    complete: bool  # ARG0, verb, and ARG1 all present


def assemble(frame: Frame, keep_modifiers: bool = False) -> GeneratedSentence:
    """Compress one frame into a sentence."""
    if not frame.verb.text.strip():
        raise ValueError(f"frame {frame.frame_id} has no verb to build a sentence around")
    words: list[str] = []
    arg0 = frame.argument("ARG0")
    if arg0:
        words.extend(t.text for t in arg0.tokens)
    words.append(frame.verb.text)
    for label in _CORE_LABELS[1:]:
        arg = frame.argument(label)
        if arg:
            words.extend(t.text for t in arg.tokens)
    if keep_modifiers:
        for arg in frame.args:
            if arg.is_modifier:
                words.extend(t.text for t in arg.tokens)
    text = " ".join(words)
    text = text[0].upper() + text[1:]
    if not text.endswith(_TERMINALS):
        text += "."
    complete = arg0 is not None and frame.argument("ARG1") is not None
    return GeneratedSentence(frame_id=frame.frame_id, text=text, complete=complete)


def assemble_summary(
    selection: CentroidSelection, doc: Document, keep_modifiers: bool = False
) -> list[GeneratedSentence]:
    """One sentence per selected centroid, in source document order.

    Ordering follows (sentence_index, frame_id) of the centroid frames, not
    their scores, so the summary reads in discourse order.
    """
    frames = [doc.frame_by_id(fid) for fid in selection.selected_frame_ids()]
    frames.sort(key=lambda f: (f.sentence_index, f.frame_id))
    return [assemble(frame, keep_modifiers) for frame in frames]
