"""Per-frame meaning signatures: synset sets for the arguments and the verb.

For each frame, the noun candidates of its arguments are looked up in the
lexicon (all senses), the verb lemma likewise, and both seed sets are widened
by one taxonomy level (hypernyms plus hyponyms/troponyms, seed included).
The raw lemma sets are kept alongside for exact word overlap.
"""

from __future__ import annotations

from dataclasses import dataclass

from framesum.frames import Document, Frame, noun_candidates
from framesum.wordnet import Lexicon, Pos, SynsetId, expand_one_level, normalize_lemma, synsets_of

__all__ = ["FrameSignature", "build_signature", "build_all_signatures"]


@dataclass(frozen=True)
class FrameSignature:
    """What a frame can mean: expanded synset sets plus exact lemma sets."""

    frame_id: int
    noun_synsets: frozenset[SynsetId]
    verb_synsets: frozenset[SynsetId]
    arg_lemmas: frozenset[str]
    verb_lemma: str


def _expand(lex: Lexicon, seed: frozenset[SynsetId], pos: Pos, depth: int) -> frozenset[SynsetId]:
    result = seed
    for _ in range(depth):
        result = expand_one_level(lex, result, pos)
    return result


def build_signature(frame: Frame, lex: Lexicon, expansion_depth: int = 1) -> FrameSignature:
    """Compute one frame's signature; frames with no lexicon hits get empty sets."""
    if expansion_depth < 1:
        raise ValueError("expansion_depth must be >= 1")
    nouns = noun_candidates(frame, lex)
    noun_seed = frozenset().union(*(synsets_of(lex, n, Pos.NOUN) for n in nouns)) if nouns else frozenset()
    verb_lemma = normalize_lemma(frame.verb.lemma)
    verb_seed = synsets_of(lex, verb_lemma, Pos.VERB)
    return FrameSignature(
        frame_id=frame.frame_id,
        noun_synsets=_expand(lex, noun_seed, Pos.NOUN, expansion_depth),
        verb_synsets=_expand(lex, verb_seed, Pos.VERB, expansion_depth),
        arg_lemmas=frozenset(nouns),
        verb_lemma=verb_lemma,
    )


def build_all_signatures(
    doc: Document, lex: Lexicon, expansion_depth: int = 1
) -> list[FrameSignature]:
    """One signature per frame, in document order."""
    return [build_signature(frame, lex, expansion_depth) for frame in doc.frames]
