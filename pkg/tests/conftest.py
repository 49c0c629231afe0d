import pytest

from framesum.frames import Argument, Document, Frame, PosHint, Token
from framesum.signatures import FrameSignature
from framesum.wordnet import Lexicon, fixture_wordnet_dir, load_wordnet_dir


@pytest.fixture(scope="session")
def lex() -> Lexicon:
    return load_wordnet_dir(fixture_wordnet_dir())


def tok(text: str, lemma: str | None = None, hint: PosHint | None = None) -> Token:
    return Token(text=text, lemma=lemma or text.lower(), pos_hint=hint)


def arg(label: str, *tokens: Token) -> Argument:
    return Argument(label=label, tokens=tuple(tokens))


def make_frame(frame_id: int, verb: str, *, sentence_index: int = 0,
               args: tuple[Argument, ...] = ()) -> Frame:
    return Frame(frame_id=frame_id, sentence_index=sentence_index,
                 verb=tok(verb), args=args)


def simple_doc(n_frames: int) -> Document:
    """One bland frame per sentence, ids 0..n-1; handy for graph/segment tests."""
    return doc_with_ids(*range(n_frames))


def doc_with_ids(*frame_ids: int) -> Document:
    """One bland frame per sentence with the given ids, in the given order."""
    frames = tuple(
        make_frame(fid, f"verb{fid}", sentence_index=i, args=(arg("ARG0", tok(f"thing{fid}")),))
        for i, fid in enumerate(frame_ids)
    )
    return Document(
        sentences=tuple(f"thing{fid} verb{fid}" for fid in frame_ids), frames=frames
    )


def help_dog_frame(frame_id: int = 0, sentence_index: int = 0) -> Frame:
    """verb=help with a single known noun 'dog' (no part-of-speech hints)."""
    return Frame(frame_id=frame_id, sentence_index=sentence_index, verb=tok("helped", "help"),
                 args=(arg("ARG1", tok("dog")),))


def assist_puppy_frame(frame_id: int = 1, sentence_index: int = 1) -> Frame:
    return Frame(frame_id=frame_id, sentence_index=sentence_index, verb=tok("assisted", "assist"),
                 args=(arg("ARG1", tok("puppy")),))


def empty_signature(frame_id: int, verb_lemma: str) -> FrameSignature:
    return FrameSignature(frame_id=frame_id, noun_synsets=frozenset(),
                          verb_synsets=frozenset(), arg_lemmas=frozenset(),
                          verb_lemma=verb_lemma)


def fig2_meeting_frame(frame_id: int = 0, sentence_index: int = 0) -> Frame:
    """Meeting announcement with proper-noun hints and three modifiers."""
    pn = PosHint.PROPER_NOUN
    other = PosHint.OTHER
    return Frame(
        frame_id=frame_id,
        sentence_index=sentence_index,
        verb=tok("met", "meet"),
        args=(
            arg("ARG0", tok("Mr.Bush", "mr.bush", pn)),
            arg("ARG1", tok("him", "he", other)),
            arg("ARGM-MNR", tok("privately", "privately", other)),
            arg("ARGM-LOC", tok("in", "in", other), tok("the", "the", other),
                tok("White", "white", pn), tok("House", "house", pn)),
            arg("ARGM-TMP", tok("on", "on", other), tok("Thursday", "thursday", pn)),
        ),
    )
