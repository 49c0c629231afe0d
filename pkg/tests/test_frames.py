import io
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from framesum.frames import (
    Argument,
    Document,
    Frame,
    FrameFormatError,
    PosHint,
    Token,
    noun_candidates,
    parse_frames_conll,
    parse_frames_jsonl,
    to_jsonl,
)
from framesum.wordnet import Pos

from conftest import arg, fig2_meeting_frame, tok

DATA = Path(__file__).parent / "data"

JOHN_HELPED_MARY = (
    '{"type": "document", "sentences": ["John helped Mary"]}\n'
    '{"type": "frame", "frame_id": 0, "sentence_index": 0,'
    ' "verb": {"text": "helped", "lemma": "help"},'
    ' "args": [{"label": "ARG0", "tokens": [{"text": "John", "lemma": "john"}]},'
    ' {"label": "ARG1", "tokens": [{"text": "Mary", "lemma": "mary"}]}]}\n'
)


def test_parse_two_line_file():
    doc = parse_frames_jsonl(JOHN_HELPED_MARY)
    assert len(doc.frames) == 1
    frame = doc.frames[0]
    assert frame.verb.text == "helped"
    assert len(frame.args) == 2
    assert frame.argument("ARG0").text == "John"
    assert frame.argument("ARG1").text == "Mary"


def test_parse_accepts_file_object():
    doc = parse_frames_jsonl(io.StringIO(JOHN_HELPED_MARY))
    assert len(doc.frames) == 1


def test_parse_empty_document():
    doc = parse_frames_jsonl('{"type": "document", "sentences": []}\n')
    assert doc.frames == ()


def test_parse_meeting_frame_has_five_args():
    record = (
        '{"type": "document", "sentences": ["Mr.Bush met him privately, in the White House,'
        ' on Thursday."]}\n'
        '{"type": "frame", "frame_id": 0, "sentence_index": 0,'
        ' "verb": {"text": "met", "lemma": "meet"}, "args": ['
        '{"label": "ARG0", "tokens": [{"text": "Mr.Bush", "lemma": "mr.bush"}]},'
        '{"label": "ARG1", "tokens": [{"text": "him", "lemma": "he"}]},'
        '{"label": "ARGM-MNR", "tokens": [{"text": "privately", "lemma": "privately"}]},'
        '{"label": "ARGM-LOC", "tokens": [{"text": "in", "lemma": "in"},'
        ' {"text": "the", "lemma": "the"}, {"text": "White", "lemma": "white"},'
        ' {"text": "House", "lemma": "house"}]},'
        '{"label": "ARGM-TMP", "tokens": [{"text": "on", "lemma": "on"},'
        ' {"text": "Thursday", "lemma": "thursday"}]}]}\n'
    )
    doc = parse_frames_jsonl(record)
    frame = doc.frames[0]
    assert len(frame.args) == 5
    assert [a.label for a in frame.args] == ["ARG0", "ARG1", "ARGM-MNR", "ARGM-LOC", "ARGM-TMP"]


@pytest.mark.parametrize(
    "line,fragment",
    [
        ('{"type": "frame"}', "missing document record"),
        ("not json", "invalid JSON"),
        ('{"type": "chapter"}', "unknown record type"),
    ],
)
def test_first_line_errors(line, fragment):
    with pytest.raises(FrameFormatError) as excinfo:
        parse_frames_jsonl(line + "\n")
    assert fragment in str(excinfo.value)
    assert "line 1" in str(excinfo.value)


def test_missing_document_record_on_empty_input():
    with pytest.raises(FrameFormatError, match="missing document record"):
        parse_frames_jsonl("")


def test_duplicate_frame_id_rejected():
    text = JOHN_HELPED_MARY + JOHN_HELPED_MARY.splitlines()[1] + "\n"
    with pytest.raises(FrameFormatError) as excinfo:
        parse_frames_jsonl(text)
    assert "duplicate frame_id 0" in str(excinfo.value)
    assert excinfo.value.lineno == 3


def test_unknown_argument_label_rejected():
    bad = JOHN_HELPED_MARY.replace('"label": "ARG0"', '"label": "ARG9"')
    with pytest.raises(FrameFormatError, match="unknown argument label"):
        parse_frames_jsonl(bad)


def test_sentence_index_out_of_range_rejected():
    bad = JOHN_HELPED_MARY.replace('"sentence_index": 0', '"sentence_index": 5')
    with pytest.raises(FrameFormatError, match="out of range"):
        parse_frames_jsonl(bad)


def test_conll_matches_jsonl_on_paired_fixture():
    jsonl_doc = parse_frames_jsonl((DATA / "pair.jsonl").read_text())
    conll_doc = parse_frames_conll((DATA / "pair.conll").read_text())
    assert conll_doc == jsonl_doc


def test_conll_no_predicates():
    text = "The the -\ncat cat -\nslept sleep -\n"
    doc = parse_frames_conll(text)
    assert doc.sentences == ("The cat slept",)
    assert doc.frames == ()


def test_conll_two_props_columns_share_sentence():
    text = (
        "John john - (ARG0*) (ARG0*)\n"
        "helped help help (V*) *\n"
        "and and - * *\n"
        "thanked thank thank * (V*)\n"
        "Mary mary - (ARG1*) (ARG1*)\n"
    )
    doc = parse_frames_conll(text)
    assert len(doc.frames) == 2
    assert {f.sentence_index for f in doc.frames} == {0}
    assert [f.verb.text for f in doc.frames] == ["helped", "thanked"]
    assert doc.frames[0].argument("ARG1").text == "Mary"


def test_conll_ragged_columns_rejected():
    text = "John john - (ARG0*)\nhelped help help\nMary mary - (ARG1*)\n"
    with pytest.raises(FrameFormatError, match="ragged"):
        parse_frames_conll(text)


def test_conll_missing_verb_span_rejected():
    text = "John john - (ARG0*)\nhelped help help *\nMary mary - (ARG1*)\n"
    with pytest.raises(FrameFormatError, match=r"without a \(V\*\) span"):
        parse_frames_conll(text)


@pytest.mark.parametrize(
    "column",
    [
        ["(ARG0*", "(V*)", "*"],    # still open at sentence end
        ["*)", "(V*)", "*"],        # close without open
        ["(ARG0*", "(ARG1*", "*)"], # nested open
    ],
)
def test_conll_unbalanced_spans_rejected(column):
    rows = ["John john -", "helped help help", "Mary mary -"]
    text = "\n".join(f"{row} {cell}" for row, cell in zip(rows, column)) + "\n"
    with pytest.raises(FrameFormatError):
        parse_frames_conll(text)


def test_document_sorts_frames_by_position():
    f_late = Frame(0, 1, tok("ran", "run"), ())
    f_early = Frame(1, 0, tok("sat", "sit"), ())
    doc = Document(sentences=("a", "b"), frames=(f_late, f_early))
    assert [f.frame_id for f in doc.frames] == [1, 0]


tokens_st = st.builds(
    Token,
    text=st.text(st.characters(categories=("L", "N")), min_size=1, max_size=8),
    lemma=st.text(st.sampled_from("abcdefg"), min_size=1, max_size=6),
    pos_hint=st.sampled_from([None, *PosHint]),
)


@st.composite
def documents_st(draw):
    n_sentences = draw(st.integers(min_value=1, max_value=4))
    sentences = tuple(f"sentence {i}" for i in range(n_sentences))
    n_frames = draw(st.integers(min_value=0, max_value=4))
    frames = []
    for frame_id in range(n_frames):
        labels = draw(
            st.lists(
                st.sampled_from(["ARG0", "ARG1", "ARG2", "ARGM-TMP", "ARGM-LOC"]),
                unique=True, max_size=4,
            )
        )
        args = tuple(
            Argument(label=label, tokens=tuple(draw(st.lists(tokens_st, min_size=1, max_size=3))))
            for label in labels
        )
        frames.append(
            Frame(
                frame_id=frame_id,
                sentence_index=draw(st.integers(min_value=0, max_value=n_sentences - 1)),
                verb=draw(tokens_st),
                args=args,
            )
        )
    return Document(sentences=sentences, frames=tuple(frames))


@settings(max_examples=75, deadline=None)
@given(doc=documents_st())
def test_jsonl_round_trip(doc):
    assert parse_frames_jsonl(to_jsonl(doc)) == doc


def test_noun_candidates_hint_path(lex):
    frame = Frame(
        0, 0, tok("helped", "help"),
        (arg("ARG0", tok("John", "john", PosHint.PROPER_NOUN)),
         arg("ARG1", tok("Mary", "mary", PosHint.PROPER_NOUN))),
    )
    assert noun_candidates(frame, lex) == ["john", "mary"]


def test_noun_candidates_lexicon_path(lex):
    frame = Frame(
        0, 0, tok("helped", "help"),
        (arg("ARG1", tok("the"), tok("dog")), arg("ARG2", tok("a"), tok("puppy"))),
    )
    # 'the' and 'a' have no noun entry; dog and puppy do.
    assert noun_candidates(frame, lex) == ["dog", "puppy"]


def test_noun_candidates_duplicates_kept(lex):
    frame = Frame(0, 0, tok("helped", "help"),
                  (arg("ARG0", tok("dog")), arg("ARG1", tok("dog"))))
    assert noun_candidates(frame, lex) == ["dog", "dog"]


def test_noun_candidates_empty(lex):
    frame = Frame(0, 0, tok("ran", "run"), (arg("ARG1", tok("swiftly")),))
    assert noun_candidates(frame, lex) == []


def test_noun_candidates_never_invents(lex):
    # Every candidate is either hint-approved or lexicon-known.
    frame = fig2_meeting_frame()
    for lemma in noun_candidates(frame, lex):
        hinted = any(
            t.pos_hint in (PosHint.NOUN, PosHint.PROPER_NOUN) and t.lemma == lemma
            for a in frame.args for t in a.tokens
        )
        assert hinted or (Pos.NOUN, lemma) in lex.index
