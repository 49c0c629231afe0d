import json
import math
import random
from pathlib import Path

import pytest

from framesum.evaluate import (
    QualityRatings,
    evaluate,
    format_quality_table,
    frame_sim,
    parse_quality_table,
    quality_stats,
)
from framesum.signatures import build_signature
from framesum.wordnet import Pos

from conftest import assist_puppy_frame, empty_signature, help_dog_frame, make_frame

DATA = Path(__file__).parent / "data"


def test_self_similarity_is_one(lex):
    sig = build_signature(help_dog_frame(), lex)
    assert frame_sim(sig, sig) == 1.0


def test_empty_signatures_with_distinct_verbs():
    assert frame_sim(empty_signature(0, "xa"), empty_signature(1, "xb")) == 0.0


def test_fixture_pair_half_match(lex):
    # Hand-computed: cross score 2+2=4; self score of the first frame is
    # (3 noun synsets + 1 lemma) + (3 verb synsets + 1 verb) = 8 -> 0.5.
    si = build_signature(help_dog_frame(), lex)
    sj = build_signature(assist_puppy_frame(), lex)
    assert frame_sim(si, sj) == pytest.approx(4 / 8)


def test_frame_sim_not_symmetric(lex):
    # The normalizer is the first argument's self score: 4/8 one way, 4/6
    # the other (puppy frame's self score is (2+1) + (2+1) = 6).
    si = build_signature(help_dog_frame(), lex)
    sj = build_signature(assist_puppy_frame(), lex)
    assert frame_sim(si, sj) == pytest.approx(4 / 8)
    assert frame_sim(sj, si) == pytest.approx(4 / 6)


def test_sim_bounded(lex):
    rng = random.Random(1)
    frames = [help_dog_frame(0), assist_puppy_frame(1), make_frame(2, "blorp")]
    sigs = [build_signature(f, lex) for f in frames]
    for _ in range(50):
        si, sj = rng.choice(sigs), rng.choice(sigs)
        lam = rng.choice([0.0, 0.5, 1.0, 3.0])
        assert 0.0 <= frame_sim(si, sj, lam) <= 1.0


def test_evaluate_reflexive(lex):
    sigs = [build_signature(help_dog_frame(0), lex), build_signature(assist_puppy_frame(1), lex)]
    report = evaluate(sigs, sigs)
    assert report.aggregate == 1.0
    assert report.raw_total == len(sigs)
    assert [m.reference_id for m in report.matches] == [0, 1]


def test_evaluate_empty_reference(lex):
    sigs = [build_signature(help_dog_frame(0), lex)]
    report = evaluate(sigs, [])
    assert report.aggregate == 0.0
    assert report.matches[0].reference_id is None


def test_evaluate_no_centroids():
    report = evaluate([], [])
    assert report.aggregate == 0.0
    assert report.raw_total == 0.0
    assert report.matches == ()


def test_evaluate_monotone_under_reference_growth(lex):
    centroid = [build_signature(help_dog_frame(0), lex)]
    weak = [build_signature(make_frame(1, "blorp"), lex)]
    strong = weak + [build_signature(assist_puppy_frame(2), lex)]
    assert evaluate(centroid, strong).aggregate >= evaluate(centroid, weak).aggregate


def test_evaluate_tie_takes_lowest_reference_id(lex):
    centroid = [build_signature(help_dog_frame(0), lex)]
    twin_a = build_signature(help_dog_frame(5), lex)
    twin_b = build_signature(help_dog_frame(3), lex)
    report = evaluate(centroid, [twin_a, twin_b])
    assert report.matches[0].reference_id == 3
    assert report.matches[0].sim == 1.0


def test_evaluate_aggregate_is_mean_of_sims(lex):
    centroids = [build_signature(help_dog_frame(0), lex),
                 build_signature(assist_puppy_frame(1), lex)]
    reference = [build_signature(help_dog_frame(9), lex)]
    report = evaluate(centroids, reference)
    sims = [m.sim for m in report.matches]
    assert report.raw_total == pytest.approx(sum(sims))
    assert report.aggregate == pytest.approx(sum(sims) / 2)


def test_quality_stats_by_hand():
    ratings = QualityRatings(
        information_content=(3, 4, 5),
        grammatical_correctness=(4, 4, 4),
        abstractness=(1, 5),
        expressiveness=(2,),
        excess_detail=(1, 2, 3, 4, 5),
    )
    stats = quality_stats(ratings)
    mean, sd = stats["information_content"]
    assert mean == pytest.approx(4.0)
    assert sd == pytest.approx(math.sqrt(2 / 3), abs=1e-12)  # population SD of [3,4,5]
    assert stats["grammatical_correctness"] == (4.0, 0.0)
    assert stats["expressiveness"] == (2.0, 0.0)


def test_quality_stats_rejects_empty_list():
    ratings = QualityRatings(
        information_content=(3,),
        grammatical_correctness=(3,),
        abstractness=(3,),
        expressiveness=(3,),
        excess_detail=(),
    )
    with pytest.raises(ValueError, match="excess_detail"):
        quality_stats(ratings)


def test_ratings_range_enforced():
    with pytest.raises(ValueError):
        QualityRatings(information_content=(0,))
    with pytest.raises(ValueError):
        QualityRatings(information_content=(6,))


def test_ratings_from_json_rejects_unknown_attribute():
    with pytest.raises(ValueError, match="unknown rating attributes"):
        QualityRatings.from_json_dict({"sparkle": [3]})


def test_ratings_file_fixture_loads():
    data = json.loads((DATA / "ratings.json").read_text())
    stats = quality_stats(QualityRatings.from_json_dict(data))
    assert set(stats) == {
        "information_content", "grammatical_correctness", "abstractness",
        "expressiveness", "excess_detail",
    }


def test_golden_table_parses_and_round_trips():
    golden = (DATA / "quality_table_golden.txt").read_text()
    stats = parse_quality_table(golden)
    assert stats["information_content"] == (3.81, 0.96)
    assert stats["excess_detail"] == (3.19, 1.30)
    assert format_quality_table(stats) == golden


def test_parse_rejects_unknown_table():
    with pytest.raises(ValueError):
        parse_quality_table("nope\n")
