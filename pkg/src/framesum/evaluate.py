"""Scoring a generated summary against a reference, plus rating statistics.

The summary metric matches each system frame against its best counterpart
among the reference frames, using the same argument/verb overlap scores as
the similarity graph, normalized by the system frame's self score so that a
perfect match is exactly 1.  The aggregate is the mean over system frames;
the raw (un-averaged) total is reported alongside.

Human quality ratings (1..5 per judge, five attributes) are summarized by
mean and population standard deviation, with a fixed-width table format and
its reader.
"""

from __future__ import annotations

import re
import statistics
from dataclasses import dataclass

from framesum.graph import score_pair
from framesum.signatures import FrameSignature

__all__ = [
    "MatchResult",
    "EvalReport",
    "QualityRatings",
    "frame_sim",
    "evaluate",
    "quality_stats",
    "format_quality_table",
    "parse_quality_table",
]


@dataclass(frozen=True)
class MatchResult:
    centroid_id: int
    reference_id: int | None
    sim: float


@dataclass(frozen=True)
class EvalReport:
    matches: tuple[MatchResult, ...]
    aggregate: float  # mean of per-centroid best sims, in [0, 1]
    raw_total: float  # same sims, summed instead of averaged

    def to_json_dict(self) -> dict:
        return {
            "matches": [
                {"centroid": m.centroid_id, "reference": m.reference_id, "sim": m.sim}
                for m in self.matches
            ],
            "aggregate": self.aggregate,
            "raw_total": self.raw_total,
        }


def _self_score(sig: FrameSignature, lexical_weight: float) -> float:
    pair = score_pair(sig, sig, lexical_weight)
    return pair.a_score + pair.v_score


def frame_sim(si: FrameSignature, sj: FrameSignature, lexical_weight: float = 1.0) -> float:
    """Similarity of ``si`` to ``sj`` in [0, 1], normalized by ``si``'s self score.

    Not symmetric: the first argument supplies the normalizer, so
    ``frame_sim(s, s)`` is 1 for any signature with a non-zero self score.
    """
    pair = score_pair(si, sj, lexical_weight)
    denominator = max(1.0, _self_score(si, lexical_weight))
    return min(1.0, max(0.0, (pair.a_score + pair.v_score) / denominator))


def evaluate(
    centroids: list[FrameSignature],
    reference_frames: list[FrameSignature],
    lexical_weight: float = 1.0,
) -> EvalReport:
    """Best-match every centroid against the reference frames.

    Ties go to the lowest reference frame id; an empty reference yields zero
    sims, and an empty centroid list yields aggregate 0.
    """
    refs = sorted(reference_frames, key=lambda s: s.frame_id)
    matches: list[MatchResult] = []
    for centroid in centroids:
        best_id: int | None = None
        best = 0.0
        for ref in refs:
            sim = frame_sim(centroid, ref, lexical_weight)
            if best_id is None or sim > best:
                best_id, best = ref.frame_id, sim
        matches.append(MatchResult(centroid_id=centroid.frame_id, reference_id=best_id, sim=best))
    raw_total = sum(m.sim for m in matches)
    aggregate = raw_total / len(matches) if matches else 0.0
    return EvalReport(matches=tuple(matches), aggregate=aggregate, raw_total=raw_total)


# Attribute key -> display name, in table row order.
_ATTRIBUTES = (
    ("information_content", "Information Content"),
    ("grammatical_correctness", "Grammatical Correctness"),
    ("abstractness", "Abstractness"),
    ("expressiveness", "Expressiveness"),
    ("excess_detail", "Excess/Unnecessary Detail"),
)
_DISPLAY_TO_KEY = {display: key for key, display in _ATTRIBUTES}


@dataclass(frozen=True)
class QualityRatings:
    """Human ratings, one integer in [1, 5] per judge per attribute."""

    information_content: tuple[int, ...] = ()
    grammatical_correctness: tuple[int, ...] = ()
    abstractness: tuple[int, ...] = ()
    expressiveness: tuple[int, ...] = ()
    excess_detail: tuple[int, ...] = ()

    def __post_init__(self):
        for key, _ in _ATTRIBUTES:
            values = tuple(getattr(self, key))
            object.__setattr__(self, key, values)
            if any(not isinstance(v, int) or not 1 <= v <= 5 for v in values):
                raise ValueError(f"{key}: ratings must be integers in [1, 5]")

    @classmethod
    def from_json_dict(cls, data: dict) -> "QualityRatings":
        known = {key for key, _ in _ATTRIBUTES}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown rating attributes: {sorted(unknown)}")
        return cls(**{key: tuple(values) for key, values in data.items()})


def quality_stats(ratings: QualityRatings) -> dict[str, tuple[float, float]]:
    """Per attribute: (mean, population standard deviation)."""
    stats: dict[str, tuple[float, float]] = {}
    for key, _ in _ATTRIBUTES:
        values = getattr(ratings, key)
        if not values:
            raise ValueError(f"{key}: empty rating list")
        stats[key] = (statistics.fmean(values), statistics.pstdev(values))
    return stats


_HEADER = f"{'S.No':<6}{'Quality':<27}{'Mean':>4}  {'Standard Deviation':>18}"
_ROW_RE = re.compile(r"^(\d+)\s+(.+?)\s+(\d+\.\d{2})\s+(\d+\.\d{2})\s*$")


def format_quality_table(stats: dict[str, tuple[float, float]]) -> str:
    """Fixed-width table of per-attribute mean and standard deviation."""
    lines = [_HEADER]
    for number, (key, display) in enumerate(_ATTRIBUTES, start=1):
        if key not in stats:
            continue
        mean, sd = stats[key]
        lines.append(f"{number:<6}{display:<27}{mean:>4.2f}  {sd:>18.2f}")
    return "\n".join(lines) + "\n"


def parse_quality_table(text: str) -> dict[str, tuple[float, float]]:
    """Read a table produced by :func:`format_quality_table` back into stats."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != _HEADER:
        raise ValueError("unrecognized quality table header")
    stats: dict[str, tuple[float, float]] = {}
    for line in lines[1:]:
        match = _ROW_RE.match(line)
        if not match:
            raise ValueError(f"unrecognized quality table row: {line!r}")
        display = match.group(2).strip()
        if display not in _DISPLAY_TO_KEY:
            raise ValueError(f"unknown quality attribute: {display!r}")
        stats[_DISPLAY_TO_KEY[display]] = (float(match.group(3)), float(match.group(4)))
    return stats
