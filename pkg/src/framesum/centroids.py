"""Selecting each segment's most representative frames by weighted features.

Five features feed the score: in-degree and out-degree in the pruned graph,
position in the document (1.0 at the first sentence, falling to 0.0 at the
last), frame length in tokens, and a named-entity count.  Features are
min-max normalized within each segment so degrees and token counts become
comparable, then combined as a weighted sum.  Degree weights default to twice
the others, which in practice picks the best-connected frames.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from framesum.frames import Document, PosHint
from framesum.graph import FrameGraph
from framesum.segments import Segmentation

__all__ = [
    "FeatureWeights",
    "FrameFeatures",
    "FeatureRanges",
    "ScoredFrame",
    "SegmentPicks",
    "CentroidSelection",
    "compute_features",
    "feature_score",
    "select_centroids",
]


@dataclass(frozen=True)
class FeatureWeights:
    w_in: float = 2.0
    w_out: float = 2.0
    w_pos: float = 1.0
    w_len: float = 1.0
    w_ne: float = 1.0

    def as_vector(self) -> tuple[float, ...]:
        return (self.w_in, self.w_out, self.w_pos, self.w_len, self.w_ne)


@dataclass(frozen=True)
class FrameFeatures:
    in_degree: int
    out_degree: int
    position: float
    length: int
    named_entities: int

    def as_vector(self) -> tuple[float, ...]:
        return (
            float(self.in_degree),
            float(self.out_degree),
            self.position,
            float(self.length),
            float(self.named_entities),
        )


@dataclass(frozen=True)
class FeatureRanges:
    """Per-feature min/max over one segment, for min-max normalization."""

    lows: tuple[float, ...]
    highs: tuple[float, ...]

    @classmethod
    def over(cls, features: Iterable[FrameFeatures]) -> "FeatureRanges":
        vectors = [f.as_vector() for f in features]
        if not vectors:
            raise ValueError("cannot compute ranges over an empty feature set")
        return cls(
            lows=tuple(min(col) for col in zip(*vectors)),
            highs=tuple(max(col) for col in zip(*vectors)),
        )


class ScoredFrame(NamedTuple):
    frame_id: int
    score: float


@dataclass(frozen=True)
class SegmentPicks:
    segment_id: int
    picks: tuple[ScoredFrame, ...]  # score-descending, frame_id tie-break


@dataclass(frozen=True)
class CentroidSelection:
    segments: tuple[SegmentPicks, ...]

    def selected_frame_ids(self) -> list[int]:
        return [pick.frame_id for seg in self.segments for pick in seg.picks]


def compute_features(doc: Document, graph: FrameGraph, frame_id: int) -> FrameFeatures:
    """Raw (un-normalized) features of one frame."""
    frame = doc.frame_by_id(frame_id)
    tokens = list(frame.tokens())
    if any(t.pos_hint is not None for t in tokens):
        named = sum(1 for t in tokens if t.pos_hint is PosHint.PROPER_NOUN)
    else:
        # No tagger available: capitalized tokens count, except the one that
        # opens the sentence.
        sentence = doc.sentences[frame.sentence_index]
        first_word = sentence.split()[0] if sentence.split() else None
        named = sum(1 for t in tokens if t.text[:1].isupper() and t.text != first_word)
    return FrameFeatures(
        in_degree=graph.in_degree(frame_id),
        out_degree=graph.out_degree(frame_id),
        position=1.0 - frame.sentence_index / max(1, len(doc.sentences) - 1),
        length=len(tokens),
        named_entities=named,
    )


def feature_score(features: FrameFeatures, weights: FeatureWeights, ranges: FeatureRanges) -> float:
    """Weighted sum of the features after min-max normalization.

    A feature that is constant across the segment (range zero) contributes
    nothing, so single-frame segments always score 0.
    """
    total = 0.0
    for value, weight, low, high in zip(
        features.as_vector(), weights.as_vector(), ranges.lows, ranges.highs
    ):
        span = high - low
        if span > 0:
            total += weight * (value - low) / span
    return total


def select_centroids(
    doc: Document,
    graph: FrameGraph,
    segmentation: Segmentation,
    weights: FeatureWeights | None = None,
    centroid_fraction: float = 0.2,
) -> CentroidSelection:
    """Pick the top-scoring frames of each segment.

    Each segment yields ``max(1, ceil(centroid_fraction * size))`` frames.
    A frame sitting in several overlapping segments is selected at most once
    globally: the lowest-numbered segment claims it and later segments move
    on to their next-best frame.
    """
    if not 0 < centroid_fraction <= 1:
        raise ValueError("centroid_fraction must be in (0, 1]")
    weights = weights if weights is not None else FeatureWeights()
    if all(w == 0 for w in weights.as_vector()):
        warnings.warn("all feature weights are zero; centroid choice degenerates to frame order")

    features = {fid: compute_features(doc, graph, fid) for fid in graph.nodes}
    claimed: set[int] = set()
    picks: list[SegmentPicks] = []
    for segment in segmentation.segments:
        ranges = FeatureRanges.over(features[fid] for fid in segment.members)
        ranked = sorted(
            (ScoredFrame(fid, feature_score(features[fid], weights, ranges))
             for fid in segment.members),
            key=lambda sf: (-sf.score, sf.frame_id),
        )
        quota = max(1, math.ceil(centroid_fraction * len(segment.members)))
        chosen = [sf for sf in ranked if sf.frame_id not in claimed][:quota]
        claimed.update(sf.frame_id for sf in chosen)
        picks.append(SegmentPicks(segment_id=segment.segment_id, picks=tuple(chosen)))
    return CentroidSelection(segments=tuple(picks))
