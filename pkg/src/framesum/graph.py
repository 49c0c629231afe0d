"""Pairwise frame similarity and the pruned weighted frame graph.

Two frames are compared on two axes: overlap of their argument synsets plus
exact argument-lemma matches (the A score), and overlap of their verb synsets
plus exact verb-lemma match (the V score).  The (A, V) zero pattern sorts a
pair into one of four match classes, highest priority first; edges keep the
top fraction of non-irrelevant pairs, class-first, and point from the
document-earlier frame to the later one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Sequence

from framesum.signatures import FrameSignature

__all__ = ["MatchClass", "PairScore", "Edge", "FrameGraph", "classify", "score_pair", "build_graph", "to_dot"]


class MatchClass(IntEnum):
    """Priority of a frame pair by which of the two scores are non-zero."""

    ARGS_AND_VERB = 1
    ARGS_ONLY = 2
    VERB_ONLY = 3
    NONE = 4


@dataclass(frozen=True)
class PairScore:
    i: int
    j: int
    a_score: float
    v_score: float
    match_class: MatchClass

    @property
    def weight(self) -> float:
        return self.a_score + self.v_score


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    weight: float
    match_class: MatchClass


@dataclass(frozen=True)
class FrameGraph:
    """Directed weighted graph over frame ids; edges follow document order."""

    nodes: tuple[int, ...]
    edges: tuple[Edge, ...]

    def out_targets(self, frame_id: int) -> list[int]:
        return [e.target for e in self.edges if e.source == frame_id]

    def out_degree(self, frame_id: int) -> int:
        return sum(1 for e in self.edges if e.source == frame_id)

    def in_degree(self, frame_id: int) -> int:
        return sum(1 for e in self.edges if e.target == frame_id)


def classify(a_score: float, v_score: float) -> MatchClass:
    if a_score < 0 or v_score < 0:
        raise ValueError("scores must be non-negative")
    if a_score != 0 and v_score != 0:
        return MatchClass.ARGS_AND_VERB
    if a_score != 0:
        return MatchClass.ARGS_ONLY
    if v_score != 0:
        return MatchClass.VERB_ONLY
    return MatchClass.NONE


def score_pair(si: FrameSignature, sj: FrameSignature, lexical_weight: float = 1.0) -> PairScore:
    """Score a pair of signatures; symmetric in its two arguments.

    ``lexical_weight`` scales the exact-word-overlap bonus that complements
    the synset intersections.
    """
    if lexical_weight < 0:
        raise ValueError("lexical_weight must be >= 0")
    a = len(si.noun_synsets & sj.noun_synsets) + lexical_weight * len(
        si.arg_lemmas & sj.arg_lemmas
    )
    v = len(si.verb_synsets & sj.verb_synsets) + lexical_weight * (
        1.0 if si.verb_lemma == sj.verb_lemma else 0.0
    )
    return PairScore(i=si.frame_id, j=sj.frame_id, a_score=a, v_score=v, match_class=classify(a, v))


def build_graph(
    signatures: Sequence[FrameSignature],
    top_fraction: float = 0.15,
    lexical_weight: float = 1.0,
) -> FrameGraph:
    """Score all pairs, drop the no-match class, keep the top fraction.

    Pairs are ordered by (match class, weight descending, id pair) and the
    first ``ceil(top_fraction * P)`` survive, where P counts pairs with any
    match at all.  Signatures must be in document order; each kept pair
    becomes one edge from the earlier frame to the later one.
    """
    if not 0 < top_fraction <= 1:
        raise ValueError("top_fraction must be in (0, 1]")
    scored: list[PairScore] = []
    for p in range(len(signatures)):
        for q in range(p + 1, len(signatures)):
            pair = score_pair(signatures[p], signatures[q], lexical_weight)
            if pair.match_class is not MatchClass.NONE:
                scored.append(pair)
    scored.sort(key=lambda pair: (pair.match_class, -pair.weight, pair.i, pair.j))
    kept = scored[: math.ceil(top_fraction * len(scored))]
    return FrameGraph(
        nodes=tuple(s.frame_id for s in signatures),
        edges=tuple(Edge(p.i, p.j, p.weight, p.match_class) for p in kept),
    )


def to_dot(graph: FrameGraph, segmentation=None) -> str:
    """Render the graph as DOT; with a segmentation, segments become clusters.

    A frame belonging to several overlapping segments is drawn inside the
    lowest-numbered one (DOT clusters cannot share nodes).
    """
    lines = ["digraph frames {"]
    placed: set[int] = set()
    if segmentation is not None:
        for segment in segmentation.segments:
            lines.append(f"  subgraph cluster_{segment.segment_id} {{")
            lines.append(f'    label="segment {segment.segment_id}";')
            for frame_id in segment.members:
                if frame_id not in placed:
                    lines.append(f"    f{frame_id};")
                    placed.add(frame_id)
            lines.append("  }")
    for frame_id in graph.nodes:
        if frame_id not in placed:
            lines.append(f"  f{frame_id};")
    for edge in graph.edges:
        lines.append(
            f'  f{edge.source} -> f{edge.target} '
            f'[label="w={edge.weight:g} c={int(edge.match_class)}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
