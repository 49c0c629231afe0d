"""Grouping frames into segments by chasing edge targets in document order.

The default behavior follows the growth procedure literally: walk the frames
in document order; a frame that already sits in a segment pulls its edge
targets into that segment (the lowest-numbered one when several contain it),
otherwise it founds a new segment seeded with itself and its targets.  The
literal procedure never merges, so segments can overlap and weakly-connected
frames can land in different segments; ``merge_overlaps=True`` unions
overlapping segments afterwards, which yields the weakly-connected
components.
"""

from __future__ import annotations

from dataclasses import dataclass

from framesum.frames import Document
from framesum.graph import FrameGraph

__all__ = ["Segment", "Segmentation", "create_segments", "segment_stats"]


@dataclass(frozen=True)
class Segment:
    segment_id: int
    members: tuple[int, ...]  # insertion order, duplicate-free

    def __contains__(self, frame_id: int) -> bool:
        return frame_id in self.members


@dataclass(frozen=True)
class Segmentation:
    segments: tuple[Segment, ...]

    def containing(self, frame_id: int) -> list[int]:
        return [s.segment_id for s in self.segments if frame_id in s]


def create_segments(doc: Document, graph: FrameGraph, merge_overlaps: bool = False) -> Segmentation:
    """Group the document's frames by following out-edges, in document order."""
    doc_ids = [f.frame_id for f in doc.frames]
    if set(graph.nodes) != set(doc_ids):
        raise ValueError("graph nodes do not match document frame ids")

    targets: dict[int, list[int]] = {fid: [] for fid in doc_ids}
    for edge in graph.edges:
        targets[edge.source].append(edge.target)

    members: list[list[int]] = []
    member_sets: list[set[int]] = []
    for fid in doc_ids:
        home = next((k for k, s in enumerate(member_sets) if fid in s), None)
        if home is None:
            home = len(members)
            members.append([fid])
            member_sets.append({fid})
        for target in targets[fid]:
            if target not in member_sets[home]:
                members[home].append(target)
                member_sets[home].add(target)

    if merge_overlaps:
        members = _merge_overlapping(members, doc_ids)

    return Segmentation(
        segments=tuple(Segment(k, tuple(ms)) for k, ms in enumerate(members))
    )


def _merge_overlapping(members: list[list[int]], doc_ids: list[int]) -> list[list[int]]:
    # Union-find over frame ids; two frames end up together iff some chain of
    # overlapping segments connects them.
    parent = {fid: fid for fid in doc_ids}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for group in members:
        for other in group[1:]:
            parent[find(other)] = find(group[0])

    merged: dict[int, list[int]] = {}
    for fid in doc_ids:  # document order keeps the output deterministic
        merged.setdefault(find(fid), []).append(fid)
    return list(merged.values())


def segment_stats(segmentation: Segmentation, graph: FrameGraph) -> list[tuple[int, int]]:
    """Per segment: (member count, number of edges internal to the segment)."""
    stats = []
    for segment in segmentation.segments:
        inside = set(segment.members)
        internal = sum(1 for e in graph.edges if e.source in inside and e.target in inside)
        stats.append((len(segment.members), internal))
    return stats
