"""End-to-end pipeline: ingest, signatures, graph, segments, centroids, sentences.

Everything is deterministic: same inputs and same configuration give
byte-identical reports (stage timings are segregated under a ``timing`` key
so they can be excluded from comparisons).
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping

from framesum.centroids import CentroidSelection, FeatureWeights, compute_features, select_centroids
from framesum.evaluate import EvalReport, evaluate
from framesum.frames import Document, FrameFormatError, parse_frames_conll, parse_frames_jsonl
from framesum.generate import GeneratedSentence, assemble_summary
from framesum.graph import FrameGraph, build_graph, to_dot
from framesum.segments import Segmentation, create_segments, segment_stats
from framesum.signatures import FrameSignature, build_all_signatures
from framesum.wordnet import Lexicon, LexiconError, load_wordnet_dir

__all__ = [
    "ConfigError",
    "PipelineConfig",
    "RunReport",
    "PipelineRun",
    "load_config",
    "run_pipeline",
    "run_summarize",
    "run_evaluate",
    "run_inspect",
    "signatures_json",
]

logger = logging.getLogger("framesum")

INSPECT_TARGETS = ("signatures", "graph", "segments", "features")


class ConfigError(Exception):
    """Invalid configuration; names the offending key."""

    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(f"{key}: {message}")


@dataclass(frozen=True)
class PipelineConfig:
    """Every tunable of the pipeline, with the documented defaults."""

    wordnet_dir: Path | None = None
    expansion_depth: int = 1
    lexical_weight: float = 1.0  # config key "lambda"
    top_fraction: float = 0.15  # config key "rho"
    centroid_fraction: float = 0.2  # config key "phi"
    weights: FeatureWeights = field(default_factory=FeatureWeights)
    merge_overlaps: bool = False
    keep_modifiers: bool = False

    def validate(self) -> "PipelineConfig":
        if self.expansion_depth < 1:
            raise ConfigError("expansion_depth", "must be a positive integer")
        if self.lexical_weight < 0:
            raise ConfigError("lambda", "must be >= 0")
        if not 0 < self.top_fraction <= 1:
            raise ConfigError("rho", "must be in (0, 1]")
        if not 0 < self.centroid_fraction <= 1:
            raise ConfigError("phi", "must be in (0, 1]")
        return self


def _parse_bool(raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {raw!r}")


def _parse_positive_int(raw: str) -> int:
    value = int(raw)
    return value


# config key -> (attribute path, parser)
_CONFIG_KEYS = {
    "wordnet_dir": ("wordnet_dir", Path),
    "expansion_depth": ("expansion_depth", _parse_positive_int),
    "lambda": ("lexical_weight", float),
    "rho": ("top_fraction", float),
    "phi": ("centroid_fraction", float),
    "w_in": ("weights.w_in", float),
    "w_out": ("weights.w_out", float),
    "w_pos": ("weights.w_pos", float),
    "w_len": ("weights.w_len", float),
    "w_ne": ("weights.w_ne", float),
    "merge_overlaps": ("merge_overlaps", _parse_bool),
    "keep_modifiers": ("keep_modifiers", _parse_bool),
}


def _read_config_file(path: Path) -> dict[str, str]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError("config", f"cannot read {path}: {exc}") from None
    entries: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError("config", f"{path}:{lineno}: expected key=value")
        key, _, value = stripped.partition("=")
        entries[key.strip()] = value.strip()
    return entries


def _apply(config: PipelineConfig, key: str, raw: object) -> PipelineConfig:
    if key not in _CONFIG_KEYS:
        raise ConfigError(key, "unknown configuration key")
    attr, parser = _CONFIG_KEYS[key]
    value = raw
    if isinstance(raw, str):
        try:
            value = parser(raw)
        except ValueError as exc:
            raise ConfigError(key, f"cannot parse {raw!r}: {exc}") from None
    if attr.startswith("weights."):
        weights = replace(config.weights, **{attr.split(".", 1)[1]: value})
        return replace(config, weights=weights)
    return replace(config, **{attr: value})


def load_config(
    config_path: str | Path | None = None,
    overrides: Mapping[str, object] | None = None,
    env_wordnet: str | None = None,
) -> PipelineConfig:
    """Build a validated config: CLI overrides > config file > env > defaults."""
    config = PipelineConfig()
    if env_wordnet:
        config = replace(config, wordnet_dir=Path(env_wordnet))
    if config_path is not None:
        for key, raw in _read_config_file(Path(config_path)).items():
            config = _apply(config, key, raw)
    for key, raw in (overrides or {}).items():
        if raw is not None:
            config = _apply(config, key, raw)
    return config.validate()


def _load_lexicon(config: PipelineConfig) -> Lexicon:
    if config.wordnet_dir is None:
        raise ConfigError("wordnet_dir", "no WordNet directory configured "
                          "(flag --wordnet, config key wordnet_dir, or FRAMESUM_WORDNET)")
    try:
        return load_wordnet_dir(config.wordnet_dir)
    except OSError as exc:
        raise LexiconError(f"cannot load WordNet from {config.wordnet_dir}: {exc}") from None


def _parse_document(frames_path: str | Path, fmt: str) -> Document:
    if fmt not in ("jsonl", "conll"):
        raise ValueError(f"unknown frames format {fmt!r}")
    try:
        text = Path(frames_path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FrameFormatError(f"cannot read {frames_path}: {exc}") from None
    return parse_frames_jsonl(text) if fmt == "jsonl" else parse_frames_conll(text)


@dataclass(frozen=True)
class RunReport:
    """Counts, summary sentences, stage timings, optional evaluation."""

    sentence_count: int
    frame_count: int
    edge_count: int
    segment_count: int
    centroid_count: int
    summary: tuple[str, ...]
    timing: Mapping[str, float]
    evaluation: EvalReport | None = None
    signatures: tuple[FrameSignature, ...] | None = None

    def to_json_dict(self, include_timing: bool = True) -> dict:
        payload: dict = {
            "counts": {
                "sentences": self.sentence_count,
                "frames": self.frame_count,
                "edges": self.edge_count,
                "segments": self.segment_count,
                "centroids": self.centroid_count,
            },
            "summary": list(self.summary),
            "evaluation": self.evaluation.to_json_dict() if self.evaluation else None,
        }
        if self.signatures is not None:
            payload["signatures"] = [_signature_json_dict(s) for s in self.signatures]
        if include_timing:
            payload["timing"] = dict(self.timing)
        return payload

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_json_dict(include_timing), indent=2, sort_keys=True) + "\n"


@dataclass(frozen=True)
class PipelineRun:
    """All intermediate products of one summarize run, for dumps and tests."""

    document: Document
    lexicon: Lexicon
    signatures: list[FrameSignature]
    graph: FrameGraph
    segmentation: Segmentation
    selection: CentroidSelection
    sentences: list[GeneratedSentence]
    report: RunReport


class _Stopwatch:
    def __init__(self):
        self.laps: dict[str, float] = {}
        self._last = time.perf_counter()

    def lap(self, name: str):
        now = time.perf_counter()
        self.laps[name] = now - self._last
        self._last = now
        logger.info("stage %s finished in %.3fs", name, self.laps[name])


def run_pipeline(
    config: PipelineConfig,
    frames_path: str | Path,
    fmt: str = "jsonl",
    include_signatures: bool = False,
) -> PipelineRun:
    """Run every stage and keep the intermediates."""
    watch = _Stopwatch()
    lexicon = _load_lexicon(config)
    watch.lap("lexicon")
    document = _parse_document(frames_path, fmt)
    watch.lap("ingest")
    signatures = build_all_signatures(document, lexicon, config.expansion_depth)
    watch.lap("signatures")
    graph = build_graph(signatures, config.top_fraction, config.lexical_weight)
    watch.lap("graph")
    segmentation = create_segments(document, graph, merge_overlaps=config.merge_overlaps)
    watch.lap("segments")
    selection = select_centroids(
        document, graph, segmentation, config.weights, config.centroid_fraction
    )
    watch.lap("centroids")
    sentences = assemble_summary(selection, document, keep_modifiers=config.keep_modifiers)
    watch.lap("sentences")
    report = RunReport(
        sentence_count=len(document.sentences),
        frame_count=len(document.frames),
        edge_count=len(graph.edges),
        segment_count=len(segmentation.segments),
        centroid_count=len(selection.selected_frame_ids()),
        summary=tuple(s.text for s in sentences),
        timing=dict(watch.laps),
        signatures=tuple(signatures) if include_signatures else None,
    )
    return PipelineRun(
        document=document,
        lexicon=lexicon,
        signatures=signatures,
        graph=graph,
        segmentation=segmentation,
        selection=selection,
        sentences=sentences,
        report=report,
    )


def run_summarize(
    config: PipelineConfig,
    frames_path: str | Path,
    fmt: str = "jsonl",
    include_signatures: bool = False,
) -> RunReport:
    """Full pipeline, returning just the report."""
    return run_pipeline(config, frames_path, fmt, include_signatures).report


def run_evaluate(
    config: PipelineConfig,
    system_frames_path: str | Path,
    reference_frames_path: str | Path,
    fmt: str = "jsonl",
) -> EvalReport:
    """Score the system summary's frames against the reference's frames.

    Both files go through the same ingestion and signature pipeline with the
    same lexicon; every frame of the system file is treated as a centroid.
    """
    lexicon = _load_lexicon(config)
    system_doc = _parse_document(system_frames_path, fmt)
    reference_doc = _parse_document(reference_frames_path, fmt)
    system_sigs = build_all_signatures(system_doc, lexicon, config.expansion_depth)
    reference_sigs = build_all_signatures(reference_doc, lexicon, config.expansion_depth)
    return evaluate(system_sigs, reference_sigs, config.lexical_weight)


def _synset_id_str(sid) -> str:
    pos, offset = sid
    return f"{offset:08d}-{pos.value}"


def _signature_json_dict(sig: FrameSignature) -> dict:
    return {
        "frame_id": sig.frame_id,
        "noun_synsets": sorted(_synset_id_str(s) for s in sig.noun_synsets),
        "verb_synsets": sorted(_synset_id_str(s) for s in sig.verb_synsets),
        "arg_lemmas": sorted(sig.arg_lemmas),
        "verb_lemma": sig.verb_lemma,
    }


def signatures_json(signatures: list[FrameSignature]) -> str:
    return json.dumps([_signature_json_dict(s) for s in signatures], indent=2, sort_keys=True) + "\n"


def run_inspect(
    config: PipelineConfig, frames_path: str | Path, what: str, fmt: str = "jsonl"
) -> str:
    """Dump one intermediate representation without running the later stages."""
    if what not in INSPECT_TARGETS:
        raise ValueError(f"unknown inspect target {what!r} (choose from {INSPECT_TARGETS})")
    lexicon = _load_lexicon(config)
    document = _parse_document(frames_path, fmt)
    signatures = build_all_signatures(document, lexicon, config.expansion_depth)
    if what == "signatures":
        return signatures_json(signatures)
    graph = build_graph(signatures, config.top_fraction, config.lexical_weight)
    if what == "graph":
        return to_dot(graph)
    if what == "features":
        rows = []
        for frame_id in graph.nodes:
            features = compute_features(document, graph, frame_id)
            rows.append(
                {
                    "frame_id": frame_id,
                    "in_degree": features.in_degree,
                    "out_degree": features.out_degree,
                    "position": features.position,
                    "length": features.length,
                    "named_entities": features.named_entities,
                }
            )
        return json.dumps(rows, indent=2, sort_keys=True) + "\n"
    segmentation = create_segments(document, graph, merge_overlaps=config.merge_overlaps)
    stats = segment_stats(segmentation, graph)
    rows = [
        {
            "segment_id": segment.segment_id,
            "members": list(segment.members),
            "size": size,
            "internal_edges": internal,
        }
        for segment, (size, internal) in zip(segmentation.segments, stats)
    ]
    return json.dumps(rows, indent=2, sort_keys=True) + "\n"
