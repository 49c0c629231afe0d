"""Frame-based extract-and-compress summarization.

The pipeline consumes documents whose sentences were already annotated with
predicate-argument frames, widens each frame's nouns and verb through a
lexicon's one-level taxonomy, links similar frames in a pruned weighted
graph, grows segments along the edges, picks the feature-richest frame(s) of
each segment, and compresses those frames into summary sentences.  A
companion metric scores a generated summary against a reference by best-match
frame similarity.
"""

from framesum.centroids import (
    CentroidSelection,
    FeatureRanges,
    FeatureWeights,
    FrameFeatures,
    ScoredFrame,
    SegmentPicks,
    compute_features,
    feature_score,
    select_centroids,
)
from framesum.evaluate import (
    EvalReport,
    MatchResult,
    QualityRatings,
    evaluate,
    format_quality_table,
    frame_sim,
    parse_quality_table,
    quality_stats,
)
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
from framesum.generate import GeneratedSentence, assemble, assemble_summary
from framesum.graph import (
    Edge,
    FrameGraph,
    MatchClass,
    PairScore,
    build_graph,
    classify,
    score_pair,
    to_dot,
)
from framesum.pipeline import (
    ConfigError,
    PipelineConfig,
    PipelineRun,
    RunReport,
    load_config,
    run_evaluate,
    run_inspect,
    run_pipeline,
    run_summarize,
)
from framesum.segments import Segment, Segmentation, create_segments, segment_stats
from framesum.signatures import FrameSignature, build_all_signatures, build_signature
from framesum.wordnet import (
    DanglingPointerError,
    Lexicon,
    LexiconError,
    LexiconFormatError,
    Pos,
    Relation,
    Synset,
    SynsetId,
    check_pointer_symmetry,
    expand_one_level,
    fixture_wordnet_dir,
    load_lexicon,
    load_wordnet_dir,
    normalize_lemma,
    synsets_of,
)

__version__ = "0.1.0"
