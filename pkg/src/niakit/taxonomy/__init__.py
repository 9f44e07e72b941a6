"""Goal-oriented catalogue of nature-inspired algorithms plus the
rule-based recommender that maps abstract problem descriptors onto it."""

from .model import (
    LEVEL_TREE,
    Taxonomy,
    TaxonomyEntry,
    TaxonomyPath,
    bundled_taxonomy,
    load_taxonomy,
    loads_taxonomy,
    serialize_taxonomy,
    validate_prefix,
)
from .recommend import (
    COOPERATIONS,
    DATA_REGIMES,
    GOAL_TAGS,
    IMPLEMENTED_BOOST,
    MODALITIES,
    ProblemDescriptor,
    Recommendation,
    RecommendationItem,
    Rule,
    RuleTable,
    bundled_rules,
    load_rules,
    triz_map,
)

__all__ = [
    "COOPERATIONS",
    "DATA_REGIMES",
    "GOAL_TAGS",
    "IMPLEMENTED_BOOST",
    "LEVEL_TREE",
    "MODALITIES",
    "ProblemDescriptor",
    "Recommendation",
    "RecommendationItem",
    "Rule",
    "RuleTable",
    "Taxonomy",
    "TaxonomyEntry",
    "TaxonomyPath",
    "bundled_rules",
    "bundled_taxonomy",
    "load_rules",
    "load_taxonomy",
    "loads_taxonomy",
    "serialize_taxonomy",
    "triz_map",
    "validate_prefix",
]
