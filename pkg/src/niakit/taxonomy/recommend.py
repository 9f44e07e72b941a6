"""Rule-based recommendation of nature-inspired algorithms.

The pipeline runs in four steps: (1) the concrete problem is abstracted
into a descriptor of controlled-vocabulary tags, (2) a rule table maps
the tags to a conceptual goal path in the catalogue, (3) the catalogue
entries under the matched paths are retrieved, (4) candidates are ranked
with implemented algorithms boosted and each one carries the rationale
of the rule that scored it.

Rule tables ship as JSON::

    {"rules": [
        {"name": str,
         "weight": number in [0, 0.8],
         "goal_tags_any": [tag, ...],            # required, nonempty
         "modality_any": [modality, ...],        # optional
         "cooperation_any": [cooperation, ...],  # optional
         "data_regime_any": [regime, ...],       # optional
         "path": [level1, ...],                  # goal prefix, 1-4 levels
         "rationale": str}
    ]}

Weights stop at 0.8 because an implemented algorithm's score is
weight * 1.25 and scores must stay within [0, 1]. Scaling every weight
by the same positive factor rescales all scores equally, so the ranking
order never depends on the absolute weight scale.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..errors import SchemaError, UnmappedDescriptor
from .model import Taxonomy, TaxonomyEntry, TaxonomyPath, bundled_taxonomy, validate_prefix

GOAL_TAGS = frozenset(
    {
        "parameter-search",
        "route-finding",
        "packing",
        "structure-selection",
        "survival-filtering",
        "scheduling",
        "forecasting-fit",
        "resource-allocation",
    }
)
MODALITIES = frozenset({"continuous", "combinatorial-permutation", "combinatorial-subset", "mixed"})
COOPERATIONS = frozenset({"single-agent", "population", "team-search"})
DATA_REGIMES = frozenset({"data-rich", "data-scarce"})

IMPLEMENTED_BOOST = 1.25
MAX_RULE_WEIGHT = 1.0 / IMPLEMENTED_BOOST  # keeps every score inside [0, 1]


def _normalize_tag(tag: str) -> str:
    return tag.strip().casefold()


@dataclass(frozen=True)
class ProblemDescriptor:
    """Abstracted problem statement over the controlled vocabulary."""

    goal_tags: frozenset[str]
    modality: str
    cooperation: str | None = None
    data_regime: str | None = None

    def __post_init__(self):
        tags = frozenset(_normalize_tag(t) for t in self.goal_tags)
        if not tags:
            raise SchemaError("goal_tags must be nonempty")
        unknown = tags - GOAL_TAGS
        if unknown:
            raise SchemaError(f"unknown goal tags {sorted(unknown)}; legal: {sorted(GOAL_TAGS)}")
        object.__setattr__(self, "goal_tags", tags)
        object.__setattr__(self, "modality", _normalize_tag(self.modality))
        if self.modality not in MODALITIES:
            raise SchemaError(f"unknown modality {self.modality!r}; legal: {sorted(MODALITIES)}")
        for name, legal in (("cooperation", COOPERATIONS), ("data_regime", DATA_REGIMES)):
            value = getattr(self, name)
            if value is not None:
                value = _normalize_tag(value)
                object.__setattr__(self, name, value)
                if value not in legal:
                    raise SchemaError(f"unknown {name} {value!r}; legal: {sorted(legal)}")


@dataclass(frozen=True)
class Rule:
    name: str
    weight: float
    goal_tags_any: frozenset[str]
    path: tuple[str, ...]
    rationale: str
    modality_any: frozenset[str] | None = None
    cooperation_any: frozenset[str] | None = None
    data_regime_any: frozenset[str] | None = None

    def __post_init__(self):
        if not self.name.strip():
            raise SchemaError("rule name must be nonempty")
        if not 0.0 <= self.weight <= MAX_RULE_WEIGHT:
            raise SchemaError(
                f"rule {self.name!r}: weight {self.weight} outside [0, {MAX_RULE_WEIGHT}] "
                f"(scores are weight x {IMPLEMENTED_BOOST} for implemented algorithms and must stay in [0, 1])"
            )
        if not self.goal_tags_any:
            raise SchemaError(f"rule {self.name!r}: goal_tags_any must be nonempty")
        unknown = self.goal_tags_any - GOAL_TAGS
        if unknown:
            raise SchemaError(f"rule {self.name!r}: unknown goal tags {sorted(unknown)}")
        for attr, legal in (
            ("modality_any", MODALITIES),
            ("cooperation_any", COOPERATIONS),
            ("data_regime_any", DATA_REGIMES),
        ):
            vals = getattr(self, attr)
            if vals is not None and vals - legal:
                raise SchemaError(f"rule {self.name!r}: unknown {attr} values {sorted(vals - legal)}")
        validate_prefix(self.path)

    def conditions(self) -> int:
        """How many facets this rule constrains (for specificity reports)."""
        extra = sum(
            1 for v in (self.modality_any, self.cooperation_any, self.data_regime_any) if v is not None
        )
        return 1 + extra

    def matches(self, d: ProblemDescriptor) -> bool:
        if not (d.goal_tags & self.goal_tags_any):
            return False
        if self.modality_any is not None and d.modality not in self.modality_any:
            return False
        if self.cooperation_any is not None and (
            d.cooperation is None or d.cooperation not in self.cooperation_any
        ):
            return False
        if self.data_regime_any is not None and (
            d.data_regime is None or d.data_regime not in self.data_regime_any
        ):
            return False
        return True

    def overlap(self, d: ProblemDescriptor) -> int:
        """How many of this rule's conditions the descriptor satisfies."""
        score = 1 if d.goal_tags & self.goal_tags_any else 0
        if self.modality_any is not None and d.modality in self.modality_any:
            score += 1
        if self.cooperation_any is not None and d.cooperation in self.cooperation_any:
            score += 1
        if self.data_regime_any is not None and d.data_regime in self.data_regime_any:
            score += 1
        return score

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "weight": self.weight,
            "goal_tags_any": sorted(self.goal_tags_any),
            "path": list(self.path),
            "rationale": self.rationale,
        }
        for attr in ("modality_any", "cooperation_any", "data_regime_any"):
            vals = getattr(self, attr)
            if vals is not None:
                d[attr] = sorted(vals)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Rule":
        try:
            return cls(
                name=d["name"],
                weight=float(d["weight"]),
                goal_tags_any=frozenset(d["goal_tags_any"]),
                path=tuple(d["path"]),
                rationale=d.get("rationale", ""),
                modality_any=frozenset(d["modality_any"]) if "modality_any" in d else None,
                cooperation_any=frozenset(d["cooperation_any"]) if "cooperation_any" in d else None,
                data_regime_any=frozenset(d["data_regime_any"]) if "data_regime_any" in d else None,
            )
        except KeyError as exc:
            raise SchemaError(f"rule is missing field {exc}") from None


@dataclass(frozen=True)
class RuleTable:
    rules: tuple[Rule, ...]

    def __post_init__(self):
        names = [r.name for r in self.rules]
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise SchemaError(f"duplicate rule names {dupes}")

    def to_dict(self) -> dict:
        return {"rules": [r.to_dict() for r in self.rules]}

    @classmethod
    def from_dict(cls, d: dict) -> "RuleTable":
        if not isinstance(d, dict) or not isinstance(d.get("rules"), list):
            raise SchemaError("rule document must be an object with a 'rules' list")
        return cls(tuple(Rule.from_dict(r) for r in d["rules"]))

    def scaled(self, factor: float) -> "RuleTable":
        """Same rules with every weight multiplied by ``factor`` (which
        must keep them legal); ranking order is invariant under this."""
        return RuleTable(
            tuple(
                Rule(
                    name=r.name,
                    weight=r.weight * factor,
                    goal_tags_any=r.goal_tags_any,
                    path=r.path,
                    rationale=r.rationale,
                    modality_any=r.modality_any,
                    cooperation_any=r.cooperation_any,
                    data_regime_any=r.data_regime_any,
                )
                for r in self.rules
            )
        )


def load_rules(source: str) -> RuleTable:
    with open(source, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{source}: not valid JSON ({exc})") from None
    return RuleTable.from_dict(doc)


_BUNDLED_RULES: RuleTable | None = None


def bundled_rules() -> RuleTable:
    global _BUNDLED_RULES
    if _BUNDLED_RULES is None:
        from importlib import resources

        with resources.files("niakit.taxonomy.data").joinpath("rules.json").open(
            encoding="utf-8"
        ) as fh:
            _BUNDLED_RULES = RuleTable.from_dict(json.load(fh))
    return _BUNDLED_RULES


@dataclass(frozen=True)
class RecommendationItem:
    entry: TaxonomyEntry
    matched_path: tuple[str, ...]
    score: float
    rationale: str


@dataclass(frozen=True)
class Recommendation:
    items: tuple[RecommendationItem, ...]
    conceptual_goal: TaxonomyPath | tuple[str, ...]

    def top(self, k: int) -> list[RecommendationItem]:
        return list(self.items[:k])

    def names(self) -> list[str]:
        return [it.entry.name for it in self.items]


def triz_map(
    descriptor: ProblemDescriptor,
    taxonomy: Taxonomy | None = None,
    rules: RuleTable | None = None,
) -> Recommendation:
    """Map a problem descriptor to ranked algorithm candidates.

    Raises UnmappedDescriptor when no rule matches; the message names the
    closest rules by how many of their conditions the descriptor meets.
    """
    taxonomy = taxonomy if taxonomy is not None else bundled_taxonomy()
    rules = rules if rules is not None else bundled_rules()

    matched = [r for r in rules.rules if r.matches(descriptor)]
    if not matched:
        nearest = sorted(rules.rules, key=lambda r: (-r.overlap(descriptor), r.name))[:3]
        hints = ", ".join(f"{r.name} ({r.overlap(descriptor)}/{r.conditions()} conditions)" for r in nearest)
        raise UnmappedDescriptor(f"no rule covers this descriptor; nearest rules: {hints}")

    goal_rule = max(matched, key=lambda r: r.weight)  # ties: earliest in the table
    conceptual_goal = goal_rule.path

    best: dict[str, tuple[float, str, tuple[str, ...], TaxonomyEntry]] = {}
    for rule in matched:
        for entry in taxonomy.children(rule.path):
            boost = IMPLEMENTED_BOOST if entry.implemented else 1.0
            score = rule.weight * boost
            rationale = f"rule {rule.name}: {rule.rationale}" if rule.rationale else f"rule {rule.name}"
            old = best.get(entry.name)
            if old is None or score > old[0]:
                best[entry.name] = (score, rationale, rule.path, entry)

    ranked = sorted(best.values(), key=lambda t: (-t[0], t[3].name.casefold()))
    items = tuple(
        RecommendationItem(entry=e, matched_path=path, score=min(score, 1.0), rationale=why)
        for score, why, path, e in ranked
    )
    return Recommendation(items=items, conceptual_goal=conceptual_goal)
