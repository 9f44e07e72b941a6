"""End-goal catalogue of nature-inspired algorithms.

Algorithms are classified by what the mimicked natural system is trying
to achieve, four levels deep: domain (Biology or NonBiology), primary
goal, optional sub-goal, optional behavior. NonBiology algorithms are
classified by primary goal only, so their deeper levels stay empty.

The catalogue ships as a JSON file with this schema::

    {"entries": [
        {"name": str,
         "paths": [[level1, level2, ...], ...],   # first path is canonical
         "implemented": bool,
         "aliases": [str, ...],
         "note": str}                             # optional
    ]}

An algorithm filed in several places is a single entry with several
paths. Aliases cover abbreviations and historical misspellings; lookup
is case-insensitive over names and aliases alike.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..errors import IllegalPath, NotFound, SchemaError

BIOLOGY = "Biology"
NON_BIOLOGY = "NonBiology"

#: legal level values: level1 -> level2 -> level3 -> tuple of level4
LEVEL_TREE: dict[str, dict[str, dict[str, tuple[str, ...]]]] = {
    BIOLOGY: {
        "ResourceSeeking": {
            "FoodSeeking": ("Hunting", "Migration", "HerdBehavior"),
            "HabitatSeeking": (),
        },
        "Survival": {"Self": (), "Offspring": (), "Dependant": ()},
        "Reproduction": {"MatingSearching": (), "Evolution": (), "Pollination": ()},
    },
    NON_BIOLOGY: {"Gravity": {}, "EntropyReduction": {}, "LawOfEquilibrium": {}},
}


@dataclass(frozen=True)
class TaxonomyPath:
    level1: str
    level2: str
    level3: str | None = None
    level4: str | None = None

    def __post_init__(self):
        self.validate()

    def validate(self):
        if self.level1 not in LEVEL_TREE:
            raise IllegalPath(f"unknown domain {self.level1!r}; legal: {sorted(LEVEL_TREE)}")
        goals = LEVEL_TREE[self.level1]
        if self.level2 not in goals:
            raise IllegalPath(f"{self.level2!r} is not a goal under {self.level1}; legal: {sorted(goals)}")
        if self.level4 is not None and self.level3 is None:
            raise IllegalPath("a behavior (level 4) requires a sub-goal (level 3)")
        subgoals = goals[self.level2]
        if self.level3 is not None:
            if self.level1 == NON_BIOLOGY:
                raise IllegalPath("NonBiology paths are classified by primary goal only")
            if self.level3 not in subgoals:
                raise IllegalPath(
                    f"{self.level3!r} is not a sub-goal under {self.level2}; legal: {sorted(subgoals)}"
                )
            behaviors = subgoals[self.level3]
            if self.level4 is not None and self.level4 not in behaviors:
                raise IllegalPath(
                    f"{self.level4!r} is not a behavior under {self.level3}; legal: {sorted(behaviors)}"
                )

    def as_tuple(self) -> tuple[str, ...]:
        parts = [self.level1, self.level2]
        if self.level3 is not None:
            parts.append(self.level3)
            if self.level4 is not None:
                parts.append(self.level4)
        return tuple(parts)

    @classmethod
    def from_names(cls, names) -> "TaxonomyPath":
        names = list(names)
        if not 2 <= len(names) <= 4:
            raise IllegalPath(f"a full path has 2 to 4 levels, got {len(names)}")
        padded = names + [None] * (4 - len(names))
        return cls(*padded)

    def extends(self, prefix: tuple[str, ...]) -> bool:
        mine = self.as_tuple()
        return mine[: len(prefix)] == prefix

    def __str__(self) -> str:
        return "/".join(self.as_tuple())


def validate_prefix(names) -> tuple[str, ...]:
    """Check a 1..4 level prefix against the level tree; returns it as a
    tuple. Raises IllegalPath when any step is not a legal child."""
    names = tuple(names)
    if not 1 <= len(names) <= 4:
        raise IllegalPath(f"a path prefix has 1 to 4 levels, got {len(names)}")
    if names[0] not in LEVEL_TREE:
        raise IllegalPath(f"unknown domain {names[0]!r}; legal: {sorted(LEVEL_TREE)}")
    if len(names) >= 2:
        TaxonomyPath.from_names(names)
    return names


@dataclass(frozen=True)
class TaxonomyEntry:
    name: str
    paths: tuple[TaxonomyPath, ...]
    implemented: bool = False
    aliases: tuple[str, ...] = ()
    note: str = ""

    def __post_init__(self):
        if not self.name.strip():
            raise SchemaError("entry name must be nonempty")
        if not self.paths:
            raise SchemaError(f"{self.name}: entry needs at least one path")

    @property
    def path(self) -> TaxonomyPath:
        """Canonical (first) path."""
        return self.paths[0]

    def all_names(self) -> tuple[str, ...]:
        return (self.name,) + self.aliases

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "paths": [list(p.as_tuple()) for p in self.paths],
            "implemented": self.implemented,
            "aliases": sorted(self.aliases),
        }
        if self.note:
            d["note"] = self.note
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "TaxonomyEntry":
        try:
            paths = tuple(TaxonomyPath.from_names(p) for p in d["paths"])
            return cls(
                name=d["name"],
                paths=paths,
                implemented=bool(d.get("implemented", False)),
                aliases=tuple(d.get("aliases", ())),
                note=d.get("note", ""),
            )
        except KeyError as exc:
            raise SchemaError(f"entry is missing field {exc}") from None


@dataclass(frozen=True)
class Taxonomy:
    """Immutable after construction; all query methods are read-only."""

    entries: tuple[TaxonomyEntry, ...]
    _by_key: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        seen: dict[str, str] = {}
        for entry in self.entries:
            for label in entry.all_names():
                key = label.casefold().strip()
                if key in seen:
                    raise SchemaError(
                        f"name or alias {label!r} of {entry.name!r} collides with {seen[key]!r}"
                    )
                seen[key] = entry.name
                self._by_key[key] = entry

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, name_or_alias: str) -> TaxonomyEntry:
        key = name_or_alias.casefold().strip()
        if key not in self._by_key:
            raise NotFound(f"no algorithm named {name_or_alias!r} in the catalogue")
        return self._by_key[key]

    def children(self, path_prefix) -> list[TaxonomyEntry]:
        """All entries whose path extends the prefix, sorted by name.

        The prefix may be a TaxonomyPath or a sequence of level names.
        """
        if isinstance(path_prefix, TaxonomyPath):
            prefix = path_prefix.as_tuple()
        else:
            prefix = validate_prefix(path_prefix)
        hits = [e for e in self.entries if any(p.extends(prefix) for p in e.paths)]
        return sorted(hits, key=lambda e: e.name.casefold())

    def implemented_entries(self) -> list[TaxonomyEntry]:
        return sorted((e for e in self.entries if e.implemented), key=lambda e: e.name.casefold())

    def to_dict(self) -> dict:
        ordered = sorted(self.entries, key=lambda e: e.name.casefold())
        return {"entries": [e.to_dict() for e in ordered]}

    @classmethod
    def from_dict(cls, d: dict) -> "Taxonomy":
        if not isinstance(d, dict) or "entries" not in d or not isinstance(d["entries"], list):
            raise SchemaError("catalogue document must be an object with an 'entries' list")
        return cls(tuple(TaxonomyEntry.from_dict(e) for e in d["entries"]))


def serialize_taxonomy(taxonomy: Taxonomy) -> str:
    """Canonical form: entries sorted by case-folded name, keys sorted,
    two-space indent, trailing newline. load followed by serialize
    reproduces a canonical file byte for byte."""
    return json.dumps(taxonomy.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_taxonomy(source: str) -> Taxonomy:
    """Load a catalogue from a JSON file path."""
    with open(source, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{source}: not valid JSON ({exc})") from None
    return Taxonomy.from_dict(doc)


def loads_taxonomy(text: str) -> Taxonomy:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON ({exc})") from None
    return Taxonomy.from_dict(doc)


_BUNDLED: Taxonomy | None = None


def bundled_taxonomy() -> Taxonomy:
    """The catalogue shipped with the package (loaded once, then cached)."""
    global _BUNDLED
    if _BUNDLED is None:
        from importlib import resources

        with resources.files("niakit.taxonomy.data").joinpath("taxonomy.json").open(
            encoding="utf-8"
        ) as fh:
            _BUNDLED = Taxonomy.from_dict(json.load(fh))
    return _BUNDLED
