"""Dataset loading, validation, cost computation, and output text preprocessing.

An input is an identified sequence of HTTP actions with the raw page text
recorded for each action and a map of per-relation action counts used as the
cost surrogate. Inputs whose total cost is zero are dropped at load time: they
would never be exercised and cannot contribute to the minimized set.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field

from .stemming import STOPWORDS, stem

logger = logging.getLogger(__name__)


class ValidationError(ValueError):
    """Raised when a dataset file violates the schema or an invariant."""


@dataclass(frozen=True)
class ParamValue:
    kind: str  # "text" or "int"
    text_value: str | None = None
    int_value: int | None = None

    def __post_init__(self):
        if self.kind == "text":
            if self.text_value is None or self.int_value is not None:
                raise ValidationError("text parameter must carry exactly a text value")
        elif self.kind == "int":
            if self.int_value is None or self.text_value is not None:
                raise ValidationError("int parameter must carry exactly an int value")
        else:
            raise ValidationError(f"unknown parameter kind: {self.kind!r}")


@dataclass(frozen=True)
class Action:
    method: str  # "GET" or "POST"
    url_words: tuple[str, ...]
    params: tuple[tuple[str, ParamValue], ...] = ()

    def __post_init__(self):
        if self.method not in ("GET", "POST"):
            raise ValidationError(f"unknown request method: {self.method!r}")
        if len(self.url_words) < 2:
            raise ValidationError("a URL must consist of at least two words")
        if any((not w) or ("/" in w) for w in self.url_words):
            raise ValidationError("URL words must be non-empty and contain no '/'")


def split_url(url: str) -> tuple[str, ...]:
    """Split a URL string into its word sequence: once on '://', then on '/'."""
    scheme, sep, rest = url.partition("://")
    if not sep:
        raise ValidationError(f"URL without scheme separator: {url!r}")
    words = [scheme] + [w for w in rest.split("/") if w]
    return tuple(words)


@dataclass(frozen=True)
class InputRecord:
    id: int
    actions: tuple[Action, ...]
    outputs: tuple[str, ...]
    mr_action_counts: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.id <= 0:
            raise ValidationError(f"input id must be positive, got {self.id}")
        if not self.actions:
            raise ValidationError(f"input {self.id} has an empty action list")
        if len(self.outputs) != len(self.actions):
            raise ValidationError(
                f"input {self.id}: {len(self.outputs)} outputs for "
                f"{len(self.actions)} actions"
            )
        if any(n < 0 for n in self.mr_action_counts.values()):
            raise ValidationError(f"input {self.id}: negative MR action count")

    def __len__(self) -> int:
        return len(self.actions)


def compute_cost(record: InputRecord) -> int:
    """Total number of actions the considered relations would execute."""
    return sum(record.mr_action_counts.values())


@dataclass(frozen=True)
class Dataset:
    inputs: tuple[InputRecord, ...]
    vulnerabilities: tuple[tuple[str, tuple[frozenset[int], ...]], ...] = ()

    def costs(self) -> dict[int, int]:
        return {rec.id: compute_cost(rec) for rec in self.inputs}

    def by_id(self) -> dict[int, InputRecord]:
        return {rec.id: rec for rec in self.inputs}


def _parse_param(obj: dict) -> tuple[str, ParamValue]:
    name = obj["name"]
    if obj["type"] == "str":
        return name, ParamValue(kind="text", text_value=str(obj["value"]))
    if obj["type"] == "int":
        return name, ParamValue(kind="int", int_value=int(obj["value"]))
    raise ValidationError(f"unknown parameter type: {obj['type']!r}")


def _parse_action(obj: dict) -> Action:
    params = tuple(_parse_param(p) for p in obj.get("params", []))
    return Action(
        method=obj["method"],
        url_words=split_url(obj["url"]),
        params=params,
    )


def load_dataset(path) -> Dataset:
    """Load and validate a dataset file, dropping zero-cost inputs."""
    with open(path, encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"malformed dataset file {path}: {exc}") from exc

    records = []
    seen_ids = set()
    for obj in raw.get("inputs", []):
        rec = InputRecord(
            id=int(obj["id"]),
            actions=tuple(_parse_action(a) for a in obj["actions"]),
            outputs=tuple(obj["outputs"]),
            mr_action_counts={str(k): int(v) for k, v in obj.get("mr_action_counts", {}).items()},
        )
        if rec.id in seen_ids:
            raise ValidationError(f"duplicate input id {rec.id}")
        seen_ids.add(rec.id)
        if compute_cost(rec) == 0:
            logger.warning("dropping input %d: zero cost, never exercised", rec.id)
            continue
        records.append(rec)

    vulns = []
    for obj in raw.get("vulnerabilities", []):
        groups = tuple(frozenset(int(i) for i in grp) for grp in obj["detecting_groups"])
        for grp in groups:
            missing = grp - seen_ids
            if missing:
                raise ValidationError(
                    f"vulnerability {obj['id']!r} references unknown inputs {sorted(missing)}"
                )
        vulns.append((str(obj["id"]), groups))

    return Dataset(inputs=tuple(records), vulnerabilities=tuple(vulns))


# --- output text preprocessing ---

_TAG_RE = re.compile(r"<[^>]*>")
_TOKEN_RE = re.compile(r"[^0-9a-z]+")


@dataclass(frozen=True)
class TokenDoc:
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class SharedFilter:
    shared_tokens: frozenset[str]
    document_frequency_threshold: float


def _tokenize(raw: str) -> list[str]:
    text = _TAG_RE.sub(" ", raw).lower()
    return [tok for tok in _TOKEN_RE.split(text) if tok]


def build_shared_filter(docs, threshold: float = 0.8) -> SharedFilter:
    """Tokens present in at least `threshold` of the documents.

    Boilerplate shared across most pages (menus, version strings, dates)
    cannot characterize a specific page, so it is filtered out before any
    further processing.
    """
    docs = list(docs)
    if not docs:
        raise ValidationError("cannot build a shared-content filter from zero documents")
    if not (0.0 < threshold <= 1.0):
        raise ValidationError(f"threshold must be in (0, 1], got {threshold}")
    freq: dict[str, int] = {}
    for raw in docs:
        for tok in set(_tokenize(raw)):
            freq[tok] = freq.get(tok, 0) + 1
    shared = frozenset(tok for tok, n in freq.items() if n / len(docs) >= threshold)
    return SharedFilter(shared_tokens=shared, document_frequency_threshold=threshold)


def preprocess_output(raw: str, shared: SharedFilter | None = None) -> TokenDoc:
    """Strip markup, tokenize, drop shared/stop/numeric tokens, then stem."""
    shared_tokens = shared.shared_tokens if shared is not None else frozenset()
    out = []
    for tok in _tokenize(raw):
        if tok in shared_tokens:
            continue
        if tok in STOPWORDS:
            continue
        if tok.isdigit():
            continue
        out.append(stem(tok))
    return TokenDoc(tokens=tuple(out))
