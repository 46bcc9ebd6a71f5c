"""Batch corpus analysis: manifests, per-text results, grouping, classification.

A manifest lists texts with their language and genre.  Each text is fitted
independently; failures become error rows rather than aborting the batch,
and output order always matches manifest order.  Per-language mean I and
per-genre mean alpha anchor a nearest-line classifier in the invariant
plane.
"""

from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from wordlength.errors import (
    DomainError,
    DuplicateIdError,
    EmptyTableError,
    ManifestError,
    UnknownLanguageError,
    WordlengthError,
)
from wordlength.estimate import FitResult, fit_text
from wordlength.model import DEFAULT_LAMBDA1_MIN
from wordlength.rules import BUILTIN_LANGUAGES, LanguageRules, load_rules, tokenize

RESULT_COLUMNS = (
    "text_id", "language", "genre", "n_tokens", "n_types", "lambda0",
    "lambda1", "I", "alpha", "chi_square", "dof", "clipped", "unreliable",
    "error",
)

MANIFEST_COLUMNS = ("text_id", "path", "language", "genre")


@dataclass(frozen=True)
class ManifestEntry:
    """One text to analyze: id, file path, language code, genre label."""

    text_id: str
    path: Path
    language: str
    genre: str


@dataclass(frozen=True)
class TextResult:
    """Per-text analysis record; numeric fields are None on error rows."""

    text_id: str
    language: str
    genre: str
    n_tokens: int | None = None
    n_types: int | None = None
    lambda0: float | None = None
    lambda1: float | None = None
    i_lang: float | None = None
    alpha: float | None = None
    chi_square: float | None = None
    dof: int | None = None
    clipped: bool | None = None
    unreliable: bool | None = None
    error: str | None = None


@dataclass(frozen=True)
class ReferenceTable:
    """Anchor lines of the invariant plane: language -> I, genre -> alpha."""

    language_anchors: dict[str, float] = field(
        default_factory=lambda: {"en": 0.08, "it": 0.84, "de": 0.34})
    genre_anchors: dict[str, float] = field(
        default_factory=lambda: {"letters": 0.6, "scientific": 0.8, "newspaper": 0.8})

    def __post_init__(self):
        for code, i_val in self.language_anchors.items():
            if i_val < 0:
                raise DomainError(f"language anchor {code}: I must be >= 0")
        for label, a_val in self.genre_anchors.items():
            if not 0.0 <= a_val <= 1.0:
                raise DomainError(f"genre anchor {label}: alpha must be in [0, 1]")


@dataclass(frozen=True)
class ClassifyResult:
    """Nearest anchors for a point, with distances and any exact ties."""

    language: str
    genre: str
    language_distance: float
    genre_distance: float
    language_ties: tuple[str, ...]
    genre_ties: tuple[str, ...]


@dataclass(frozen=True)
class GroupMeans:
    """Unweighted group means over usable rows, plus groups with none."""

    language_i: dict[str, float]
    genre_alpha: dict[str, float]
    empty_languages: frozenset[str]
    empty_genres: frozenset[str]


def load_manifest(
    path: str | Path, languages: tuple[str, ...] | None = None
) -> list[ManifestEntry]:
    """Load and validate a manifest (CSV with header, or a JSON array).

    Relative text paths are resolved against the manifest's directory.
    Languages must have a rule pack (built-in by default; pass `languages`
    when supplying custom packs to analyze_corpus).
    """
    p = Path(path)
    known = BUILTIN_LANGUAGES if languages is None else languages
    if p.suffix.lower() == ".json":
        rows = _manifest_rows_json(p)
    else:
        rows = _manifest_rows_csv(p)

    entries: list[ManifestEntry] = []
    seen: set[str] = set()
    for lineno, row in rows:
        missing = [c for c in MANIFEST_COLUMNS if not row.get(c)]
        if missing:
            raise ManifestError(f"missing fields: {', '.join(missing)}", line=lineno)
        if row["text_id"] in seen:
            raise DuplicateIdError(f"duplicate text_id {row['text_id']!r}")
        seen.add(row["text_id"])
        if row["language"] not in known:
            raise UnknownLanguageError(
                f"text {row['text_id']!r}: no rule pack for language "
                f"{row['language']!r}")
        text_path = Path(row["path"])
        if not text_path.is_absolute():
            text_path = p.parent / text_path
        entries.append(ManifestEntry(
            text_id=row["text_id"], path=text_path,
            language=row["language"], genre=row["genre"]))
    return entries


def _manifest_rows_csv(p: Path):
    with open(p, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise ManifestError("empty manifest", line=1)
        unknown = set(reader.fieldnames) - set(MANIFEST_COLUMNS)
        if unknown or set(MANIFEST_COLUMNS) - set(reader.fieldnames):
            raise ManifestError(
                f"header must be {','.join(MANIFEST_COLUMNS)}", line=1)
        rows = []
        for row in reader:
            if None in row.values() or None in row:
                raise ManifestError("wrong number of fields", line=reader.line_num)
            rows.append((reader.line_num, row))
        return rows


def _manifest_rows_json(p: Path):
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ManifestError(str(exc.msg), line=exc.lineno) from exc
    if not isinstance(data, list) or not all(isinstance(r, dict) for r in data):
        raise ManifestError("JSON manifest must be an array of objects", line=1)
    return [(i, {k: str(v) for k, v in row.items()})
            for i, row in enumerate(data, start=1)]


def analyze_text(
    entry: ManifestEntry,
    rules: LanguageRules,
    lambda1_min: float = DEFAULT_LAMBDA1_MIN,
) -> TextResult:
    """Fit one manifest entry; any failure is captured in the error field."""
    try:
        text = entry.path.read_text(encoding="utf-8")
        stream = tokenize(text, rules, source_id=entry.text_id)
        fit = fit_text(stream, rules, lambda1_min)
    except (WordlengthError, OSError, UnicodeDecodeError) as exc:
        return TextResult(
            text_id=entry.text_id, language=entry.language, genre=entry.genre,
            error=str(exc))
    return _from_fit(entry, fit)


def _from_fit(entry: ManifestEntry, fit: FitResult) -> TextResult:
    return TextResult(
        text_id=entry.text_id,
        language=entry.language,
        genre=entry.genre,
        n_tokens=fit.n_tokens,
        n_types=fit.n_types,
        lambda0=fit.params.lambda0,
        lambda1=fit.params.lambda1,
        i_lang=fit.invariants.i_lang,
        alpha=fit.invariants.alpha,
        chi_square=fit.chi_square,
        dof=fit.dof,
        clipped=fit.clipped,
        unreliable=fit.unreliable,
    )


def analyze_corpus(
    entries: list[ManifestEntry],
    lambda1_min: float = DEFAULT_LAMBDA1_MIN,
    rules_by_language: dict[str, LanguageRules] | None = None,
    max_workers: int = 1,
) -> list[TextResult]:
    """Analyze every manifest entry, preserving manifest order.

    Entries are independent, so analysis may run on several threads; the
    result list matches the manifest order regardless of max_workers.
    """
    packs = dict(rules_by_language or {})
    for entry in entries:
        if entry.language not in packs:
            packs[entry.language] = load_rules(entry.language)

    def run(entry: ManifestEntry) -> TextResult:
        return analyze_text(entry, packs[entry.language], lambda1_min)

    if max_workers > 1 and len(entries) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(run, entries))
    return [run(entry) for entry in entries]


def usable(result: TextResult) -> bool:
    """Rows that count toward group means: fitted and not unreliable."""
    return result.error is None and not result.unreliable


def group_means(results: list[TextResult]) -> GroupMeans:
    """Unweighted mean I per language and mean alpha per genre."""
    lang_values: dict[str, list[float]] = {}
    genre_values: dict[str, list[float]] = {}
    for r in results:
        lang_values.setdefault(r.language, [])
        genre_values.setdefault(r.genre, [])
        if usable(r):
            lang_values[r.language].append(r.i_lang)
            genre_values[r.genre].append(r.alpha)
    return GroupMeans(
        language_i={k: sum(v) / len(v) for k, v in lang_values.items() if v},
        genre_alpha={k: sum(v) / len(v) for k, v in genre_values.items() if v},
        empty_languages=frozenset(k for k, v in lang_values.items() if not v),
        empty_genres=frozenset(k for k, v in genre_values.items() if not v),
    )


def classify(
    i_lang: float, alpha: float, table: ReferenceTable | None = None
) -> ClassifyResult:
    """Nearest vertical (language) and horizontal (genre) anchor lines.

    Ties on distance are reported and broken by lexicographic anchor key.
    """
    table = table if table is not None else ReferenceTable()
    if not table.language_anchors or not table.genre_anchors:
        raise EmptyTableError("reference table has no anchors")
    language, lang_dist, lang_ties = _nearest(table.language_anchors, i_lang)
    genre, genre_dist, genre_ties = _nearest(table.genre_anchors, alpha)
    return ClassifyResult(
        language=language, genre=genre,
        language_distance=lang_dist, genre_distance=genre_dist,
        language_ties=lang_ties, genre_ties=genre_ties,
    )


def _nearest(anchors: dict[str, float], value: float) -> tuple[str, float, tuple[str, ...]]:
    distances = {key: abs(value - anchor) for key, anchor in anchors.items()}
    best = min(distances.values())
    ties = tuple(sorted(k for k, d in distances.items() if d == best))
    return ties[0], best, ties


def load_reference_table(path: str | Path) -> ReferenceTable:
    """Built-in anchors extended/overridden by a key-value file.

    Lines have the form `language.<code> = I` or `genre.<label> = alpha`.
    """
    table = ReferenceTable()
    languages = dict(table.language_anchors)
    genres = dict(table.genre_anchors)
    p = Path(path)
    for lineno, raw in enumerate(p.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ManifestError("expected 'key = value'", line=lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        try:
            number = float(value.strip())
        except ValueError as exc:
            raise ManifestError(f"bad number {value.strip()!r}", line=lineno) from exc
        if key.startswith("language."):
            languages[key[len("language."):]] = number
        elif key.startswith("genre."):
            genres[key[len("genre."):]] = number
        else:
            raise ManifestError(f"unknown key {key!r}", line=lineno)
    return ReferenceTable(language_anchors=languages, genre_anchors=genres)


def _fmt(value, decimals: int = 6) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{decimals}f}" if math.isfinite(value) else "inf"
    return str(value)


def _result_cells(r: TextResult) -> list[str]:
    return [
        r.text_id, r.language, r.genre, _fmt(r.n_tokens), _fmt(r.n_types),
        _fmt(r.lambda0), _fmt(r.lambda1), _fmt(r.i_lang), _fmt(r.alpha),
        _fmt(r.chi_square), _fmt(r.dof), _fmt(r.clipped), _fmt(r.unreliable),
        r.error or "",
    ]


def write_results(results: list[TextResult], path: str | Path,
                  format: str = "csv") -> None:
    """Persist results with stable column order and 6-decimal floats."""
    p = Path(path)
    if format == "csv":
        with open(p, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(RESULT_COLUMNS)
            for r in results:
                writer.writerow(_result_cells(r))
    elif format == "json":
        payload = [dict(zip(RESULT_COLUMNS, _json_cells(r))) for r in results]
        p.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    else:
        raise DomainError(f"unknown results format {format!r}")


def _json_cells(r: TextResult) -> list:
    def num(v):
        if v is None or isinstance(v, (bool, int)):
            return v
        return round(v, 6) if math.isfinite(v) else float("inf")

    return [
        r.text_id, r.language, r.genre, r.n_tokens, r.n_types,
        num(r.lambda0), num(r.lambda1), num(r.i_lang), num(r.alpha),
        num(r.chi_square), r.dof, r.clipped, r.unreliable, r.error,
    ]


def read_results(path: str | Path, format: str | None = None) -> list[TextResult]:
    """Read back a results file written by write_results."""
    p = Path(path)
    fmt = format or ("json" if p.suffix.lower() == ".json" else "csv")
    if fmt == "json":
        rows = json.loads(p.read_text(encoding="utf-8"))
        return [_row_to_result({k: row.get(k) for k in RESULT_COLUMNS}) for row in rows]
    with open(p, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        return [_row_to_result(_parse_csv_row(row)) for row in reader]


def _parse_csv_row(row: dict) -> dict:
    out: dict = dict(row)
    for key in ("n_tokens", "n_types", "dof"):
        out[key] = int(row[key]) if row[key] else None
    for key in ("lambda0", "lambda1", "I", "alpha", "chi_square"):
        out[key] = float(row[key]) if row[key] else None
    for key in ("clipped", "unreliable"):
        out[key] = {"true": True, "false": False, "": None}[row[key]]
    out["error"] = row["error"] or None
    return out


def _row_to_result(row: dict) -> TextResult:
    return TextResult(
        text_id=row["text_id"], language=row["language"], genre=row["genre"],
        n_tokens=row["n_tokens"], n_types=row["n_types"],
        lambda0=row["lambda0"], lambda1=row["lambda1"],
        i_lang=row["I"], alpha=row["alpha"], chi_square=row["chi_square"],
        dof=row["dof"], clipped=row["clipped"], unreliable=row["unreliable"],
        error=row["error"])
