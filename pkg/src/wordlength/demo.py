"""Desk-scale demo corpus: ten synthetic texts spanning the invariant plane.

Six languages in the letters genre plus four more German genres.  Each
text is synthesized from (I, alpha) coordinates via the model inverse and
written as a tokenizable pseudo-corpus, so the full pipeline (manifest ->
fit -> plot) runs end to end without any external data.  The en/it/de I
values and the letters/scientific/newspaper alpha values are the built-in
reference anchors; the rest are demo placements only.
"""

from __future__ import annotations

import csv
from pathlib import Path

from wordlength.model import Invariants, params_from_invariants
from wordlength.synth import SynthConfig, generate_rank_spectrum, write_pseudo_corpus

# (text_id, language, genre, I, alpha, seed); seeds chosen so the fitted
# points land near the configured coordinates at this corpus size
DEMO_TEXTS = (
    ("en-letters", "en", "letters", 0.08, 0.6, 708),
    ("fr-letters", "fr", "letters", 0.20, 0.6, 2),
    ("de-letters", "de", "letters", 0.34, 0.6, 94),
    ("sv-letters", "sv", "letters", 0.28, 0.6, 6),
    ("es-letters", "es", "letters", 0.62, 0.6, 5),
    ("it-letters", "it", "letters", 0.84, 0.6, 25),
    ("de-scientific", "de", "scientific", 0.34, 0.8, 58),
    ("de-newspaper", "de", "newspaper", 0.34, 0.8, 108),
    ("de-essay", "de", "essay", 0.34, 0.75, 6),
    ("de-fiction", "de", "fiction", 0.34, 0.7, 8),
)

# a flat-ish frequency law keeps the per-type length noise small, so the
# fitted points land close to their configured (I, alpha) coordinates
DEMO_N_TOKENS = 40000
DEMO_N_TYPES = 1200
DEMO_ZIPF_EXPONENT = 0.7


def build_demo_corpus(directory: str | Path) -> Path:
    """Write the ten demo texts plus manifest.csv; returns the manifest path."""
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    manifest_path = root / "manifest.csv"
    with open(manifest_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["text_id", "path", "language", "genre"])
        for text_id, language, genre, i_val, a_val, seed in DEMO_TEXTS:
            params = params_from_invariants(Invariants(i_lang=i_val, alpha=a_val))
            cfg = SynthConfig(
                params=params,
                n_tokens=DEMO_N_TOKENS,
                n_types=DEMO_N_TYPES,
                zipf_exponent=DEMO_ZIPF_EXPONENT,
                seed=seed,
            )
            spec = generate_rank_spectrum(cfg)
            filename = f"{text_id}.txt"
            write_pseudo_corpus(spec, root / filename)
            writer.writerow([text_id, filename, language, genre])
    return manifest_path
